#include "catalan/forms.hpp"

#include <algorithm>

#include "catalan/recurrence.hpp"
#include "catalan/series.hpp"

namespace catalan {

BigRat PartialFractionForm::coefficient_sum() const {
    BigRat s(0);
    for (const auto& [p, c] : terms) s += c;
    return s;
}

PartialFractionForm decompose(const std::vector<QuarterInt>& numer_roots,
                              const std::vector<QuarterInt>& denom_roots,
                              const BigRat& scale) {
    for (size_t i = 0; i < denom_roots.size(); ++i) {
        for (size_t j = i + 1; j < denom_roots.size(); ++j) {
            if (denom_roots[i] == denom_roots[j]) {
                throw DomainError("decompose: repeated denominator root " + denom_roots[i].str());
            }
        }
    }
    PartialFractionForm out;
    out.terms.reserve(denom_roots.size());
    for (const auto& p : denom_roots) {
        // coeff = scale * prod(p - r) / prod_{q != p}(p - q); differences of
        // quarter-integers are quarter-integers, so work over quadruples.
        BigInt num = 1, den = 1;
        long quarters = 0; // power of 4 deficit: each factor carries a 1/4
        for (const auto& r : numer_roots) {
            num *= (p - r).quadruple();
            --quarters;
        }
        for (const auto& q : denom_roots) {
            if (q == p) continue;
            den *= (p - q).quadruple();
            ++quarters;
        }
        BigRat c = scale * BigRat(num, den);
        if (quarters > 0) {
            c *= BigRat(pow2(2 * static_cast<unsigned long>(quarters)));
        } else if (quarters < 0) {
            c /= BigRat(pow2(2 * static_cast<unsigned long>(-quarters)));
        }
        out.terms.emplace_back(p, c);
    }
    return out;
}

PartialFractionForm r_kernel(long n) {
    if (n < 0) throw DomainError("r_kernel: n must be >= 0");
    const unsigned long un = static_cast<unsigned long>(n);
    BigRat scale(factorial(2 * un + 1), BigInt(8) * factorial(un) * factorial(un) *
                                            pow2(2 * un + 2));
    if (n % 2 == 1) scale = -scale;
    std::vector<QuarterInt> numer, denom;
    for (long j = 1; j <= n; ++j) {
        numer.push_back(QuarterInt::of_integer(j));
        numer.push_back(QuarterInt::of_integer(j));
    }
    for (long l = 0; l <= n; ++l) {
        denom.push_back(QuarterInt::from_quadruple(BigInt(2 * n + 3 - 4 * l))); // n/2 + 3/4 - l
    }
    for (long l = 0; l <= n; ++l) {
        denom.push_back(QuarterInt::from_quadruple(BigInt(2 * n + 1 - 4 * l))); // n/2 + 1/4 - l
    }
    return decompose(numer, denom, scale);
}

PartialFractionForm r_tilde_kernel(long n) {
    if (n < 1) throw DomainError("r_tilde_kernel: n must be >= 1");
    const unsigned long un = static_cast<unsigned long>(n);
    BigRat scale(factorial(2 * un), BigInt(2) * factorial(un - 1) * factorial(un - 1) *
                                        pow2(2 * un + 1));
    if (n % 2 == 1) scale = -scale;
    std::vector<QuarterInt> numer, denom;
    for (long j = 1; j <= n - 1; ++j) numer.push_back(QuarterInt::of_integer(j));
    for (long j = 1; j <= n; ++j) numer.push_back(QuarterInt::of_integer(j));
    for (long l = 0; l <= n; ++l) {
        denom.push_back(QuarterInt::from_quadruple(BigInt(2 * n + 1 - 4 * l))); // n/2 + 1/4 - l
    }
    for (long l = 0; l <= n - 1; ++l) {
        denom.push_back(QuarterInt::from_quadruple(BigInt(2 * n - 1 - 4 * l))); // n/2 - 1/4 - l
    }
    return decompose(numer, denom, scale);
}

LinearFormQG tails_to_form(const PartialFractionForm& pf) {
    if (!pf.coefficient_sum().is_zero()) {
        throw DomainError("tails_to_form: coefficients must sum to zero");
    }
    // Correction-sum ranges needed; prefix sums for the four lattice series.
    long max_pos3 = 0, max_neg3 = 0, max_pos1 = 0, max_neg1 = 0;
    struct Classified {
        long m;
        int type; // 3 for the 3/4-line, 1 for the 1/4-line
        BigRat c;
    };
    std::vector<Classified> cls;
    cls.reserve(pf.terms.size());
    for (const auto& [p, c] : pf.terms) {
        const BigInt q = p.quadruple();
        if (q % 2 == 0) {
            throw DomainError("tails_to_form: pole " + p.str() + " is not on the odd lattice");
        }
        const int r = p.quadruple_mod4(); // 1 or 3
        BigInt mz = (q - r) / 4;
        if (!mz.fits_slong_p()) throw DomainError("tails_to_form: pole out of range");
        const long m = mz.get_si();
        cls.push_back({m, r, c});
        if (r == 3) {
            if (m >= 0) max_pos3 = std::max(max_pos3, m);
            else max_neg3 = std::max(max_neg3, -m);
        } else {
            if (m >= 0) max_pos1 = std::max(max_pos1, m);
            else max_neg1 = std::max(max_neg1, -m);
        }
    }
    // S3[t] = sum_{j=1..t} 1/(4j-1)^2, T3[t] = sum_{k=0..t-1} 1/(4k+1)^2 (3/4-line)
    // S1[t] = sum_{j=1..t} 1/(4j-3)^2, T1[t] = sum_{k=0..t-1} 1/(4k+3)^2 (1/4-line)
    auto prefix = [](long count, long stride_offset, bool forward) {
        std::vector<BigRat> ps(static_cast<size_t>(count) + 1, BigRat(0));
        for (long t = 1; t <= count; ++t) {
            const long base = forward ? (4 * t + stride_offset) : (4 * t - stride_offset);
            ps[t] = ps[t - 1] + BigRat(BigInt(1), BigInt(base) * base);
        }
        return ps;
    };
    const auto S3 = prefix(max_pos3, 1, false);  // (4j-1)^2
    const auto T3 = prefix(max_neg3, -3, true);  // (4(t-1)+1)^2 via base = 4t-3
    const auto S1 = prefix(max_pos1, 3, false);  // (4j-3)^2
    const auto T1 = prefix(max_neg1, -1, true);  // (4(t-1)+3)^2 via base = 4t-1

    BigRat u3(0), u1(0), correction(0);
    const BigRat sixteen(16);
    for (const auto& cl : cls) {
        if (cl.type == 3) {
            u3 += sixteen * cl.c;
            if (cl.m >= 0) correction += cl.c * sixteen * S3[cl.m];
            else correction -= cl.c * sixteen * T3[-cl.m];
        } else {
            u1 += sixteen * cl.c;
            if (cl.m >= 0) correction += cl.c * sixteen * S1[cl.m];
            else correction -= cl.c * sixteen * T1[-cl.m];
        }
    }
    if (u3 != -u1) {
        throw DomainError("tails_to_form: lattice coefficients unbalanced");
    }
    return {u3, -correction};
}

ACoeffs partial_fraction_coefficients(long n) {
    if (n < 0) throw DomainError("partial_fraction_coefficients: n must be >= 0");
    const unsigned long un = static_cast<unsigned long>(n);
    ACoeffs out;
    out.a.reserve(un + 1);
    out.a_prime.reserve(un + 1);
    const int sign_a = (n % 2 == 0) ? 1 : -1;
    for (long l = 0; l <= n; ++l) {
        const unsigned long ul = static_cast<unsigned long>(l);
        // (2n+1)! / ((2l)! (2n-2l+1)!) = C(2n+1, 2l)
        const BigRat pa =
            integer_valued_poly(un, QuarterInt::from_quadruple(BigInt(2 * n + 3 - 4 * l)));
        BigRat al = BigRat(binomial(2 * un + 1, 2 * ul), 16) * pa * pa;
        out.a.push_back(sign_a > 0 ? al : -al);
        // (2n+1)! / ((2l+1)! (2n-2l)!) = C(2n+1, 2l+1)
        const BigRat pap =
            integer_valued_poly(un, QuarterInt::from_quadruple(BigInt(2 * n + 1 - 4 * l)));
        BigRat apl = BigRat(binomial(2 * un + 1, 2 * ul + 1), 16) * pap * pap;
        out.a_prime.push_back(sign_a > 0 ? -apl : apl);
    }
    return out;
}

LinearFormQG linear_form_original(long n) {
    const auto [A, Ap] = partial_fraction_coefficients(n);
    BigRat suma(0), sumap(0);
    for (const auto& x : A) suma += x;
    for (const auto& x : Ap) sumap += x;
    if (!(suma + sumap).is_zero()) {
        throw DomainError("linear_form_original: coefficient sums unbalanced");
    }
    const int sgn = (n % 2 == 0) ? 1 : -1;
    BigRat u = BigRat(16 * sgn) * suma;

    // Correction sums: split point m (resp. m') with offset eps (resp. 4-eps).
    const long m = (n + 1) / 2, mp = n / 2;
    const long eps = (n % 2 == 0) ? 1 : 3, epsp = 4 - eps;
    auto back_prefix = [](long count, long eps_) { // B[t] = sum_{mu=1..t} (4mu-eps)^-2
        std::vector<BigRat> ps(static_cast<size_t>(count) + 1, BigRat(0));
        for (long t = 1; t <= count; ++t) {
            const BigInt b(4 * t - eps_);
            ps[t] = ps[t - 1] + BigRat(BigInt(1), b * b);
        }
        return ps;
    };
    auto fwd_prefix = [](long count, long eps_) { // F[t] = sum_{mu=0..t-1} (4mu+eps)^-2
        std::vector<BigRat> ps(static_cast<size_t>(count) + 1, BigRat(0));
        for (long t = 1; t <= count; ++t) {
            const BigInt b(4 * (t - 1) + eps_);
            ps[t] = ps[t - 1] + BigRat(BigInt(1), b * b);
        }
        return ps;
    };
    const auto B = back_prefix(m, eps);
    const auto Bp = back_prefix(mp, epsp);
    const auto F = fwd_prefix(n - m > 0 ? n - m : 0, eps);
    const auto Fp = fwd_prefix(n - mp > 0 ? n - mp : 0, epsp);

    BigRat v(0);
    const BigRat sixteen(16);
    for (long l = 0; l < m; ++l) v -= sixteen * A[l] * B[m - l];
    for (long l = 0; l < mp; ++l) v -= sixteen * Ap[l] * Bp[mp - l];
    for (long l = m + 1; l <= n; ++l) v += sixteen * A[l] * F[l - m];
    for (long l = mp + 1; l <= n; ++l) v += sixteen * Ap[l] * Fp[l - mp];
    return {u, v};
}

LinearFormQG linear_form_tilde(long n) {
    if (n < 0) throw DomainError("linear_form_tilde: n must be >= 0");
    if (n == 0) return {BigRat(0), BigRat(-1)};
    return tails_to_form(r_tilde_kernel(n));
}

std::vector<LinearFormQG> tilde_sequence(long nmax) {
    if (nmax < 0) throw DomainError("tilde_sequence: nmax must be >= 0");
    std::vector<LinearFormQG> out;
    out.reserve(static_cast<size_t>(nmax) + 1);
    out.push_back(linear_form_tilde(0));
    if (nmax >= 1) out.push_back(linear_form_tilde(1));
    const Order2Rec rec = catalan_recurrence();
    for (long n = 1; n < nmax; ++n) {
        const BigRat c2(rec.c2.eval(BigInt(n)));
        const BigRat c1(rec.c1.eval(BigInt(n)));
        const BigRat c0(rec.c0.eval(BigInt(n)));
        out.push_back({(c1 * out[n].u + c0 * out[n - 1].u) / c2,
                       (c1 * out[n].v + c0 * out[n - 1].v) / c2});
    }
    return out;
}

BigRat linear_form_series_prefactor(long n) {
    // First surviving term of the defining series (index t = n):
    // (n!/8) (3n+1) n! (3n)!/(2n)! / prod_{j=0..n}(n+j+1/2)^3 * (-1)^n
    const unsigned long un = static_cast<unsigned long>(n);
    BigRat prod_half(1);
    for (long j = 0; j <= n; ++j) {
        prod_half *= BigRat(BigInt(2 * n + 2 * j + 1), 2);
    }
    BigRat t0 = BigRat(factorial(un), 8) * BigRat(3 * n + 1) * BigRat(factorial(un)) *
                BigRat(factorial(3 * un), factorial(2 * un)) /
                (prod_half * prod_half * prod_half);
    return (n % 2 == 0) ? t0 : -t0;
}

FormValue linear_form_value(long n, long precision_bits) {
    if (n < 0) throw DomainError("linear_form_value: n must be >= 0");
    if (precision_bits < HPReal::kMinBits) precision_bits = HPReal::kMinBits;
    const long a = 3 * n + 1;
    const BigRat b(2 * n + 1, 2), e(n + 1);
    std::vector<std::pair<BigRat, BigRat>> pairs(3, {b, BigRat(1 + a) - b});
    if (BigRat(1 + a) - e != e) pairs.emplace_back(e, BigRat(1 + a) - e);

    const BigRat t0 = linear_form_series_prefactor(n);
    // The tail bound scales by |t0|, which decays like 2^{-5n}; aim the
    // series target so the final absolute bound clears the precision goal.
    long target = precision_bits + 16;
    const WellPoisedSum s = wellpoised_alternating_sum(a, pairs, target);

    const BigRat exact = t0 * s.value;
    const BigRat bound = t0.abs() * s.tail_bound;
    FormValue out{HPReal(exact, precision_bits), HPReal(precision_bits), s.terms};
    // rounding of the exact rational into precision_bits is within one ulp
    HPReal ulp = HPReal::pow2(-precision_bits + 1, precision_bits) *
                 (out.value.abs() + HPReal::pow2(-precision_bits, precision_bits));
    out.error_bound = HPReal(bound, precision_bits) + ulp;
    return out;
}

namespace {

// prod over (coeff1 * x + coeff0) factors, exact polynomial in x
std::vector<BigRat> poly_product(const std::vector<std::pair<long, long>>& linear) {
    std::vector<BigRat> p{BigRat(1)};
    for (const auto& [c1, c0] : linear) {
        std::vector<BigRat> q(p.size() + 1, BigRat(0));
        for (size_t i = 0; i < p.size(); ++i) {
            q[i] += p[i] * BigRat(c0);
            q[i + 1] += p[i] * BigRat(c1);
        }
        p = std::move(q);
    }
    return p;
}

} // namespace

std::vector<GrowthRow> growth_diagnostics(const std::vector<LinearFormQG>& seq,
                                          const HPReal& g_ref, long stride) {
    if (stride < 1) throw DomainError("growth_diagnostics: stride must be >= 1");
    const long bits = g_ref.precision_bits();
    std::vector<GrowthRow> rows;
    for (size_t n = 1; n < seq.size(); n += static_cast<size_t>(stride)) {
        GrowthRow row{static_cast<long>(n), HPReal(bits), HPReal(bits)};
        const HPReal u(seq[n].u, bits), v(seq[n].v, bits);
        const HPReal r = (u * g_ref - v).abs();
        if (!u.is_zero()) row.u_root = u.abs().nth_root(n);
        if (!r.is_zero()) row.r_root = r.nth_root(n);
        rows.push_back(row);
    }
    return rows;
}

namespace {

long cert_bound(long n, long slack) {
    if (n == 0) return slack;
    long lg = 0;
    while ((1L << lg) < 2 * n) ++lg; // ceil(log2(2n))
    return 4 * n + lg + slack;
}

CertificateRow examine_denominator(long n, const BigRat& x, long slack) {
    CertificateRow row;
    row.n = n;
    row.bound = cert_bound(n, slack);
    const BigInt den = x.den();
    row.odd_part = odd_part(den);
    row.pow2_denominator = (row.odd_part == 1);
    row.exponent = (den == 1) ? 0 : static_cast<long>(ord2(den));
    row.within_bound = row.pow2_denominator && row.exponent <= row.bound;
    row.within_4n = row.pow2_denominator && row.exponent <= 4 * n;
    return row;
}

} // namespace

std::vector<CertificateRow> u_certificates(const std::vector<LinearFormQG>& seq, long slack) {
    std::vector<CertificateRow> rows;
    rows.reserve(seq.size());
    for (size_t n = 0; n < seq.size(); ++n) {
        rows.push_back(examine_denominator(static_cast<long>(n), seq[n].u, slack));
    }
    return rows;
}

std::vector<CertificateRow> v_certificates(const std::vector<LinearFormQG>& seq, long slack) {
    std::vector<CertificateRow> rows;
    rows.reserve(seq.size());
    BigInt d = 1; // lcm(1..2n-1), updated incrementally
    for (size_t n = 0; n < seq.size(); ++n) {
        if (n >= 1) {
            for (long k = 2 * static_cast<long>(n) - 2; k <= 2 * static_cast<long>(n) - 1; ++k) {
                if (k >= 2) mpz_lcm_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k));
            }
        }
        rows.push_back(
            examine_denominator(static_cast<long>(n), seq[n].v * BigRat(d * d), slack));
    }
    return rows;
}

FormValue linear_form_value_direct(long n, long terms, long precision_bits) {
    if (n < 0) throw DomainError("linear_form_value_direct: n must be >= 0");
    if (terms < 4) throw DomainError("linear_form_value_direct: need at least 4 terms");
    // |term(t+1)/term(t)| <= 1 for all t >= t_dec, certified by
    // shifted-coefficient positivity of den(t) - num(t):
    //   num = (2t+n+3)(t+1)(t+2n+1)(2t+1)^3
    //   den = (2t+n+1)(t+1-n)(t+n+1)(2t+2n+3)^3
    const auto num_p = poly_product(
        {{2, n + 3}, {1, 1}, {1, 2 * n + 1}, {2, 1}, {2, 1}, {2, 1}});
    const auto den_p = poly_product(
        {{2, n + 1}, {1, 1 - n}, {1, n + 1}, {2, 2 * n + 3}, {2, 2 * n + 3}, {2, 2 * n + 3}});
    std::vector<BigRat> diff(den_p);
    for (size_t i = 0; i < num_p.size(); ++i) diff[i] -= num_p[i];
    long t_dec = n + 1;
    while (t_dec < (1L << 30) && !poly_nonneg_shifted(diff, BigRat(t_dec))) t_dec *= 2;
    if (n + terms <= t_dec) {
        throw PrecisionError("linear_form_value_direct: need more than " +
                             std::to_string(t_dec - n) + " terms for a certified bound");
    }

    const long wp = precision_bits + 64;
    HPReal sum(wp);
    HPReal t(linear_form_series_prefactor(n), wp);
    for (long k = 0; k < terms; ++k) {
        sum = sum + t;
        const long tt = n + k;
        const BigRat cube(BigInt(2 * tt + 1), BigInt(2 * tt + 2 * n + 3));
        const BigRat ratio = BigRat(2 * tt + n + 3, 2 * tt + n + 1) *
                             BigRat(tt + 1, tt + 1 - n) * BigRat(tt + 2 * n + 1, tt + n + 1) *
                             cube * cube * cube;
        mpfr_mul_q(t.raw(), t.raw(), ratio.raw().get_mpq_t(), MPFR_RNDN);
        mpfr_neg(t.raw(), t.raw(), MPFR_RNDN);
    }
    FormValue out{HPReal(precision_bits), HPReal(precision_bits), terms};
    mpfr_set(out.value.raw(), sum.raw(), MPFR_RNDN);
    // alternating with certified decreasing magnitudes: first omitted term bounds
    HPReal slop = HPReal::pow2(-(wp - 8), wp) * HPReal(terms, wp) *
                  (sum.abs() + t.abs() + HPReal(1L, wp));
    mpfr_set(out.error_bound.raw(), (t.abs() + slop).raw(), MPFR_RNDU);
    return out;
}

} // namespace catalan
