#include "catalan/series.hpp"

#include <algorithm>
#include <cmath>

namespace catalan {

namespace {

using Poly = std::vector<BigRat>; // coefficient list, index = degree

Poly poly_mul(const Poly& p, const Poly& q) {
    Poly r(p.size() + q.size() - 1, BigRat(0));
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        for (size_t j = 0; j < q.size(); ++j) {
            if (!q[j].is_zero()) r[i + j] += p[i] * q[j];
        }
    }
    return r;
}

Poly poly_mul_trunc(const Poly& p, const Poly& q, size_t len) {
    Poly r(len, BigRat(0));
    for (size_t i = 0; i < p.size() && i < len; ++i) {
        if (p[i].is_zero()) continue;
        for (size_t j = 0; j < q.size() && i + j < len; ++j) {
            if (!q[j].is_zero()) r[i + j] += p[i] * q[j];
        }
    }
    return r;
}

// prod over list of (x + c) as an exact polynomial
Poly poly_from_roots_neg(const std::vector<BigRat>& cs) {
    Poly r{BigRat(1)};
    for (const auto& c : cs) r = poly_mul(r, Poly{c, BigRat(1)});
    return r;
}

BigRat sum_of(const std::vector<BigRat>& v) {
    BigRat s(0);
    for (const auto& x : v) s += x;
    return s;
}

// Is there a k0 in {start, 2*start, 4*start, ...} <= cap with p(x+k0) having
// all nonnegative coefficients?  Returns k0 or -1.
long find_nonneg_shift(const Poly& p, long start, long cap) {
    long k0 = std::max(start, 1L);
    while (k0 <= cap) {
        if (poly_nonneg_shifted(p, BigRat(k0))) return k0;
        k0 *= 2;
    }
    return -1;
}

} // namespace

bool poly_nonneg_shifted(const std::vector<BigRat>& p, const BigRat& shift) {
    Poly c = p;
    if (c.empty()) return true;
    // Taylor shift in place: after the passes, c holds coefficients of p(x+shift)
    for (size_t j = 0; j + 1 < c.size(); ++j) {
        for (size_t i = c.size() - 1; i >= j + 1; --i) {
            c[i - 1] += shift * c[i];
            if (i == j + 1) break;
        }
    }
    for (const auto& x : c) {
        if (x.sign() < 0) return false;
    }
    return true;
}

PfqResult pfq_truncated(const std::vector<BigRat>& upper,
                        const std::vector<BigRat>& lower,
                        int unit_z,
                        long precision_bits,
                        long certify_bits,
                        long term_budget) {
    if (unit_z != 1 && unit_z != -1) throw DomainError("pfq_truncated: z must be +1 or -1");
    if (precision_bits < HPReal::kMinBits) precision_bits = HPReal::kMinBits;
    if (certify_bits < 0) certify_bits = precision_bits;

    for (const auto& b : lower) {
        if (b.is_integer() && b.sign() <= 0) {
            throw DomainError("pfq_truncated: lower parameter " + b.str() +
                              " is a non-positive integer");
        }
    }
    // Termination: a non-positive integer upper parameter -a kills terms k > a.
    long last_term = -1;
    for (const auto& a : upper) {
        if (a.is_integer() && a.sign() <= 0) {
            long cut;
            BigInt m = -a.num();
            if (!m.fits_slong_p()) throw DomainError("pfq_truncated: upper parameter too large");
            cut = m.get_si();
            last_term = (last_term < 0) ? cut : std::min(last_term, cut);
        }
    }

    const size_t p = upper.size(), q = lower.size();
    const bool balanced = (p == q + 1);
    if (last_term < 0) {
        if (p > q + 1) throw DomainError("pfq_truncated: divergent parameter excess");
        if (balanced) {
            BigRat excess = sum_of(lower) - sum_of(upper); // = sbar_eff - 1
            if (unit_z == 1 && !(excess > BigRat(0))) {
                throw DomainError("pfq_truncated: z=1 requires sum(lower) > sum(upper)");
            }
            if (unit_z == -1 && !(excess > BigRat(-1))) {
                throw DomainError("pfq_truncated: z=-1 requires sum(lower) - sum(upper) > -1");
            }
        }
    }

    // Effective lists including the k! in the lower position.
    std::vector<BigRat> lo = lower;
    lo.push_back(BigRat(1));
    const BigRat sbar_eff = sum_of(lo) - sum_of(upper);

    // Smallest k with every linear factor positive.
    long start = 1;
    for (const auto& x : upper) {
        if (x.sign() <= 0) start = std::max(start, 1 + (-x).floor().get_si());
    }

    // Monotonicity / comparison thresholds via shifted-coefficient positivity.
    const Poly N = poly_from_roots_neg(upper);
    const Poly D = poly_from_roots_neg(lo);
    long k_mono = -1;     // |ratio| <= 1 from here (balanced, z=-1)
    long k_half = -1;     // ratio <= 1/2 from here (p <= q case)
    BigRat s_prime(0);
    long k_comp = -1;     // comparison threshold (balanced, z=+1)
    if (last_term < 0) {
        if (!balanced) {
            // 2 N(x) <= D(x) eventually since deg D > deg N
            Poly diff = D;
            for (size_t i = 0; i < N.size(); ++i) diff[i] -= BigRat(2) * N[i];
            k_half = find_nonneg_shift(diff, start, 1L << 30);
            if (k_half < 0) throw PrecisionError("pfq_truncated: no geometric threshold found");
        } else if (unit_z == -1) {
            Poly diff = D;
            for (size_t i = 0; i < N.size(); ++i) diff[i] -= N[i];
            k_mono = find_nonneg_shift(diff, start, 1L << 30);
            if (k_mono < 0) throw PrecisionError("pfq_truncated: no monotone threshold found");
        } else {
            if (!(sbar_eff > BigRat(1))) {
                if (certify_bits > 0) {
                    throw PrecisionError("pfq_truncated: z=1 tail not certifiable (excess <= 1)");
                }
            } else {
                s_prime = (sbar_eff + BigRat(1)) / BigRat(2);
                // (x - s') D(x) - x N(x) >= 0 beyond the shift
                Poly lhs = poly_mul(Poly{-s_prime, BigRat(1)}, D);
                Poly xn = poly_mul(Poly{BigRat(0), BigRat(1)}, N);
                for (size_t i = 0; i < xn.size(); ++i) lhs[i] -= xn[i];
                k_comp = find_nonneg_shift(lhs, start, 1L << 30);
                if (k_comp < 0) throw PrecisionError("pfq_truncated: no comparison threshold found");
            }
        }
    }

    const long wp = precision_bits + 64;
    const long stop_bits = (certify_bits == 0) ? precision_bits + 8 : certify_bits;
    HPReal sum(wp), t(1L, wp);
    const HPReal tol = HPReal::pow2(-stop_bits, wp);
    long k = 0;
    bool terminated = false;
    HPReal bound(wp); // stays 0 until set
    bool have_bound = false, done = false;

    for (;; ++k) {
        if (last_term >= 0 && k > last_term) { terminated = true; break; }
        if (k >= term_budget) break;
        sum = sum + t;
        // t_{k+1} = t_k * z * prod(k+a)/prod(k+b), exact rational step factor
        BigRat num(1), den(1);
        for (const auto& x : upper) num *= x + BigRat(k);
        for (const auto& x : lo) den *= x + BigRat(k);
        if (num.is_zero()) { terminated = true; ++k; break; }
        BigRat step = num / den;
        if (unit_z == -1) step = -step;
        mpfr_mul_q(t.raw(), t.raw(), step.raw().get_mpq_t(), MPFR_RNDN);

        // Stopping rule: rigorous bound below tolerance.  The comparison
        // includes the rounding slop that will be folded into the reported
        // bound, so the report always lands under 2^-stop_bits as well.
        const long kk = k + 1; // t now holds t_{kk}
        if (last_term >= 0) continue;
        const HPReal guard = HPReal::pow2(-(wp - 8), wp) *
                             (sum.abs() + HPReal(1L, wp)) * HPReal(kk + 1, wp);
        if (!balanced) {
            if (kk > k_half) {
                bound = t.abs() * HPReal(2L, wp);
                have_bound = true;
                done = bound + guard < tol;
            }
        } else if (unit_z == -1) {
            if (kk > k_mono) {
                bound = t.abs();
                have_bound = true;
                done = bound + guard < tol;
            }
        } else if (k_comp >= 0) {
            if (kk > k_comp) {
                // tail(K) <= t_{K+1} (1 + K / (s'-1)) with K = kk-1
                HPReal factor = HPReal(1L, wp) +
                                HPReal(BigRat(kk - 1), wp) / HPReal(s_prime - BigRat(1), wp);
                bound = t.abs() * factor;
                have_bound = true;
                done = bound + guard < tol;
            }
        } else {
            // no rigorous threshold available (z=1, excess <= 1): heuristic stop
            done = t.abs() <
                   HPReal::pow2(-(precision_bits + 16), wp) * (sum.abs() + HPReal(1L, wp));
        }
        if (done) { ++k; break; }
    }

    if (terminated) { bound = HPReal(0L, wp); have_bound = true; done = true; }
    if (certify_bits > 0 && !(terminated || (have_bound && done))) {
        throw PrecisionError("pfq_truncated: term budget exhausted before tail bound reached 2^-" +
                             std::to_string(certify_bits) + " (" + std::to_string(k) + " terms)");
    }

    PfqResult out{HPReal(precision_bits), HPReal(precision_bits), k, terminated, have_bound};
    mpfr_set(out.value.raw(), sum.raw(), MPFR_RNDN);
    if (have_bound) {
        // Fold accumulated rounding slop into the reported bound: k additions
        // and multiplications at wp = precision_bits + 64 guard bits.
        HPReal slop =
            HPReal::pow2(-(wp - 8), wp) * (sum.abs() + HPReal(1L, wp)) * HPReal(k + 1, wp);
        mpfr_set(out.tail_bound.raw(), (bound + slop).raw(), MPFR_RNDU);
    }
    return out;
}

WellPoisedSum wellpoised_alternating_sum(long a,
                                         const std::vector<std::pair<BigRat, BigRat>>& pairs,
                                         long target_bits) {
    if (a < 1) throw DomainError("wellpoised_alternating_sum: a must be a positive integer");
    if (target_bits < 8) target_bits = 8;

    // Doubled parameters so all factors are integers: (u+k)/(l+k) = (U+2k)/(L+2k).
    std::vector<BigInt> U, L;
    for (const auto& [u, l] : pairs) {
        BigRat u2 = u * BigRat(2), l2 = l * BigRat(2);
        if (!u2.is_integer() || !l2.is_integer()) {
            throw DomainError("wellpoised_alternating_sum: parameters must be half-integers");
        }
        if (!(u.sign() > 0) || !(l > u)) {
            throw DomainError("wellpoised_alternating_sum: need 0 < u < l in every pair");
        }
        U.push_back(u2.num());
        L.push_back(l2.num());
    }

    // Depth J: first omitted weight C(a+J+1, J+1) 2^-(J+1) must clear the target.
    long J = target_bits + 16;
    for (int it = 0; it < 3; ++it) {
        J = target_bits + 16 +
            static_cast<long>(std::ceil(a * std::log2(static_cast<double>(J + a + 2))));
    }
    J = std::max(J, a + 16);

    for (int attempt = 0;; ++attempt) {
        const long M = J + 3; // b_0..b_M
        // Scaled moment sequence T_k = b_k * D over the common denominator D.
        std::vector<BigInt> row(M + 1);
        {
            std::vector<BigInt> sfx(M + 1);
            sfx[M] = 1;
            for (long k = M - 1; k >= 0; --k) {
                BigInt f = 1;
                for (const auto& Lx : L) f *= Lx + 2 * k;
                sfx[k] = sfx[k + 1] * f;
            }
            BigInt Nk = 1;
            row[0] = sfx[0]; // b_0 = 1
            for (long k = 1; k <= M; ++k) {
                BigInt f = 1;
                for (const auto& Ux : U) f *= Ux + 2 * (k - 1);
                Nk *= f;
                row[k] = Nk * sfx[k];
            }
        }
        const BigInt D = row[0];

        // Forward-difference passes; every entry of every row must stay >= 0
        // (moment-sequence structure) and the leading column must decrease.
        std::vector<BigInt> W(J + 3);
        W[0] = row[0];
        for (long j = 1; j <= J + 2; ++j) {
            for (long i = 0; i <= M - j; ++i) {
                row[i] -= row[i + 1];
                if (row[i] < 0) {
                    throw PrecisionError("wellpoised_alternating_sum: difference table went negative");
                }
            }
            W[j] = row[0];
            if (W[j] > W[j - 1]) {
                throw PrecisionError("wellpoised_alternating_sum: difference column not decreasing");
            }
        }

        // value = sum_{j=0}^{J} C(a+j,j) 2^{J-j} W_{j+1}  /  (2^{a+1+J} D)
        BigInt acc = 0, Cb = 1; // Cb = C(a+j, j)
        for (long j = 0; j <= J; ++j) {
            BigInt w = W[j + 1];
            mpz_mul_2exp(w.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(J - j));
            acc += Cb * w;
            Cb *= a + 1 + j;
            mpz_divexact_ui(Cb.get_mpz_t(), Cb.get_mpz_t(), static_cast<unsigned long>(j + 1));
        }
        BigInt denom = D;
        mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), static_cast<unsigned long>(a + 1 + J));
        BigRat value(acc, denom);

        // Tail: sum_{j>J} C(a+j,j) 2^{-j} W_{j+1} <= first term / (1 - rho),
        // rho = (a+J+2)/(2(J+2)) < 1.  Cb now holds C(a+J+1, J+1).
        BigRat rho(a + J + 2, 2 * (J + 2));
        BigInt tden = D;
        mpz_mul_2exp(tden.get_mpz_t(), tden.get_mpz_t(), static_cast<unsigned long>(a + 1 + J + 1));
        BigRat tail = BigRat(Cb * W[J + 2], tden) / (BigRat(1) - rho);

        BigRat tol(BigInt(1), pow2(static_cast<unsigned long>(target_bits)));
        if (tail <= tol || attempt >= 2) {
            if (tail > tol) {
                throw PrecisionError("wellpoised_alternating_sum: tail bound misses target");
            }
            return {value, tail, J};
        }
        J += target_bits / 2 + 32; // rare: retry deeper
    }
}

std::vector<BigRat> tail_expansion(const std::vector<BigRat>& a,
                                   const std::vector<BigRat>& b,
                                   long order) {
    if (a.size() != b.size()) throw DomainError("tail_expansion: parameter lists must match");
    if (order < 1) throw DomainError("tail_expansion: order must be >= 1");
    const BigRat sbar = sum_of(b) - sum_of(a);
    if (!(sbar > BigRat(1))) throw DomainError("tail_expansion: needs sum(b) - sum(a) > 1");

    const size_t len = static_cast<size_t>(order) + 2;
    // F(x) = (1+x) prod(1 + a_i x) / prod(1 + b_j x), truncated
    Poly num{BigRat(1), BigRat(1)};
    for (const auto& ai : a) num = poly_mul_trunc(num, Poly{BigRat(1), ai}, len);
    Poly den{BigRat(1)};
    for (const auto& bj : b) den = poly_mul_trunc(den, Poly{BigRat(1), bj}, len);
    den.resize(len, BigRat(0));
    Poly inv(len, BigRat(0));
    inv[0] = BigRat(1);
    for (size_t i = 1; i < len; ++i) {
        BigRat s(0);
        for (size_t j = 1; j <= i; ++j) s += den[j] * inv[i - j];
        inv[i] = -s;
    }
    num.resize(len, BigRat(0));
    const Poly Fc = poly_mul_trunc(num, inv, len);

    // bn[nu][j] = [x^j](1+x)^{-nu}
    std::vector<std::vector<BigRat>> bn(static_cast<size_t>(order) + 1,
                                        std::vector<BigRat>(len, BigRat(0)));
    for (long nu = 0; nu <= order; ++nu) {
        BigRat v(1);
        bn[nu][0] = v;
        for (size_t j = 1; j < len; ++j) {
            v = v * BigRat(nu + static_cast<long>(j) - 1) / BigRat(static_cast<long>(j));
            bn[nu][j] = (j % 2 == 0) ? v : -v;
        }
    }
    auto E = [&](long m, long nu) {
        BigRat s(0);
        for (long i = 0; i <= m - nu; ++i) s += Fc[i] * bn[nu][m - nu - i];
        return s;
    };

    std::vector<BigRat> psi(static_cast<size_t>(order), BigRat(0));
    psi[0] = -BigRat(1) / E(1, 0); // = 1/(sbar - 1)
    for (long m = 2; m <= order; ++m) {
        BigRat acc(0);
        for (long nu = 0; nu <= m - 2; ++nu) acc += psi[nu] * E(m, nu);
        psi[m - 1] = -acc / E(m, m - 1); // E(m, m-1) = 2 - sbar - m != 0
    }
    return psi;
}

namespace {

BigRat tail_eval(const std::vector<BigRat>& psi, const BigRat& t_next, long K1) {
    const BigRat x(1, K1);
    BigRat acc(0);
    for (auto it = psi.rbegin(); it != psi.rend(); ++it) acc = acc * x + *it;
    return t_next * BigRat(K1) * acc;
}

} // namespace

RefinedSeries sum_positive_hypergeometric(const BigRat& t0,
                                          const std::vector<BigRat>& a,
                                          const std::vector<BigRat>& b,
                                          long K,
                                          long order) {
    if (a.size() != b.size()) throw DomainError("sum_positive_hypergeometric: list sizes differ");
    for (const auto& x : a) {
        if (!(x.sign() > 0)) throw DomainError("sum_positive_hypergeometric: parameters must be > 0");
    }
    for (const auto& x : b) {
        if (!(x.sign() > 0)) throw DomainError("sum_positive_hypergeometric: parameters must be > 0");
    }
    if (!(t0.sign() > 0)) throw DomainError("sum_positive_hypergeometric: t0 must be > 0");
    if (K < 16) throw DomainError("sum_positive_hypergeometric: K too small");
    const BigRat sbar = sum_of(b) - sum_of(a);
    if (!(sbar > BigRat(1))) {
        throw DomainError("sum_positive_hypergeometric: needs sum(b) - sum(a) > 1");
    }

    const std::vector<BigRat> psi = tail_expansion(a, b, order);

    const long gap = std::min<long>(64, K / 4);
    const long K2 = K - gap;
    BigRat t = t0, partial(0), partial2(0), t_at_K2(0);
    for (long k = 0; k <= K; ++k) {
        partial += t;
        BigRat num(1), den(1);
        for (const auto& x : a) num *= x + BigRat(k);
        for (const auto& x : b) den *= x + BigRat(k);
        t = t * num / den;
        if (k == K2) { partial2 = partial; t_at_K2 = t; }
    }

    RefinedSeries out;
    out.partial = partial;
    out.terms = K + 1;
    out.tail = tail_eval(psi, t, K + 1);
    const BigRat value2 = partial2 + tail_eval(psi, t_at_K2, K2 + 1);
    out.error_estimate = (out.partial + out.tail - value2).abs();

    // Rigorous envelope: verify (x - s') prod(x+b) - x prod(x+a) >= 0 for
    // x >= K+1 by shifted-coefficient positivity, then
    //   0 <= true tail <= t_{K+1} (1 + K/(s'-1)).
    const BigRat s_prime = (sbar + BigRat(1)) / BigRat(2);
    Poly D = poly_from_roots_neg(b), N = poly_from_roots_neg(a);
    Poly lhs = poly_mul(Poly{-s_prime, BigRat(1)}, D);
    Poly xn = poly_mul(Poly{BigRat(0), BigRat(1)}, N);
    for (size_t i = 0; i < xn.size(); ++i) lhs[i] -= xn[i];
    if (!poly_nonneg_shifted(lhs, BigRat(K + 1))) {
        throw PrecisionError("sum_positive_hypergeometric: comparison inequality unverified at K+1");
    }
    out.crude_tail_max = t * (BigRat(1) + BigRat(K) / (s_prime - BigRat(1)));
    if (out.tail.sign() < 0 || out.tail > out.crude_tail_max) {
        throw PrecisionError("sum_positive_hypergeometric: refined tail escaped rigorous envelope");
    }
    return out;
}

} // namespace catalan
