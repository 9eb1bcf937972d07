#include "catalan/hyper.hpp"

#include <vector>

#include "catalan/beta_ref.hpp"
#include "catalan/errors.hpp"
#include "catalan/forms.hpp"
#include "catalan/series.hpp"

namespace catalan {

namespace {

// Exact rational -> HPReal at the given precision.
HPReal to_real(const BigRat& x, long bits) { return HPReal(x, bits); }

} // namespace

HValue h_beta_series(const CVector& c, long precision_bits) {
    if (!c.admissible()) {
        throw DomainError("h_beta_series: an entry of c is <= -1: " + c.str());
    }
    const BigRat c11 = c.at(CLabel::c11), c21 = c.at(CLabel::c21),
                 c22 = c.at(CLabel::c22), c31 = c.at(CLabel::c31),
                 c33 = c.at(CLabel::c33);
    const BigRat one(1);
    BigRat sbar = c22 + c33 + BigRat(2) - c11; // sum(b) - sum(a) of the term ratio
    if (!(sbar > one)) {
        throw DomainError("h_beta_series: divergent exponent c22+c33+1-c11 = " +
                          (sbar - one).str());
    }

    // term 0: B(c21+1, c22+1) * B(c31+1, c33+1), exact.
    GammaExact t0 = beta_exact(QuarterInt::from_rat(c21 + one), QuarterInt::from_rat(c22 + one)) *
                    beta_exact(QuarterInt::from_rat(c31 + one), QuarterInt::from_rat(c33 + one));

    const std::vector<BigRat> a_list = {c11 + one, c21 + one, c31 + one};
    const std::vector<BigRat> b_list = {one, c21 + c22 + BigRat(2),
                                        c31 + c33 + BigRat(2)};

    long K = std::max<long>(256, 2 * precision_bits);
    const long order = 45 + precision_bits / 8;
    const BigRat tol = BigRat(BigInt(1), pow2(precision_bits + 8));

    RefinedSeries rs;
    for (int attempt = 0;; ++attempt) {
        try {
            rs = sum_positive_hypergeometric(t0.rational, a_list, b_list, K, order);
            if (rs.error_estimate.abs() <= tol) break;
        } catch (const PrecisionError&) {
            if (attempt >= 3) throw;
        }
        if (attempt >= 3) {
            throw PrecisionError(
                "h_beta_series: refinement estimate stayed above tolerance at K=" +
                std::to_string(K));
        }
        K *= 2;
    }

    const long wp = precision_bits + 32;
    HValue out;
    out.partial = rs.partial;
    out.refined_tail = rs.tail;
    out.crude_tail_max = rs.crude_tail_max;
    out.terms = rs.terms;
    out.sqrt_pi_power = t0.sqrt_pi_power;
    HPReal val = to_real(rs.value(), wp);
    HPReal est = to_real(rs.error_estimate.abs(), wp);
    if (t0.sqrt_pi_power != 0) {
        HPReal sp = HPReal::sqrt_pi(wp).pow_si(t0.sqrt_pi_power);
        val = val * sp;
        est = est * sp;
    }
    out.value = std::move(val);
    out.error_estimate = std::move(est);
    return out;
}

WhippleCheck whipple_check(const QuarterInt& a, const QuarterInt& b,
                           const QuarterInt& c, const QuarterInt& d,
                           const QuarterInt& e, long precision_bits) {
    const QuarterInt one = QuarterInt::of_integer(1);
    QuarterInt conv = one + a - d - e; // 1+a-d-e
    if (!(conv.sign() > 0)) {
        throw DomainError("whipple_check: requires 1+a-d-e > 0, got " + conv.str());
    }
    if (!a.is_integer() || !(a.sign() > 0)) {
        throw DomainError(
            "whipple_check: the difference-table evaluation of the left side "
            "requires a positive integer apex parameter a, got " + a.str());
    }
    const BigRat ar = a.to_rat();
    const BigRat one_r(1);

    // Left side: pairs (u, 1+a-u) for u in {b, c, d, e}; trivial pairs skipped.
    std::vector<std::pair<BigRat, BigRat>> pairs;
    for (const QuarterInt* u : {&b, &c, &d, &e}) {
        BigRat ur = u->to_rat();
        BigRat lr = one_r + ar - ur;
        if (ur == lr) continue;
        if (!(ur.sign() > 0) || !(ur < lr)) {
            throw DomainError("whipple_check: pair (" + ur.str() + ", " + lr.str() +
                              ") is not well poised with 0 < u < 1+a-u");
        }
        pairs.push_back({ur, lr});
    }
    long a_long = mpz_get_si(a.to_rat().num().get_mpz_t());
    WellPoisedSum lhs_sum = wellpoised_alternating_sum(a_long, pairs, precision_bits + 16);

    // Right side Gamma ratio, exact; sqrt(pi) exponents must cancel.
    GammaExact num = gamma_exact(one + a - d) * gamma_exact(one + a - e);
    GammaExact den = gamma_exact(one + a) * gamma_exact(one + a - d - e);
    GammaExact pref = num / den;
    if (pref.sqrt_pi_power != 0) {
        throw DomainError(
            "whipple_check: sqrt(pi) exponents of the Gamma ratio do not cancel "
            "(power " + std::to_string(pref.sqrt_pi_power) + ")");
    }

    // Right side 3F2(1+a-b-c, d, e; 1+a-b, 1+a-c | 1) via exact partial sum
    // plus asymptotic tail; convergence exponent = 1+a-d-e > 0 (checked above).
    const std::vector<BigRat> A = {one_r + ar - b.to_rat() - c.to_rat(), d.to_rat(),
                                   e.to_rat()};
    const std::vector<BigRat> B = {one_r, one_r + ar - b.to_rat(),
                                   one_r + ar - c.to_rat()};
    for (const BigRat& x : A) {
        if (!(x.sign() > 0)) {
            throw DomainError("whipple_check: nonpositive 3F2 numerator parameter " +
                              x.str());
        }
    }
    long K = std::max<long>(256, 2 * precision_bits);
    const long order = 45 + precision_bits / 8;
    const BigRat tol = BigRat(BigInt(1), pow2(precision_bits + 8));
    RefinedSeries f32;
    for (int attempt = 0;; ++attempt) {
        try {
            f32 = sum_positive_hypergeometric(BigRat(1), A, B, K, order);
            if (f32.error_estimate.abs() <= tol) break;
        } catch (const PrecisionError&) {
            if (attempt >= 3) throw;
        }
        if (attempt >= 3) {
            throw PrecisionError(
                "whipple_check: refinement estimate stayed above tolerance at K=" +
                std::to_string(K));
        }
        K *= 2;
    }

    const long wp = precision_bits + 32;
    WhippleCheck out;
    out.lhs = to_real(lhs_sum.value, wp);
    out.rhs = to_real(pref.rational * f32.value(), wp);
    out.residual = (out.lhs - out.rhs).abs();
    out.lhs_tail_bound = lhs_sum.tail_bound;
    out.rhs_error_estimate = to_real(pref.rational.abs() * f32.error_estimate.abs(), wp);
    out.lhs_terms = lhs_sum.terms;
    out.rhs_terms = f32.terms;
    return out;
}

EulerCheck euler_integral_check(long n, long precision_bits) {
    if (n < 1) throw DomainError("euler_integral_check: requires n >= 1");
    LinearFormQG form = linear_form_tilde(n);
    HPReal g = reference_catalan(precision_bits + 32);
    HValue h = h_beta_series(euler_cvector(n), precision_bits);

    const long wp = precision_bits + 32;
    EulerCheck out;
    out.u = form.u;
    out.v = form.v;
    out.lhs = to_real(form.u, wp) * g - to_real(form.v, wp);
    BigRat factor(((n % 2) == 1) ? BigInt(n) : BigInt(-n), BigInt(2));
    out.rhs = to_real(factor, wp) * h.value;
    out.residual = (out.lhs - out.rhs).abs();
    return out;
}

} // namespace catalan
