#include "catalan/beta_ref.hpp"

#include <cmath>

namespace catalan {

HPReal reference_catalan_terms(long n, long working_bits) {
    if (n < 1) throw DomainError("reference_catalan_terms: need at least one term");
    const long wp = working_bits;
    mpfr_t d, dinv, b, c, s, t;
    mpfr_init2(d, wp); mpfr_init2(dinv, wp); mpfr_init2(b, wp);
    mpfr_init2(c, wp); mpfr_init2(s, wp); mpfr_init2(t, wp);

    // d = ((3+sqrt(8))^n + (3+sqrt(8))^{-n}) / 2
    mpfr_sqrt_ui(t, 8, MPFR_RNDN);
    mpfr_add_ui(t, t, 3, MPFR_RNDN);
    mpfr_pow_ui(d, t, static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_ui_div(dinv, 1, d, MPFR_RNDN);
    mpfr_add(d, d, dinv, MPFR_RNDN);
    mpfr_div_2ui(d, d, 1, MPFR_RNDN);

    mpfr_set_si(b, -1, MPFR_RNDN);
    mpfr_neg(c, d, MPFR_RNDN);
    mpfr_set_zero(s, 1);

    for (long k = 0; k < n; ++k) {
        mpfr_sub(c, b, c, MPFR_RNDN);                       // c = b - c
        mpfr_div_ui(t, c, static_cast<unsigned long>(2 * k + 1), MPFR_RNDN);
        mpfr_div_ui(t, t, static_cast<unsigned long>(2 * k + 1), MPFR_RNDN);
        mpfr_add(s, s, t, MPFR_RNDN);                       // s += c/(2k+1)^2
        // b *= (k+n)(k-n) / ((k+1/2)(k+1))
        mpfr_mul_si(b, b, k + n, MPFR_RNDN);
        mpfr_mul_si(b, b, k - n, MPFR_RNDN);
        mpfr_mul_2ui(b, b, 1, MPFR_RNDN);
        mpfr_div_ui(b, b, static_cast<unsigned long>(2 * k + 1), MPFR_RNDN);
        mpfr_div_ui(b, b, static_cast<unsigned long>(k + 1), MPFR_RNDN);
    }
    mpfr_div(s, s, d, MPFR_RNDN);

    HPReal out(wp);
    mpfr_set(out.raw(), s, MPFR_RNDN);
    mpfr_clear(d); mpfr_clear(dinv); mpfr_clear(b);
    mpfr_clear(c); mpfr_clear(s); mpfr_clear(t);
    return out;
}

HPReal reference_catalan(long precision_bits) {
    if (precision_bits < HPReal::kMinBits) precision_bits = HPReal::kMinBits;
    // 2*(3+sqrt8)^{-n} <= 2^{-(p+10)}  <=>  n >= (p+11) / log2(3+sqrt8)
    const double log2q = std::log2(3.0 + std::sqrt(8.0)); // ~2.543
    const long n = static_cast<long>(std::ceil((precision_bits + 11) / log2q)) + 2;
    // Intermediates grow like (3+sqrt8)^n, so give the loop enough headroom
    // that accumulated rounding stays below the series bound.
    const long wp = precision_bits + static_cast<long>(std::ceil(2.6 * n)) + 64;
    HPReal s = reference_catalan_terms(n, wp);
    HPReal out(precision_bits);
    mpfr_set(out.raw(), s.raw(), MPFR_RNDN);
    return out;
}

} // namespace catalan
