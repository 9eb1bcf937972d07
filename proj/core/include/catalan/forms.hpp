#pragma once

// Construction and evaluation of the rational linear forms  r_n = u_n G - v_n
// in Catalan's constant G.  Two independent routes are implemented:
//
//   * kernel route: partial-fraction decomposition of an explicit rational
//     kernel with simple poles on the quarter-integer lattice, then the
//     sigma-tail calculus that turns pole data into (u, v);
//   * closed-form route: the explicit coefficient formulas (squares of
//     integer-shifted binomial polynomials) and the four correction sums.
//
// The two routes must agree exactly; tests and the acceptance suite enforce
// this.  A companion family (the "tilde" forms) is built the same way from a
// second kernel and doubles as the continued-fraction convergent numerators
// and denominators.

#include <utility>
#include <vector>

#include "catalan/exact.hpp"
#include "catalan/hp_real.hpp"

namespace catalan {

// A finite sum  sum_i  coeff_i / (nu - pole_i)^2  over nu = 1, 2, 3, ...
// Poles are distinct quarter-integers with odd quadruple (never integers or
// half-integers, so no pole meets the summation range).
struct PartialFractionForm {
    std::vector<std::pair<QuarterInt, BigRat>> terms;
    // Simple-pole coefficients of a rational kernel must sum to zero (degree
    // of numerator is at least two below the denominator's).
    BigRat coefficient_sum() const;
};

// A rational linear form u*G - v.
struct LinearFormQG {
    BigRat u, v;
    friend bool operator==(const LinearFormQG& a, const LinearFormQG& b) {
        return a.u == b.u && a.v == b.v;
    }
};

// Partial-fraction coefficients of the kernel
//   scale * prod (x - numer_root) / prod (x - denom_root)
// at each (simple) denominator root: coeff(p) = scale * prod(p - numer) /
// prod_{q != p}(p - q).  Denominator roots must be pairwise distinct.
PartialFractionForm decompose(const std::vector<QuarterInt>& numer_roots,
                              const std::vector<QuarterInt>& denom_roots,
                              const BigRat& scale);

// Kernel whose residue sum produces r_n = u_n G - v_n:
//   numerator roots 1..n doubled; denominator roots n/2 + 3/4 - l and
//   n/2 + 1/4 - l for l = 0..n; scale (-1)^n (2n+1)! / (8 n!^2 4^{n+1}).
PartialFractionForm r_kernel(long n);

// Kernel for the tilde family (n >= 1): numerator roots 1..n-1 and 1..n;
// denominator roots n/2 + 1/4 - l (l = 0..n) and n/2 - 1/4 - l (l = 0..n-1);
// scale (-1)^n (2n)! / (2 (n-1)!^2 2^{2n+1}).
PartialFractionForm r_tilde_kernel(long n);

// Sigma-tail calculus: evaluates  sum_{nu>=1} sum_i c_i/(nu - p_i)^2  as a
// linear form u G - v by classifying each pole mod 1 into the two families
// whose tails reproduce the two lattice components of G, with exact rational
// corrections for the shift.  Requires the coefficient sum to vanish.
LinearFormQG tails_to_form(const PartialFractionForm& pf);

// Closed-form partial-fraction coefficients: a[l] attached to the 3/4-line
// poles and a_prime[l] to the 1/4-line poles, l = 0..n.
struct ACoeffs {
    std::vector<BigRat> a, a_prime;
};
ACoeffs partial_fraction_coefficients(long n);

// (u_n, v_n) by the closed-form route; exact.
LinearFormQG linear_form_original(long n);

// (u~_n, v~_n): n = 0 is the explicit base (0, -1); n >= 1 via the tilde
// kernel and the sigma-tail calculus.
LinearFormQG linear_form_tilde(long n);

// First nmax+1 tilde forms; n <= 2 from the construction, the rest extended
// by the three-term recurrence (exact rational arithmetic).  The recurrence
// and the construction are proven to agree on a prefix by tests; this is the
// fast generator for long sweeps.
std::vector<LinearFormQG> tilde_sequence(long nmax);

// Numeric value of r_n = u_n G - v_n computed from its alternating series
// representation, reorganized through the certified moment-series engine.
struct FormValue {
    HPReal value;       // r_n
    HPReal error_bound; // rigorous: |true r_n - value| <= error_bound
    long terms = 0;
};
FormValue linear_form_value(long n, long precision_bits);

// Exact rational prefactor of the series representation (the t = n term,
// including sign); exposed for tests.
BigRat linear_form_series_prefactor(long n);

// Plain truncated partial sum of the defining alternating series with its
// trivial alternating-series bound; polynomially slow, used as a low-accuracy
// cross-check of linear_form_value.
FormValue linear_form_value_direct(long n, long terms, long precision_bits);

// Growth diagnostics for a form sequence: n-th roots of |u_n| and of
// |u_n G - v_n| (the latter needs a reference G).  The two trajectories
// approach the dominant and recessive characteristic roots.
struct GrowthRow {
    long n = 0;
    HPReal u_root;   // |u_n|^{1/n}
    HPReal r_root;   // |u_n G - v_n|^{1/n}
};
std::vector<GrowthRow> growth_diagnostics(const std::vector<LinearFormQG>& seq,
                                          const HPReal& g_ref, long stride = 1);

// Denominator certificates.  For the u-side the denominator itself must be a
// pure power of two with exponent at most 4n + ceil(log2(2n)) + slack; for
// the v-side the same holds after scaling by lcm(1..2n-1)^2.  Rows also
// record whether the stronger all-the-way-to-4n level holds.
struct CertificateRow {
    long n = 0;
    bool pow2_denominator = false; // odd part of the denominator is 1
    BigInt odd_part;               // witness when pow2_denominator is false
    long exponent = 0;             // ord2 of the denominator
    long bound = 0;                // 4n + ceil(log2(2n)) + slack  (slack at n = 0)
    bool within_bound = false;
    bool within_4n = false;
    bool pass() const { return pow2_denominator && within_bound; }
};
std::vector<CertificateRow> u_certificates(const std::vector<LinearFormQG>& seq, long slack);
std::vector<CertificateRow> v_certificates(const std::vector<LinearFormQG>& seq, long slack);

} // namespace catalan
