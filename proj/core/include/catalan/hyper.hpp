#pragma once

// Evaluators built on the series engines:
//   - h_beta_series: the double-Beta expansion of the two-dimensional integral
//     H(c) = int int x^{c21}(1-x)^{c22} y^{c31}(1-y)^{c33} (1-xy)^{-(c11+1)},
//     summed exactly with an asymptotic tail and a rigorous crude envelope;
//   - whipple_check: residual of the very-well-poised 6F5(-1) = Gamma-ratio
//     times 3F2(1) transform, both sides evaluated independently;
//   - euler_integral_check: residual of the identity relating the tilde
//     linear form to the H-integral of its parameter vector.

#include "catalan/cvector.hpp"
#include "catalan/exact.hpp"
#include "catalan/gamma_exact.hpp"
#include "catalan/hp_real.hpp"

namespace catalan {

struct HValue {
    HPReal value;          // H(c) at the requested precision
    HPReal error_estimate; // empirical accuracy handle (uncertified)
    BigRat partial;        // exact partial sum of the rational-part series
    BigRat refined_tail;   // asymptotic tail attached to the partial sum
    BigRat crude_tail_max; // rigorous envelope: 0 <= true tail <= this
    long terms = 0;
    long sqrt_pi_power = 0; // the series is (rational) * sqrt(pi)^power
};

// Requires: every entry of c > -1; convergence exponent c22+c33+1-c11 > 0.
// Demi-integrality is not required (the sqrt(pi) power is then nonzero).
HValue h_beta_series(const CVector& c, long precision_bits);

struct WhippleCheck {
    HPReal lhs;      // very-well-poised 6F5 at -1
    HPReal rhs;      // Gamma-ratio * 3F2 at +1
    HPReal residual; // |lhs - rhs|
    BigRat lhs_tail_bound;    // rigorous
    HPReal rhs_error_estimate; // uncertified refinement handle
    long lhs_terms = 0;
    long rhs_terms = 0;
};

// Residual of the transform
//   6F5(a, 1+a/2, b, c, d, e; a/2, 1+a-b, 1+a-c, 1+a-d, 1+a-e | -1)
//     = Gamma(1+a-d)Gamma(1+a-e) / (Gamma(1+a)Gamma(1+a-d-e))
//       * 3F2(1+a-b-c, d, e; 1+a-b, 1+a-c | 1),
// valid for 1+a-d-e > 0.  The left side is evaluated by the exact
// difference-table method (requires a a positive integer and each
// parameter pair well poised: 0 < u < 1+a-u); the right side by exact
// partial sums with the asymptotic tail.  The Gamma ratio is exact and its
// sqrt(pi) exponents must cancel (asserted).
WhippleCheck whipple_check(const QuarterInt& a, const QuarterInt& b,
                           const QuarterInt& c, const QuarterInt& d,
                           const QuarterInt& e, long precision_bits);

struct EulerCheck {
    HPReal residual; // |lhs - rhs|
    HPReal lhs;      // u_n * G_ref - v_n  (tilde family)
    HPReal rhs;      // (-1)^(n-1) * (n/2) * H(c(n))
    BigRat u, v;     // the tilde coefficients used
};

// Verifies, for n >= 1, that the tilde linear form equals the H-integral of
// its parameter vector: u_n G - v_n = (-1)^(n-1) (n/2) H(c(n)).
EulerCheck euler_integral_check(long n, long precision_bits);

} // namespace catalan
