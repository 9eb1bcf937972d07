#pragma once

// Series evaluation engines.
//
// 1. pfq_truncated: generic hypergeometric partial sums at unit argument with
//    a rigorous truncation bound (alternating or comparison-based).
// 2. wellpoised_alternating_sum: exact rational evaluation of the
//    very-well-poised alternating series via the complementary-moment
//    difference table; converges one bit per term with a certified
//    geometric tail bound.
// 3. sum_positive_hypergeometric: exact partial sum of a positive series of
//    hypergeometric type plus an exact-rational asymptotic tail (refined,
//    flagged) together with a rigorous crude envelope for the true tail.

#include <utility>
#include <vector>

#include "catalan/exact.hpp"
#include "catalan/hp_real.hpp"

namespace catalan {

struct PfqResult {
    HPReal value;      // partial sum (rounded to the requested precision)
    HPReal tail_bound; // bound on |true sum - partial sum|; rigorous iff certified
    long terms = 0;    // number of terms accumulated
    bool terminated = false; // true if the series terminated exactly
    bool certified = false;  // true if tail_bound is a proven bound
};

// Truncated pFq(upper; lower; z) with z = +1 or -1.
//   - lower parameters must avoid non-positive integers (DomainError);
//   - a non-positive integer upper parameter terminates the series exactly;
//   - otherwise requires p <= q+1 and the unit-circle convergence condition
//     (sum lower - sum upper > 0 for z=1, > -1 for z=-1), DomainError if not;
//   - sums until the rigorous tail bound drops below 2^-certify_bits
//     (default: precision_bits), throwing PrecisionError if the term budget
//     is exhausted first; certify_bits = 0 disables the requirement.
PfqResult pfq_truncated(const std::vector<BigRat>& upper,
                        const std::vector<BigRat>& lower,
                        int unit_z,
                        long precision_bits,
                        long certify_bits = -1,
                        long term_budget = 4000000);

struct WellPoisedSum {
    BigRat value;      // exact evaluation of the truncated reorganized series
    BigRat tail_bound; // rigorous bound on |true - value| (geometric tail)
    long terms = 0;    // depth of the difference table used
};

// Very-well-poised alternating sum
//   S = sum_{k>=0} (-1)^k (a+2k)/a * (a)_k/k! * prod_i (u_i)_k / (l_i)_k
// with a a positive integer and l_i = 1+a-u_i > u_i > 0 (pairs with
// u_i = l_i must be omitted by the caller; 2u_i must be an integer).
// Reorganized through the forward-difference table of the moment sequence
// b_k = prod (u_i)_k/(l_i)_k into a positive series with ratio ~ 1/2:
//   S = 2^{-(a+1)} sum_{j>=0} C(a+j, j) 2^{-j} W_{j+1},
// where W_j >= 0 is the j-th forward difference (-1)^j Delta^j b at 0.
// Nonnegativity and monotonicity of W are asserted at runtime; the tail
// after j = J is bounded by the first omitted term times a geometric factor.
WellPoisedSum wellpoised_alternating_sum(long a,
                                         const std::vector<std::pair<BigRat, BigRat>>& pairs,
                                         long target_bits);

struct RefinedSeries {
    BigRat partial;        // exact sum of t_0 .. t_K
    BigRat tail;           // exact-rational asymptotic tail estimate at K (refined, uncertified)
    BigRat crude_tail_max; // rigorous: 0 <= true tail <= crude_tail_max
    BigRat error_estimate; // |value at K - value at K-gap|, empirical accuracy handle
    long terms = 0;        // K+1
    BigRat value() const { return partial + tail; }
};

// Asymptotic tail-expansion coefficients psi_0..psi_{order-1} for a series
// with term ratio t_{k+1}/t_k = prod(k+a_i)/prod(k+b_j) (#a == #b,
// sbar = sum b - sum a > 1):  sum_{k>K} t_k ~ t_{K+1} (K+1) sum_i psi_i (K+1)^{-i}.
std::vector<BigRat> tail_expansion(const std::vector<BigRat>& a,
                                   const std::vector<BigRat>& b,
                                   long order);

// Positive series t_0 = t0 > 0, t_{k+1} = t_k prod(k+a_i)/prod(k+b_j) with
// all a_i, b_j > 0 and sbar > 1.  Sums K+1 terms exactly, attaches the
// refined asymptotic tail, and certifies the crude envelope
//   0 <= true tail <= t_{K+1} (1 + K/(s'-1)),   s' = (sbar+1)/2,
// by verifying the polynomial inequality (x-s') prod(x+b) - x prod(x+a) >= 0
// for x >= K+1 through shifted-coefficient positivity.
RefinedSeries sum_positive_hypergeometric(const BigRat& t0,
                                          const std::vector<BigRat>& a,
                                          const std::vector<BigRat>& b,
                                          long K,
                                          long order);

// True if every coefficient of p(x + shift) is >= 0 (hence p >= 0 on
// [shift, infinity)); p given by coefficients, index = degree.
bool poly_nonneg_shifted(const std::vector<BigRat>& p, const BigRat& shift);

} // namespace catalan
