#pragma once

// Independent reference value for Catalan's constant G = beta(2)
//   = sum_{k>=0} (-1)^k / (2k+1)^2.
//
// Uses the accelerated alternating-series scheme of Cohen, Rodriguez
// Villegas and Zagier, applicable because 1/(2k+1)^2 is a moment sequence;
// n terms give an error below 2*(3+sqrt 8)^{-n}, so roughly 0.7656 decimal
// digits per term, with a fully rigorous bound.

#include "catalan/hp_real.hpp"

namespace catalan {

// G to the requested precision with |result - G| <= 2^{-(precision_bits-1)}.
// The certified series error is pushed well below the final rounding ulp by
// running the iteration at an enlarged working precision.
HPReal reference_catalan(long precision_bits);

// The partial-sum machinery exposed for testing: value after `terms` terms
// at the given working precision (no final rounding to a smaller precision).
HPReal reference_catalan_terms(long terms, long working_bits);

} // namespace catalan
