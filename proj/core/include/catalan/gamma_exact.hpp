#pragma once

// Exact Gamma values on the half-integer lattice.  Gamma at a positive
// integer is a factorial; at any half-integer it is a rational multiple of
// sqrt(pi) (positive or negative power after forming ratios).  Values are
// carried as  rational * sqrt(pi)^power  so products and quotients of Gamma
// factors stay exact and the transcendental part can be checked to cancel.

#include "catalan/exact.hpp"
#include "catalan/hp_real.hpp"

namespace catalan {

struct GammaExact {
    BigRat rational;
    long sqrt_pi_power = 0; // exponent of sqrt(pi)

    friend GammaExact operator*(const GammaExact& a, const GammaExact& b) {
        return {a.rational * b.rational, a.sqrt_pi_power + b.sqrt_pi_power};
    }
    friend GammaExact operator/(const GammaExact& a, const GammaExact& b) {
        return {a.rational / b.rational, a.sqrt_pi_power - b.sqrt_pi_power};
    }
};

// Gamma(a) for a integer or half-integer; throws DomainError at poles
// (a a non-positive integer) and for quarter-integers off the lattice.
GammaExact gamma_exact(const QuarterInt& a);

// Beta(x, y) = Gamma(x)Gamma(y)/Gamma(x+y) on the same lattice.
GammaExact beta_exact(const QuarterInt& x, const QuarterInt& y);

// Numeric value rational * sqrt(pi)^power at the given precision.
HPReal gamma_to_real(const GammaExact& g, long precision_bits);

} // namespace catalan
