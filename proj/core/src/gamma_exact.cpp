#include "catalan/gamma_exact.hpp"

namespace catalan {

GammaExact gamma_exact(const QuarterInt& a) {
    if (a.is_integer()) {
        BigInt m = a.quadruple() / 4;
        if (m <= 0) throw DomainError("gamma_exact: pole at non-positive integer " + a.str());
        if (!m.fits_ulong_p()) throw DomainError("gamma_exact: argument too large");
        return {BigRat(factorial(m.get_ui() - 1)), 0};
    }
    if (!a.is_half_integer()) {
        throw DomainError("gamma_exact: " + a.str() + " is not an integer or half-integer");
    }
    // Walk from Gamma(1/2) = sqrt(pi) by the functional equation.
    // a = h/2 with h odd; Gamma(x+1) = x Gamma(x).
    BigInt h = a.quadruple() / 2;
    BigRat rat(1);
    BigRat x(1, 2);
    if (h > 1) {
        // Gamma(1/2 + k): multiply x, x+1, ... up to a-1
        while (QuarterInt::from_rat(x) < a) {
            rat *= x;
            x += BigRat(1);
        }
    } else if (h < 1) {
        // Gamma(1/2 - k): divide down, Gamma(x) = Gamma(x+1)/x
        BigRat y(1, 2);
        while (true) {
            y -= BigRat(1);
            rat /= y;
            if (QuarterInt::from_rat(y) == a) break;
        }
    }
    return {rat, 1};
}

GammaExact beta_exact(const QuarterInt& x, const QuarterInt& y) {
    return gamma_exact(x) * gamma_exact(y) / gamma_exact(x + y);
}

HPReal gamma_to_real(const GammaExact& g, long precision_bits) {
    HPReal r(g.rational, precision_bits);
    if (g.sqrt_pi_power != 0) {
        r = r * HPReal::sqrt_pi(precision_bits + 8).pow_si(g.sqrt_pi_power);
    }
    return r;
}

} // namespace catalan
