#pragma once

// The three-term recurrence shared by both linear-form families:
//   c2(n) x_{n+1} - c1(n) x_n - c0(n) x_{n-1} = 0,  valid for n >= 1,
// with integer polynomial coefficients.  Includes the characteristic-root
// analysis used for growth diagnostics.

#include <vector>

#include "catalan/exact.hpp"
#include "catalan/hp_real.hpp"

namespace catalan {

// Dense integer-coefficient polynomial, index = degree.
struct IntPoly {
    std::vector<BigInt> c;
    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    std::string str(const std::string& var) const;
};

struct Order2Rec {
    IntPoly c2, c1, c0; // c2(n) x_{n+1} = c1(n) x_n + c0(n) x_{n-1}
    long valid_from = 1;
};

// The concrete recurrence:
//   c2(n) = (2n)^2 (2n+1)^2 (20n^2 - 20n + 3)
//   c1(n) = 3520 n^6 - 2672 n^4 + 196 n^2 - 9
//   c0(n) = (2n)^2 (2n+1) (2n-3) (20n^2 + 20n + 3)
Order2Rec catalan_recurrence();

// Forward iteration from (x_0, x_1) through index nmax, exact rationals.
std::vector<BigRat> iterate_recurrence(const Order2Rec& rec, const BigRat& x0,
                                       const BigRat& x1, long nmax);

// Verifies c2(n) x_{n+1} - c1(n) x_n - c0(n) x_{n-1} == 0 exactly for all
// applicable n; returns the first violating n, or -1 if none.
long first_recurrence_violation(const Order2Rec& rec, const std::vector<BigRat>& xs);

// Characteristic data at n -> infinity: monic limit lambda^2 - s lambda - p
// from the leading coefficients, its two real roots, and the golden-ratio
// connection lambda_plus = phi^5 (phi the golden ratio).
struct CharRoots {
    BigRat root_sum;       // lim c1/c2 (= lambda_plus + lambda_minus)
    BigRat root_product;   // -lim c0/c2 (= lambda_plus * lambda_minus)
    HPReal lambda_plus;    // dominant root, positive
    HPReal lambda_minus;   // recessive root, in (-1, 0)
    HPReal phi_fifth_gap;  // |lambda_plus - phi^5|, phi the golden ratio
};
CharRoots characteristic_roots(const Order2Rec& rec, long precision_bits);

} // namespace catalan
