#pragma once

// The 10-element parameter set c = (c00, c11, c12, c13, c21, c22, c23, c31,
// c32, c33) attached to a hypergeometric parameter tuple (a1, a2, a3, b2, b3):
//   c00 = (b2+b3) - (a1+a2+a3) - 1,  c_{j1} = a_j - 1,  c_{jl} = b_l - a_j - 1.
// The principal 5-tuple c' = (c00, c21, c22, c33, c31) determines the rest.

#include <array>
#include <string>

#include "catalan/exact.hpp"

namespace catalan {

enum class CLabel : int {
    c00 = 0, c11, c12, c13, c21, c22, c23, c31, c32, c33
};
inline constexpr int kCVectorSize = 10;
extern const std::array<const char*, kCVectorSize> kCLabelNames;

class CVector {
public:
    // From the underlying parameters; always consistent.
    static CVector from_abc(const BigRat& a1, const BigRat& a2, const BigRat& a3,
                            const BigRat& b2, const BigRat& b3);
    // From the principal 5-tuple (c00, c21, c22, c33, c31).
    static CVector from_principal(const std::array<BigRat, 5>& cp);
    // From all ten entries; throws DomainError unless the defining relations hold.
    static CVector from_entries(const std::array<BigRat, kCVectorSize>& e);

    const BigRat& at(CLabel l) const { return e_[static_cast<size_t>(l)]; }
    const std::array<BigRat, kCVectorSize>& entries() const { return e_; }
    std::array<BigRat, 5> principal() const; // (c00, c21, c22, c33, c31)
    std::array<BigRat, 5> abc() const;       // (a1, a2, a3, b2, b3)

    bool admissible() const;        // every entry > -1
    bool strictly_positive() const; // every entry > 0

    // Half-integer typing: c00, c21, c33 in Z+1/2 and c22, c31 in Z.  The
    // equivalent complementary typing (c13, c12, c32 in Z+1/2 and c11, c23
    // in Z) is asserted to agree; disagreement marks an ill-formed vector.
    bool demi_integral() const;

    std::string str() const;

    friend bool operator==(const CVector& a, const CVector& b) { return a.e_ == b.e_; }
    friend bool operator<(const CVector& a, const CVector& b);

private:
    std::array<BigRat, kCVectorSize> e_;
};

// h-parameter tuple; the demi-integral sources have h0, h4 integers and
// h1, h2, h3 half-odd integers.
struct HParams {
    BigRat h0, h1, h2, h3, h4;
    bool demi_typing() const;      // h0, h4 integers; h1, h2, h3 half-odd
    bool positivity() const;       // h_j > 0 and 1+h0-h_j-h_l > 0 for j,l in 1..4
};

// a1 = 1+h0-h1-h2, a2 = h3, a3 = h4, b2 = 1+h0-h1, b3 = 1+h0-h2, then c.
CVector c_from_h(const HParams& h);

// The h-parameters of the alternating-series family at index n:
// (3n+1, n+1/2, n+1/2, n+1/2, n+1).
HParams wellpoised_family_h(long n);

// The c-vector of the Euler-type double integral at index n:
// (c11, c21, c22, c31, c33) = (n-1, n-3/2, n, n-1, n-1/2).
CVector euler_cvector(long n);

// Denominator-shape parameters for the experimental inclusion probe:
// M = c22 + c31, and m1 >= m2 the two largest among the ten doubled entries.
struct DenomExponents {
    BigRat big_m;
    BigRat m1, m2;
};
DenomExponents m_params(const CVector& c);

} // namespace catalan
