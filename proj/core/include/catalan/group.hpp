#pragma once

// The order-120 permutation group acting on the 10-element parameter set c,
// generated by four involutions; orbits, the exact Gamma-product Pi(c), the
// numerical stability check of H(c)/Pi(c) along group moves, and the
// denominator-divisibility probe for detected G-relations.

#include <array>
#include <string>
#include <vector>

#include "catalan/cvector.hpp"
#include "catalan/exact.hpp"
#include "catalan/gamma_exact.hpp"
#include "catalan/hp_real.hpp"

namespace catalan {

struct Permutation10 {
    // image[i] = where label i is sent; left action (sigma c)[image[i]] = c[i].
    std::array<int, kCVectorSize> image;

    static Permutation10 identity();
    bool is_identity() const;
    Permutation10 inverse() const;
    CVector apply(const CVector& c) const; // revalidates the defining relations
    std::string cycles() const;            // e.g. "(c00 c22)(c11 c33)(c13 c31)"

    friend Permutation10 operator*(const Permutation10& p, const Permutation10& q); // apply q, then p
    friend bool operator==(const Permutation10& a, const Permutation10& b) {
        return a.image == b.image;
    }
    friend bool operator<(const Permutation10& a, const Permutation10& b) {
        return a.image < b.image;
    }
};

struct NamedPermutation {
    std::string name;
    Permutation10 perm;
};

// The four generating involutions:
//   a1 = (c11 c31)(c12 c32)(c13 c33)   a2 = (c21 c31)(c22 c32)(c23 c33)
//   b  = (c12 c13)(c22 c23)(c32 c33)   h  = (c00 c22)(c11 c33)(c13 c31)
const std::array<NamedPermutation, 4>& group_generators();

struct GroupElement {
    Permutation10 perm;
    std::string word; // shortest product of generators, rightmost applied first; "e" = identity
    int length = 0;   // number of generator letters in word
};

struct GroupClosure {
    std::vector<GroupElement> elements; // breadth-first discovery order
    int max_word_length = 0;
};

// Closure of the four generators; throws DomainError if the closure does not
// come out to exactly 120 elements (transcription damage), with a hard safety
// cap well below 10!.
const GroupClosure& generate_group();

struct OrbitElement {
    CVector c;
    std::string word; // a shortest group word mapping the base vector here
    bool admissible = false;
    bool demi_integral = false;
};

// {sigma c : sigma in the group}, deduplicated, sorted by c.
std::vector<OrbitElement> orbit(const CVector& c);

// Pi(c) = Gamma(c00) Gamma(c21) Gamma(c22) Gamma(c33) Gamma(c31), exact.
// Throws DomainError naming the offending label if an argument is a pole.
GammaExact pi_product(const CVector& c);

struct StabilityResult {
    HPReal lhs;      // H(c) / Pi(c)
    HPReal rhs;      // H(sigma c) / Pi(sigma c)
    HPReal residual; // |lhs - rhs|
    long sqrt_pi_power_diff = 0; // Pi(sigma c) power minus Pi(c) power
};

// Requires every entry of both c and sigma c strictly positive (all Gamma
// arguments positive, both series convergent); DomainError otherwise.
StabilityResult stability_check(const CVector& c, const Permutation10& sigma,
                                long precision_bits);

struct ProbeResult {
    std::string label;
    bool resolved = false; // detect_relation returned a verified (p, q)
    bool inconclusive = false;
    BigRat p, q;       // H(c) = p G + q when resolved
    BigRat big_m;      // M = c22 + c31
    BigRat m1, m2;     // two largest doubled entries
    BigInt modulus;    // 2^(2M+slack) * lcm(1..m1) * lcm(1..m2)
    bool p_divides = false; // denominator(p) | modulus
    bool q_divides = false;
};

// Experimental denominator-inclusion probe: detects H(c) = pG + q and reports
// whether den(p), den(q) divide 2^(2M+slack) D_{m1} D_{m2}.  Evidence only;
// nothing is asserted from the outcome.
ProbeResult probe_denominator_inclusion(const CVector& c, const std::string& label,
                                        long precision_bits, long slack,
                                        const BigInt& denominator_cap);

} // namespace catalan
