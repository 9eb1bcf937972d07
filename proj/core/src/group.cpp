#include "catalan/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "catalan/beta_ref.hpp"
#include "catalan/errors.hpp"
#include "catalan/hyper.hpp"
#include "catalan/relation.hpp"

namespace catalan {

namespace {

Permutation10 perm_from_transpositions(
    std::initializer_list<std::pair<CLabel, CLabel>> swaps) {
    Permutation10 p = Permutation10::identity();
    for (const auto& [x, y] : swaps) {
        p.image[static_cast<size_t>(x)] = static_cast<int>(y);
        p.image[static_cast<size_t>(y)] = static_cast<int>(x);
    }
    return p;
}

} // namespace

Permutation10 Permutation10::identity() {
    Permutation10 p;
    for (int i = 0; i < kCVectorSize; ++i) p.image[i] = i;
    return p;
}

bool Permutation10::is_identity() const { return *this == identity(); }

Permutation10 Permutation10::inverse() const {
    Permutation10 r;
    for (int i = 0; i < kCVectorSize; ++i) r.image[image[i]] = i;
    return r;
}

CVector Permutation10::apply(const CVector& c) const {
    std::array<BigRat, kCVectorSize> out;
    const auto& in = c.entries();
    for (int i = 0; i < kCVectorSize; ++i) out[image[i]] = in[i];
    return CVector::from_entries(out);
}

std::string Permutation10::cycles() const {
    std::array<bool, kCVectorSize> seen{};
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < kCVectorSize; ++i) {
        if (seen[i] || image[i] == i) continue;
        os << "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << " ";
            os << kCLabelNames[j];
            first = false;
            j = image[j];
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : std::string("()");
}

Permutation10 operator*(const Permutation10& p, const Permutation10& q) {
    Permutation10 r;
    for (int i = 0; i < kCVectorSize; ++i) r.image[i] = p.image[q.image[i]];
    return r;
}

const std::array<NamedPermutation, 4>& group_generators() {
    static const std::array<NamedPermutation, 4> gens = {
        NamedPermutation{"a1", perm_from_transpositions({{CLabel::c11, CLabel::c31},
                                                         {CLabel::c12, CLabel::c32},
                                                         {CLabel::c13, CLabel::c33}})},
        NamedPermutation{"a2", perm_from_transpositions({{CLabel::c21, CLabel::c31},
                                                         {CLabel::c22, CLabel::c32},
                                                         {CLabel::c23, CLabel::c33}})},
        NamedPermutation{"b", perm_from_transpositions({{CLabel::c12, CLabel::c13},
                                                        {CLabel::c22, CLabel::c23},
                                                        {CLabel::c32, CLabel::c33}})},
        NamedPermutation{"h", perm_from_transpositions({{CLabel::c00, CLabel::c22},
                                                        {CLabel::c11, CLabel::c33},
                                                        {CLabel::c13, CLabel::c31}})}};
    return gens;
}

const GroupClosure& generate_group() {
    static const GroupClosure closure = [] {
        constexpr size_t kSafetyCap = 10000;
        GroupClosure out;
        std::map<Permutation10, size_t> seen;
        GroupElement id{Permutation10::identity(), "e", 0};
        out.elements.push_back(id);
        seen.emplace(id.perm, 0);
        size_t frontier_begin = 0;
        while (frontier_begin < out.elements.size()) {
            size_t frontier_end = out.elements.size();
            for (size_t i = frontier_begin; i < frontier_end; ++i) {
                GroupElement cur = out.elements[i]; // copy: vector may reallocate
                for (const NamedPermutation& g : group_generators()) {
                    Permutation10 next = g.perm * cur.perm; // apply cur, then g
                    if (seen.count(next)) continue;
                    GroupElement ge;
                    ge.perm = next;
                    ge.word = (cur.length == 0) ? g.name : g.name + "*" + cur.word;
                    ge.length = cur.length + 1;
                    seen.emplace(next, out.elements.size());
                    out.elements.push_back(std::move(ge));
                    if (out.elements.size() > kSafetyCap) {
                        throw DomainError("generate_group: closure exceeded safety cap");
                    }
                }
            }
            frontier_begin = frontier_end;
        }
        if (out.elements.size() != 120) {
            throw DomainError("generate_group: closure has " +
                              std::to_string(out.elements.size()) +
                              " elements, expected 120");
        }
        out.max_word_length = 0;
        for (const GroupElement& ge : out.elements) {
            out.max_word_length = std::max(out.max_word_length, ge.length);
        }
        return out;
    }();
    return closure;
}

std::vector<OrbitElement> orbit(const CVector& c) {
    std::map<CVector, OrbitElement> by_vector;
    for (const GroupElement& ge : generate_group().elements) {
        CVector image = ge.perm.apply(c);
        auto it = by_vector.find(image);
        if (it != by_vector.end()) continue; // BFS order: first word is shortest
        OrbitElement oe;
        oe.word = ge.word;
        oe.admissible = image.admissible();
        oe.demi_integral = image.demi_integral();
        oe.c = std::move(image);
        CVector key = oe.c;
        by_vector.emplace(std::move(key), std::move(oe));
    }
    std::vector<OrbitElement> out;
    out.reserve(by_vector.size());
    for (auto& [key, oe] : by_vector) out.push_back(oe);
    return out;
}

GammaExact pi_product(const CVector& c) {
    static const std::array<CLabel, 5> principal_labels = {
        CLabel::c00, CLabel::c21, CLabel::c22, CLabel::c33, CLabel::c31};
    GammaExact prod{BigRat(1), 0};
    for (CLabel l : principal_labels) {
        const BigRat& x = c.at(l);
        if (x.is_integer() && !(x.sign() > 0)) {
            throw DomainError(std::string("pi_product: Gamma pole at ") +
                              kCLabelNames[static_cast<size_t>(l)] + " = " + x.str());
        }
        prod = prod * gamma_exact(QuarterInt::from_rat(x));
    }
    return prod;
}

StabilityResult stability_check(const CVector& c, const Permutation10& sigma,
                                long precision_bits) {
    CVector sc = sigma.apply(c);
    if (!c.strictly_positive() || !sc.strictly_positive()) {
        throw DomainError(
            "stability_check: requires every entry of c and sigma c strictly "
            "positive");
    }
    GammaExact pi_c = pi_product(c);
    GammaExact pi_sc = pi_product(sc);
    HValue h_c = h_beta_series(c, precision_bits);
    HValue h_sc = h_beta_series(sc, precision_bits);

    const long wp = precision_bits + 32;
    StabilityResult out;
    out.lhs = h_c.value / gamma_to_real(pi_c, wp);
    out.rhs = h_sc.value / gamma_to_real(pi_sc, wp);
    out.residual = (out.lhs - out.rhs).abs();
    out.sqrt_pi_power_diff = pi_sc.sqrt_pi_power - pi_c.sqrt_pi_power;
    return out;
}

ProbeResult probe_denominator_inclusion(const CVector& c, const std::string& label,
                                        long precision_bits, long slack,
                                        const BigInt& denominator_cap) {
    if (!c.demi_integral()) {
        throw DomainError("probe_denominator_inclusion: requires demi-integral c");
    }
    ProbeResult out;
    out.label = label;
    DenomExponents de = m_params(c);
    out.big_m = de.big_m;
    out.m1 = de.m1;
    out.m2 = de.m2;
    if (!de.big_m.is_integer() || !de.m1.is_integer() || !de.m2.is_integer()) {
        throw DomainError("probe_denominator_inclusion: non-integer exponents for " +
                          c.str());
    }
    long big_m = mpz_get_si(de.big_m.num().get_mpz_t());
    long m1 = mpz_get_si(de.m1.num().get_mpz_t());
    long m2 = mpz_get_si(de.m2.num().get_mpz_t());
    long e2 = 2 * big_m + slack;
    if (e2 < 0) e2 = 0;
    out.modulus = pow2(e2) * lcm_upto(m1) * lcm_upto(m2);

    HValue h = h_beta_series(c, precision_bits);
    HPReal g = reference_catalan(precision_bits);
    RelationResult rel = detect_relation(h.value, g, denominator_cap);
    out.resolved = rel.status == RelationStatus::found;
    out.inconclusive = rel.status == RelationStatus::inconclusive;
    if (out.resolved) {
        out.p = rel.p;
        out.q = rel.q;
        out.p_divides = mpz_divisible_p(out.modulus.get_mpz_t(),
                                        rel.p.den().get_mpz_t()) != 0;
        out.q_divides = mpz_divisible_p(out.modulus.get_mpz_t(),
                                        rel.q.den().get_mpz_t()) != 0;
    }
    return out;
}

} // namespace catalan
