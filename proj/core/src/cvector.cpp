#include "catalan/cvector.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "catalan/errors.hpp"

namespace catalan {

const std::array<const char*, kCVectorSize> kCLabelNames = {
    "c00", "c11", "c12", "c13", "c21", "c22", "c23", "c31", "c32", "c33"};

namespace {

size_t idx(CLabel l) { return static_cast<size_t>(l); }

bool is_half_odd(const BigRat& x) {
    BigRat twice = x * BigRat(2);
    return twice.is_integer() && !x.is_integer();
}

} // namespace

CVector CVector::from_abc(const BigRat& a1, const BigRat& a2, const BigRat& a3,
                          const BigRat& b2, const BigRat& b3) {
    CVector c;
    const BigRat one(1);
    c.e_[idx(CLabel::c00)] = (b2 + b3) - (a1 + a2 + a3) - one;
    c.e_[idx(CLabel::c11)] = a1 - one;
    c.e_[idx(CLabel::c21)] = a2 - one;
    c.e_[idx(CLabel::c31)] = a3 - one;
    c.e_[idx(CLabel::c12)] = b2 - a1 - one;
    c.e_[idx(CLabel::c22)] = b2 - a2 - one;
    c.e_[idx(CLabel::c32)] = b2 - a3 - one;
    c.e_[idx(CLabel::c13)] = b3 - a1 - one;
    c.e_[idx(CLabel::c23)] = b3 - a2 - one;
    c.e_[idx(CLabel::c33)] = b3 - a3 - one;
    return c;
}

CVector CVector::from_principal(const std::array<BigRat, 5>& cp) {
    // cp = (c00, c21, c22, c33, c31)
    const BigRat one(1);
    BigRat a2 = cp[1] + one;
    BigRat a3 = cp[4] + one;
    BigRat b2 = cp[2] + a2 + one;
    BigRat b3 = cp[3] + a3 + one;
    BigRat a1 = b2 + b3 - one - cp[0] - a2 - a3;
    return from_abc(a1, a2, a3, b2, b3);
}

CVector CVector::from_entries(const std::array<BigRat, kCVectorSize>& e) {
    std::array<BigRat, 5> cp = {e[idx(CLabel::c00)], e[idx(CLabel::c21)],
                                e[idx(CLabel::c22)], e[idx(CLabel::c33)],
                                e[idx(CLabel::c31)]};
    CVector c = from_principal(cp);
    for (size_t i = 0; i < kCVectorSize; ++i) {
        if (!(c.e_[i] == e[i])) {
            throw DomainError(std::string("inconsistent c-vector entry ") +
                              kCLabelNames[i] + ": got " + e[i].str() +
                              ", relations give " + c.e_[i].str());
        }
    }
    return c;
}

std::array<BigRat, 5> CVector::principal() const {
    return {e_[idx(CLabel::c00)], e_[idx(CLabel::c21)], e_[idx(CLabel::c22)],
            e_[idx(CLabel::c33)], e_[idx(CLabel::c31)]};
}

std::array<BigRat, 5> CVector::abc() const {
    const BigRat one(1);
    BigRat a1 = e_[idx(CLabel::c11)] + one;
    BigRat a2 = e_[idx(CLabel::c21)] + one;
    BigRat a3 = e_[idx(CLabel::c31)] + one;
    BigRat b2 = e_[idx(CLabel::c22)] + a2 + one;
    BigRat b3 = e_[idx(CLabel::c33)] + a3 + one;
    return {a1, a2, a3, b2, b3};
}

bool CVector::admissible() const {
    const BigRat neg_one(-1);
    return std::all_of(e_.begin(), e_.end(),
                       [&](const BigRat& x) { return x > neg_one; });
}

bool CVector::strictly_positive() const {
    return std::all_of(e_.begin(), e_.end(),
                       [](const BigRat& x) { return x.sign() > 0; });
}

bool CVector::demi_integral() const {
    bool primary = is_half_odd(at(CLabel::c00)) && is_half_odd(at(CLabel::c21)) &&
                   is_half_odd(at(CLabel::c33)) && at(CLabel::c22).is_integer() &&
                   at(CLabel::c31).is_integer();
    bool complementary =
        is_half_odd(at(CLabel::c13)) && is_half_odd(at(CLabel::c12)) &&
        is_half_odd(at(CLabel::c32)) && at(CLabel::c11).is_integer() &&
        at(CLabel::c23).is_integer();
    if (primary != complementary) {
        throw DomainError("half-integer typings disagree for c-vector " + str());
    }
    return primary;
}

std::string CVector::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < kCVectorSize; ++i) {
        if (i) os << ", ";
        os << kCLabelNames[i] << "=" << e_[i].str();
    }
    os << ")";
    return os.str();
}

bool operator<(const CVector& a, const CVector& b) {
    return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(),
                                        b.e_.end());
}

bool HParams::demi_typing() const {
    return h0.is_integer() && h4.is_integer() && is_half_odd(h1) &&
           is_half_odd(h2) && is_half_odd(h3);
}

bool HParams::positivity() const {
    const std::array<const BigRat*, 4> hs = {&h1, &h2, &h3, &h4};
    for (const BigRat* h : hs) {
        if (!(h->sign() > 0)) return false;
    }
    const BigRat one(1);
    for (const BigRat* hj : hs) {
        for (const BigRat* hl : hs) {
            if (!((one + h0 - *hj - *hl).sign() > 0)) return false;
        }
    }
    return true;
}

CVector c_from_h(const HParams& h) {
    const BigRat one(1);
    BigRat a1 = one + h.h0 - h.h1 - h.h2;
    BigRat a2 = h.h3;
    BigRat a3 = h.h4;
    BigRat b2 = one + h.h0 - h.h1;
    BigRat b3 = one + h.h0 - h.h2;
    return CVector::from_abc(a1, a2, a3, b2, b3);
}

HParams wellpoised_family_h(long n) {
    HParams h;
    h.h0 = BigRat(3 * n + 1);
    h.h1 = BigRat(2 * n + 1, 2);
    h.h2 = h.h1;
    h.h3 = h.h1;
    h.h4 = BigRat(n + 1);
    return h;
}

CVector euler_cvector(long n) {
    BigRat a1(n);
    BigRat a2(2 * n - 1, 2);
    BigRat a3(n);
    BigRat b2(4 * n + 1, 2);
    BigRat b3 = b2;
    return CVector::from_abc(a1, a2, a3, b2, b3);
}

DenomExponents m_params(const CVector& c) {
    DenomExponents d;
    d.big_m = c.at(CLabel::c22) + c.at(CLabel::c31);
    std::vector<BigRat> doubled;
    doubled.reserve(kCVectorSize);
    for (const BigRat& x : c.entries()) doubled.push_back(x * BigRat(2));
    std::sort(doubled.begin(), doubled.end(),
              [](const BigRat& a, const BigRat& b) { return b < a; });
    d.m1 = doubled[0];
    d.m2 = doubled[1];
    return d;
}

} // namespace catalan
