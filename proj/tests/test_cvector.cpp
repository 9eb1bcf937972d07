#include <doctest.h>

#include <random>

#include "catalan/cvector.hpp"

using namespace catalan;

TEST_CASE("CVector construction from parameters and principal tuple") {
    CVector c = CVector::from_abc(BigRat(2), BigRat(3, 2), BigRat(2), BigRat(7, 2), BigRat(7, 2));
    auto cp = c.principal();
    CHECK(cp[0] == BigRat(1, 2)); // c00
    CHECK(cp[1] == BigRat(1, 2)); // c21
    CHECK(cp[2] == BigRat(1));    // c22
    CHECK(cp[3] == BigRat(1, 2)); // c33
    CHECK(cp[4] == BigRat(1));    // c31
    CHECK(c.at(CLabel::c11) == BigRat(1));
    CHECK(c.at(CLabel::c12) == BigRat(1, 2));
    CHECK(c.at(CLabel::c23) == BigRat(1));
    CHECK(c.at(CLabel::c32) == BigRat(1, 2));

    CVector c2 = CVector::from_principal(cp);
    CHECK(c2 == c);
    auto abc = c2.abc();
    CHECK(abc[0] == BigRat(2));
    CHECK(abc[1] == BigRat(3, 2));
    CHECK(abc[2] == BigRat(2));
    CHECK(abc[3] == BigRat(7, 2));
    CHECK(abc[4] == BigRat(7, 2));
}

TEST_CASE("from_entries validates the defining relations") {
    CVector c = CVector::from_principal({BigRat(1, 2), BigRat(1, 2), BigRat(1),
                                         BigRat(1, 2), BigRat(1)});
    CHECK(CVector::from_entries(c.entries()) == c);
    auto bad = c.entries();
    bad[static_cast<size_t>(CLabel::c12)] += BigRat(1);
    CHECK_THROWS_AS(CVector::from_entries(bad), DomainError);
}

TEST_CASE("admissibility and positivity predicates") {
    CVector e1 = euler_cvector(1);
    CHECK(e1.admissible());        // c21 = -1/2 > -1
    CHECK(!e1.strictly_positive());
    CVector w1 = c_from_h(wellpoised_family_h(1));
    CHECK(w1.admissible());
    CHECK(w1.strictly_positive());
    // An entry at exactly -1 is not admissible.
    CVector edge = CVector::from_abc(BigRat(1), BigRat(0), BigRat(1), BigRat(2), BigRat(2));
    CHECK(edge.at(CLabel::c21) == BigRat(-1));
    CHECK(!edge.admissible());
}

TEST_CASE("demi-integral typing on both sublattices") {
    CHECK(euler_cvector(1).demi_integral());
    CHECK(euler_cvector(2).demi_integral());
    CHECK(c_from_h(wellpoised_family_h(1)).demi_integral());
    CHECK(c_from_h(wellpoised_family_h(2)).demi_integral());
    // All integer entries: not demi-integral, but must not throw.
    CVector ints = CVector::from_abc(BigRat(1), BigRat(1), BigRat(1), BigRat(2), BigRat(2));
    CHECK(!ints.demi_integral());
}

TEST_CASE("random demi vectors have agreeing dual typing") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> halfodd(-4, 4), ints(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        BigRat c00(2 * halfodd(rng) + 1, 2);
        BigRat c21(2 * halfodd(rng) + 1, 2);
        BigRat c33(2 * halfodd(rng) + 1, 2);
        BigRat c22(ints(rng));
        BigRat c31(ints(rng));
        CVector c = CVector::from_principal({c00, c21, c22, c33, c31});
        // demi_integral() would throw if the two typings ever disagreed.
        CHECK(c.demi_integral());
    }
}

TEST_CASE("euler_cvector values") {
    CVector e1 = euler_cvector(1);
    auto cp = e1.principal();
    CHECK(cp[0] == BigRat(3, 2));  // c00
    CHECK(cp[1] == BigRat(-1, 2)); // c21
    CHECK(cp[2] == BigRat(1));     // c22
    CHECK(cp[3] == BigRat(1, 2));  // c33
    CHECK(cp[4] == BigRat(0));     // c31
    CHECK(e1.at(CLabel::c11) == BigRat(0));
    // General n: a = (n, n-1/2, n), b = (2n+1/2, 2n+1/2).
    CVector e3 = euler_cvector(3);
    auto abc = e3.abc();
    CHECK(abc[0] == BigRat(3));
    CHECK(abc[1] == BigRat(5, 2));
    CHECK(abc[2] == BigRat(3));
    CHECK(abc[3] == BigRat(13, 2));
    CHECK(abc[4] == BigRat(13, 2));
}

TEST_CASE("wellpoised_family_h parameters and typing") {
    HParams h1 = wellpoised_family_h(1);
    CHECK(h1.h0 == BigRat(4));
    CHECK(h1.h1 == BigRat(3, 2));
    CHECK(h1.h2 == BigRat(3, 2));
    CHECK(h1.h3 == BigRat(3, 2));
    CHECK(h1.h4 == BigRat(2));
    CHECK(h1.demi_typing());
    CHECK(h1.positivity());
    for (long n = 1; n <= 5; ++n) {
        HParams h = wellpoised_family_h(n);
        CHECK(h.demi_typing());
        CHECK(h.positivity());
        CHECK(c_from_h(h).demi_integral());
    }
    // Positivity failure: 1 + h0 - h1 - h2 = -1 < 0.
    HParams bad{BigRat(1), BigRat(3, 2), BigRat(3, 2), BigRat(3, 2), BigRat(1)};
    CHECK(!bad.positivity());
}

TEST_CASE("c_from_h reconstruction") {
    // a1 = 1+h0-h1-h2, a2 = h3, a3 = h4, b2 = 1+h0-h1, b3 = 1+h0-h2.
    CVector w1 = c_from_h(wellpoised_family_h(1));
    auto abc = w1.abc();
    CHECK(abc[0] == BigRat(2));
    CHECK(abc[1] == BigRat(3, 2));
    CHECK(abc[2] == BigRat(2));
    CHECK(abc[3] == BigRat(7, 2));
    CHECK(abc[4] == BigRat(7, 2));
    auto cp = w1.principal();
    CHECK(cp[0] == BigRat(1, 2));
    CHECK(cp[1] == BigRat(1, 2));
    CHECK(cp[2] == BigRat(1));
    CHECK(cp[3] == BigRat(1, 2));
    CHECK(cp[4] == BigRat(1));
}

TEST_CASE("m_params: M and the two largest doubled entries") {
    DenomExponents d1 = m_params(euler_cvector(1));
    CHECK(d1.big_m == BigRat(1)); // c22 + c31 = 1 + 0
    CHECK(d1.m1 == BigRat(3));    // doubled c00 = 3
    CHECK(d1.m2 == BigRat(2));    // doubled c22 = doubled c23 = 2

    // Alternating-series family at n = 1: all doubled entries are 1 or 2.
    DenomExponents dw = m_params(c_from_h(wellpoised_family_h(1)));
    CHECK(dw.big_m == BigRat(2)); // c22 + c31 = 1 + 1
    CHECK(dw.m1 == BigRat(2));
    CHECK(dw.m2 == BigRat(2));
}

TEST_CASE("string rendering is stable") {
    CVector e1 = euler_cvector(1);
    CHECK(e1.str().find("3/2") != std::string::npos);
    CHECK(CVector::from_principal(e1.principal()).str() == e1.str());
}
