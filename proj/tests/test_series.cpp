#include <doctest.h>

#include "catalan/beta_ref.hpp"
#include "catalan/series.hpp"

using namespace catalan;

TEST_CASE("pfq_truncated: 2F1(1,1;2;-1) = ln 2") {
    // Terms decay like 1/k, so only a modest certified tolerance is feasible.
    long bits = 64, certify = 16;
    PfqResult r = pfq_truncated({BigRat(1), BigRat(1)}, {BigRat(2)}, -1, bits, certify);
    CHECK(r.certified);
    CHECK(r.tail_bound <= HPReal::pow2(-certify, 64));
    HPReal ln2 = HPReal(2, bits + 16).log();
    CHECK((r.value - ln2).abs() <= r.tail_bound + HPReal::pow2(-bits + 8, bits));
}

TEST_CASE("pfq_truncated: 0F0(;;-1) = 1/e") {
    long bits = 160;
    PfqResult r = pfq_truncated({}, {}, -1, bits);
    CHECK(r.certified);
    HPReal inv_e = HPReal(1, bits + 16) / HPReal(1, bits + 16).exp();
    CHECK((r.value - inv_e).abs() <= r.tail_bound + HPReal::pow2(-bits + 8, bits));
}

TEST_CASE("pfq_truncated: terminating series is exact") {
    // 1F0(-3;;1): sum_k C(-3,k)... = (1-1)^3 = 0.
    PfqResult r = pfq_truncated({BigRat(-3)}, {}, 1, 128);
    CHECK(r.terminated);
    CHECK(r.certified);
    CHECK(r.value.is_zero());
    // 2F1(-2, 1; 1; -1) = sum C(2,k) = 4.
    PfqResult r2 = pfq_truncated({BigRat(-2), BigRat(1)}, {BigRat(1)}, -1, 128);
    CHECK(r2.terminated);
    CHECK(r2.value == HPReal(4, 128));
}

TEST_CASE("pfq_truncated rejects bad parameter sets") {
    // Non-positive integer lower parameter.
    CHECK_THROWS_AS(pfq_truncated({BigRat(1)}, {BigRat(0)}, 1, 64), DomainError);
    CHECK_THROWS_AS(pfq_truncated({BigRat(1)}, {BigRat(-2)}, -1, 64), DomainError);
    // Divergent at z=1: 2F1(1,1;1;1) has sum(lower)-sum(upper) = -1.
    CHECK_THROWS_AS(pfq_truncated({BigRat(1), BigRat(1)}, {BigRat(1)}, 1, 64), DomainError);
    // p > q+1 never converges at |z|=1.
    CHECK_THROWS_AS(pfq_truncated({BigRat(1), BigRat(1), BigRat(1)}, {}, -1, 64),
                    DomainError);
    // z must be +1 or -1.
    CHECK_THROWS_AS(pfq_truncated({BigRat(1)}, {BigRat(2)}, 0, 64), DomainError);
}

TEST_CASE("pfq_truncated throws PrecisionError when the budget is too small") {
    // ln 2 needs ~2^128 terms for 128 certified bits by raw alternating sums;
    // 100 terms cannot reach it.
    CHECK_THROWS_AS(
        pfq_truncated({BigRat(1), BigRat(1)}, {BigRat(2)}, -1, 128, 128, 100),
        PrecisionError);
}

TEST_CASE("wellpoised_alternating_sum with three (1/2,3/2) pairs equals G") {
    // sum (-1)^k (2k+1) [ (1/2)_k / (3/2)_k ]^3 = sum (-1)^k / (2k+1)^2 = G.
    long bits = 150;
    std::vector<std::pair<BigRat, BigRat>> pairs(3, {BigRat(1, 2), BigRat(3, 2)});
    WellPoisedSum s = wellpoised_alternating_sum(1, pairs, bits);
    HPReal g = reference_catalan(bits + 32);
    HPReal err = (HPReal(s.value, bits + 32) - g).abs();
    CHECK(err <= HPReal(s.tail_bound, 64) + HPReal::pow2(-bits, 64));
    CHECK(s.tail_bound <= BigRat(BigInt(1), pow2(static_cast<unsigned long>(bits))));
    CHECK(s.tail_bound > BigRat(0));
}

TEST_CASE("wellpoised_alternating_sum validates its pairs") {
    // u must satisfy 0 < u < l.
    CHECK_THROWS_AS(
        wellpoised_alternating_sum(1, {{BigRat(3, 2), BigRat(1, 2)}}, 64),
        DomainError);
    CHECK_THROWS_AS(
        wellpoised_alternating_sum(1, {{BigRat(-1, 2), BigRat(5, 2)}}, 64),
        DomainError);
    // a must be a positive integer.
    CHECK_THROWS_AS(
        wellpoised_alternating_sum(0, {{BigRat(1, 2), BigRat(3, 2)}}, 64),
        DomainError);
}

TEST_CASE("tail_expansion reproduces the zeta(2) tail") {
    // t_k = 1/(k+1)^2: ratio (k+1)^2/(k+2)^2, a = {1,1}, b = {2,2}.
    // Known: sum_{k>K} 1/(k+1)^2 = psi'(K+2) = 1/(K+2) + 1/(2(K+2)^2) + ...
    std::vector<BigRat> psi = tail_expansion({BigRat(1), BigRat(1)},
                                             {BigRat(2), BigRat(2)}, 30);
    long K = 40;
    BigRat tK1(BigInt(1), BigInt((K + 2) * (K + 2))); // t_{K+1} = 1/(K+2)^2
    BigRat x(BigInt(1), BigInt(K + 1));
    BigRat acc(0);
    for (auto it = psi.rbegin(); it != psi.rend(); ++it) acc = acc * x + *it;
    BigRat tail = tK1 * BigRat(K + 1) * acc;
    // Exact tail by direct summation of 4000 terms + integral bound sandwich.
    BigRat direct(0);
    for (long k = K + 1; k <= 4000; ++k) direct += BigRat(BigInt(1), BigInt(k + 1) * (k + 1));
    // remainder after 4000 is between 1/4002 and 1/4001
    CHECK(tail > direct + BigRat(1, 4003));
    CHECK(tail < direct + BigRat(1, 4000));
}

TEST_CASE("sum_positive_hypergeometric on zeta(2) tail machinery") {
    // sum 1/(k+1)^2 = pi^2/6: t0 = 1, a = {1,1}, b = {2,2}; sbar = 2 > 1.
    RefinedSeries r = sum_positive_hypergeometric(BigRat(1), {BigRat(1), BigRat(1)},
                                                  {BigRat(2), BigRat(2)}, 400, 30);
    long bits = 192;
    HPReal pi2_6 = HPReal::pi(bits) * HPReal::pi(bits) / HPReal(6, bits);
    HPReal err = (HPReal(r.value(), bits) - pi2_6).abs();
    // The refined tail is very accurate; the crude envelope is rigorous.
    CHECK(err <= HPReal(r.crude_tail_max, 64));
    CHECK(err <= HPReal::pow2(-40, 64)); // refinement beats the envelope by far
    CHECK(r.partial > BigRat(0));
    CHECK(HPReal(r.partial, bits) <= pi2_6);
    CHECK(HPReal(r.partial + r.crude_tail_max, bits) >= pi2_6);
}

TEST_CASE("sum_positive_hypergeometric rejects sbar <= 1") {
    // a = {1}, b = {2}: sbar = 1, harmonic-type divergence of the tail bound.
    CHECK_THROWS_AS(
        sum_positive_hypergeometric(BigRat(1), {BigRat(1)}, {BigRat(2)}, 50, 10),
        DomainError);
}

TEST_CASE("poly_nonneg_shifted") {
    // (x-1)(x-2) = x^2 - 3x + 2 is >= 0 for x >= 3 but the shifted test is
    // coefficient-wise: at shift 3 coefficients are (2, 3, 1) >= 0.
    std::vector<BigRat> p = {BigRat(2), BigRat(-3), BigRat(1)};
    CHECK(poly_nonneg_shifted(p, BigRat(3)));
    CHECK(poly_nonneg_shifted(p, BigRat(2))); // (0, 1, 1)
    CHECK(!poly_nonneg_shifted(p, BigRat(1))); // (0, -1, 1)
    CHECK(poly_nonneg_shifted({BigRat(5)}, BigRat(-100)));
}
