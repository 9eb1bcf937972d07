#include <doctest.h>

#include "catalan/beta_ref.hpp"
#include "catalan/hp_real.hpp"

using namespace catalan;

namespace {
// 100 decimals of G, an independent external anchor for the whole suite.
const char* kG100 =
    "0.9159655941772190150546035149323841107741493742816721342664981196217630"
    "197762547694793565129261151062485";
} // namespace

TEST_CASE("reference_catalan matches the published decimal expansion") {
    long bits = 340; // ~102 decimal digits
    HPReal g = reference_catalan(bits);
    HPReal anchor = HPReal::from_string(kG100, bits + 16);
    CHECK((g - anchor).abs() <= HPReal::pow2(-330, bits));
}

TEST_CASE("reference_catalan is self-consistent across precisions") {
    HPReal a = reference_catalan(128);
    HPReal b = reference_catalan(256);
    HPReal c = reference_catalan(512);
    CHECK((a - b).abs() <= HPReal::pow2(-126, 256));
    CHECK((b - c).abs() <= HPReal::pow2(-254, 512));
}

TEST_CASE("reference_catalan_terms converges at the documented rate") {
    // n terms give error <= 2 * (3+sqrt 8)^-n ~ 2 * 10^(-0.7656 n).
    long wp = 512;
    HPReal g = reference_catalan(wp);
    HPReal after40 = reference_catalan_terms(40, wp);
    HPReal after80 = reference_catalan_terms(80, wp);
    HPReal bound40 = HPReal(2, wp) * HPReal(BigRat(1, 5), wp).pow_si(40); // (3+sqrt8) > 5
    HPReal bound80 = HPReal(2, wp) * HPReal(BigRat(1, 5), wp).pow_si(80);
    CHECK((after40 - g).abs() <= bound40);
    CHECK((after80 - g).abs() <= bound80);
    CHECK((after80 - g).abs() <= (after40 - g).abs());
}

TEST_CASE("builtin library value agrees with the independent series") {
    long bits = 256;
    CHECK((HPReal::builtin_catalan(bits) - reference_catalan(bits)).abs() <=
          HPReal::pow2(-250, bits));
}
