#include <doctest.h>

#include "catalan/beta_ref.hpp"
#include "catalan/forms.hpp"
#include "catalan/recurrence.hpp"

using namespace catalan;

TEST_CASE("partial fraction coefficients at n = 1 and n = 2") {
    ACoeffs a1 = partial_fraction_coefficients(1);
    REQUIRE(a1.a.size() == 2);
    REQUIRE(a1.a_prime.size() == 2);
    CHECK(a1.a[0] == BigRat(-1, 256));
    CHECK(a1.a[1] == BigRat(-27, 256));
    CHECK(a1.a_prime[0] == BigRat(3, 256));
    CHECK(a1.a_prime[1] == BigRat(25, 256));

    ACoeffs a2 = partial_fraction_coefficients(2);
    REQUIRE(a2.a.size() == 3);
    CHECK(a2.a[0] == BigRat(9, 16384));
    CHECK(a2.a[1] == BigRat(125, 8192));
    CHECK(a2.a[2] == BigRat(10125, 16384));
    CHECK(a2.a_prime[0] == BigRat(-45, 16384));
    CHECK(a2.a_prime[1] == BigRat(-2205, 8192));
    CHECK(a2.a_prime[2] == BigRat(-5929, 16384));
}

TEST_CASE("coefficient balance and dyadic denominators") {
    for (long n = 0; n <= 30; ++n) {
        ACoeffs ac = partial_fraction_coefficients(n);
        BigRat total(0);
        BigInt scale = pow2(static_cast<unsigned long>(6 * n + 4));
        for (const auto& x : ac.a) {
            total += x;
            CHECK((x * BigRat(scale)).is_integer());
        }
        for (const auto& x : ac.a_prime) {
            total += x;
            CHECK((x * BigRat(scale)).is_integer());
        }
        CHECK(total.is_zero());
    }
}

TEST_CASE("kernel decomposition matches the coefficient formulas") {
    for (long n = 0; n <= 8; ++n) {
        PartialFractionForm pf = r_kernel(n);
        CHECK(pf.coefficient_sum().is_zero());
        ACoeffs ac = partial_fraction_coefficients(n);
        // Poles at (2n+3-4l)/4 carry a_l, poles at (2n+1-4l)/4 carry a'_l.
        for (long l = 0; l <= n; ++l) {
            BigInt qa(2 * n + 3 - 4 * l), qb(2 * n + 1 - 4 * l);
            BigRat ca, cb;
            for (const auto& [pole, coeff] : pf.terms) {
                if (pole.quadruple() == qa) ca = coeff;
                if (pole.quadruple() == qb) cb = coeff;
            }
            CHECK(ca == ac.a[static_cast<size_t>(l)]);
            CHECK(cb == ac.a_prime[static_cast<size_t>(l)]);
        }
    }
}

TEST_CASE("original family frozen values") {
    LinearFormQG f0 = linear_form_original(0);
    CHECK(f0.u == BigRat(1));
    CHECK(f0.v == BigRat(0));
    LinearFormQG f1 = linear_form_original(1);
    CHECK(f1.u == BigRat(7, 4));
    CHECK(f1.v == BigRat(13, 8));
    LinearFormQG f2 = linear_form_original(2);
    CHECK(f2.u == BigRat(649, 64));
    CHECK(f2.v == BigRat(10699, 1152));
    LinearFormQG f3 = linear_form_original(3);
    CHECK(f3.u == BigRat(19471, 256));
    CHECK(f3.v == BigRat(8025653, 115200));
    LinearFormQG f4 = linear_form_original(4);
    CHECK(f4.u == BigRat(10439881, 16384));
    CHECK(f4.v == BigRat(210854706467, 361267200));
}

TEST_CASE("tilde family frozen values and construction vs recursion") {
    LinearFormQG t0 = linear_form_tilde(0);
    CHECK(t0.u == BigRat(0));
    CHECK(t0.v == BigRat(-1));
    LinearFormQG t1 = linear_form_tilde(1);
    CHECK(t1.u == BigRat(6));
    CHECK(t1.v == BigRat(5));
    LinearFormQG t2 = linear_form_tilde(2);
    CHECK(t2.u == BigRat(115, 2));
    CHECK(t2.v == BigRat(1897, 36));

    auto seq = tilde_sequence(8);
    REQUIRE(seq.size() == 9);
    for (long n = 0; n <= 8; ++n) {
        LinearFormQG direct = linear_form_tilde(n);
        CHECK(direct.u == seq[static_cast<size_t>(n)].u);
        CHECK(direct.v == seq[static_cast<size_t>(n)].v);
    }
    CHECK(seq[3].u == BigRat(19719, 32));
    CHECK(seq[3].v == BigRat(903093, 1600));
    CHECK(seq[4].u == BigRat(861039, 128));
    CHECK(seq[4].v == BigRat(1932271197, 313600));
}

TEST_CASE("the tilde family satisfies the recurrence; the original does not") {
    Order2Rec rec = catalan_recurrence();
    auto seq = tilde_sequence(20);
    std::vector<BigRat> us, vs;
    for (const auto& f : seq) { us.push_back(f.u); vs.push_back(f.v); }
    CHECK(first_recurrence_violation(rec, us) == -1);
    CHECK(first_recurrence_violation(rec, vs) == -1);
    // The original family solves a different recursion; it violates this one
    // immediately.  Pinning that keeps the two families from being conflated.
    std::vector<BigRat> uo, vo;
    for (long n = 0; n <= 4; ++n) {
        LinearFormQG f = linear_form_original(n);
        uo.push_back(f.u);
        vo.push_back(f.v);
    }
    CHECK(first_recurrence_violation(rec, uo) == 1);
    CHECK(first_recurrence_violation(rec, vo) == 1);
}

TEST_CASE("numeric form values match u G - v") {
    long bits = 160;
    HPReal g = reference_catalan(bits + 32);
    for (long n = 0; n <= 6; ++n) {
        LinearFormQG f = linear_form_original(n);
        FormValue fv = linear_form_value(n, bits);
        HPReal expect = HPReal(f.u, bits + 32) * g - HPReal(f.v, bits + 32);
        CHECK((fv.value - expect).abs() <= fv.error_bound + HPReal::pow2(-bits + 8, 64));
        CHECK(fv.error_bound <= HPReal::pow2(-bits + 24, 64));
    }
}

TEST_CASE("series prefactor and direct evaluation agree at low order") {
    long bits = 128;
    FormValue a = linear_form_value(2, bits);
    FormValue b = linear_form_value_direct(2, 4000, bits);
    CHECK((a.value - b.value).abs() <= a.error_bound + b.error_bound);
    CHECK(!linear_form_series_prefactor(2).is_zero());
}

TEST_CASE("u certificates: dyadic denominators within bound") {
    auto seq = tilde_sequence(12);
    auto rows = u_certificates(seq, 8);
    REQUIRE(rows.size() == 13);
    for (const auto& r : rows) {
        CHECK(r.pow2_denominator);
        CHECK(r.within_bound);
        CHECK(r.pass());
    }
    CHECK(rows[2].exponent == 1);  // den(115/2) = 2
    CHECK(rows[7].exponent == 19); // den(u_7) = 2^19 = 524288
    CHECK(rows[0].bound == 8);     // n = 0: slack only
}

TEST_CASE("v certificates: dyadic after scaling by lcm(1..2n-1)^2") {
    auto seq = tilde_sequence(12);
    auto rows = v_certificates(seq, 8);
    for (const auto& r : rows) {
        CHECK(r.pow2_denominator);
        CHECK(r.within_bound);
    }
    CHECK(rows[2].exponent == 0);  // 1897/36 * 6^2 = 1897, an integer
    CHECK(rows[7].exponent == 14); // den(v_7 * lcm(1..13)^2) = 2^14 = 16384
}

TEST_CASE("certificate failure is visible, not silent") {
    // A poisoned sequence (odd denominator in u) must fail with a witness.
    std::vector<LinearFormQG> seq = tilde_sequence(3);
    seq[2].u += BigRat(1, 3);
    auto rows = u_certificates(seq, 8);
    CHECK(!rows[2].pow2_denominator);
    CHECK(!rows[2].pass());
    CHECK(rows[2].odd_part % 3 == 0);
}

TEST_CASE("growth diagnostics approach the characteristic roots") {
    long n = 60;
    auto seq = tilde_sequence(n);
    HPReal g = reference_catalan(7 * n + 64);
    auto rows = growth_diagnostics(seq, g, n - 1); // rows at n = 1 and n = 60
    REQUIRE(rows.size() == 2);
    const GrowthRow& last = rows.back();
    CHECK(last.n == n);
    CHECK(last.u_root.to_double() == doctest::Approx(11.09016994).epsilon(0.02));
    CHECK(last.r_root.to_double() == doctest::Approx(0.09016994).epsilon(0.10));
}
