#include <doctest.h>

#include "catalan/recurrence.hpp"

using namespace catalan;

TEST_CASE("catalan_recurrence coefficient polynomials") {
    Order2Rec rec = catalan_recurrence();
    CHECK(rec.valid_from == 1);
    // c2(n) = (2n)^2 (2n+1)^2 (20n^2-20n+3)
    CHECK(rec.c2.eval(BigInt(1)) == 108);   // 4 * 9 * 3
    CHECK(rec.c2.eval(BigInt(2)) == 17200); // 16 * 25 * 43
    // c1(n) = 3520 n^6 - 2672 n^4 + 196 n^2 - 9
    CHECK(rec.c1.eval(BigInt(1)) == 1035);
    CHECK(rec.c1.eval(BigInt(2)) == 183303);
    // c0(n) = (2n)^2 (2n+1) (2n-3) (20n^2+20n+3)
    CHECK(rec.c0.eval(BigInt(1)) == -516); // 4 * 3 * (-1) * 43
    CHECK(rec.c0.eval(BigInt(2)) == 9840); // 16 * 5 * 1 * 123
    // Leading coefficients give the limiting root data 11 and -1:
    // c2 ~ 320 n^6, c1 ~ 3520 n^6, c0 ~ 320 n^6.
    CHECK(rec.c2.degree() == 6);
    CHECK(rec.c1.degree() == 6);
    CHECK(rec.c0.degree() == 6);
    CHECK(rec.c1.c[6] == 11 * rec.c2.c[6]);
    CHECK(rec.c0.c[6] == rec.c2.c[6]);
}

TEST_CASE("iterate_recurrence reproduces both tilde branches") {
    Order2Rec rec = catalan_recurrence();
    // u branch from (0, 6):
    auto us = iterate_recurrence(rec, BigRat(0), BigRat(6), 4);
    REQUIRE(us.size() == 5);
    CHECK(us[2] == BigRat(115, 2));
    CHECK(us[3] == BigRat(19719, 32));
    CHECK(us[4] == BigRat(861039, 128));
    // v branch from (-1, 5):
    auto vs = iterate_recurrence(rec, BigRat(-1), BigRat(5), 4);
    CHECK(vs[2] == BigRat(1897, 36));
    CHECK(vs[3] == BigRat(903093, 1600));
    CHECK(vs[4] == BigRat(1932271197, 313600));
}

TEST_CASE("first_recurrence_violation") {
    Order2Rec rec = catalan_recurrence();
    auto xs = iterate_recurrence(rec, BigRat(0), BigRat(6), 12);
    CHECK(first_recurrence_violation(rec, xs) == -1);
    xs[7] += BigRat(1, 1000000);
    long bad = first_recurrence_violation(rec, xs);
    CHECK(bad == 6); // the identity at n = 6 touches x_5, x_6, x_7
    xs = iterate_recurrence(rec, BigRat(-1), BigRat(5), 12);
    CHECK(first_recurrence_violation(rec, xs) == -1);
}

TEST_CASE("characteristic roots (11 +- 5 sqrt 5)/2 and the golden-ratio link") {
    long bits = 256;
    CharRoots cr = characteristic_roots(catalan_recurrence(), bits);
    CHECK(cr.root_sum == BigRat(11));
    CHECK(cr.root_product == BigRat(-1));
    HPReal tol = HPReal::pow2(-bits + 16, bits);
    CHECK((cr.lambda_plus - HPReal::from_string("11.09016994374947424102293417182819058860154589902881", bits)).abs() <=
          HPReal::from_string("1e-45", 64));
    CHECK((cr.lambda_plus + cr.lambda_minus - HPReal(11, bits)).abs() <= tol);
    CHECK((cr.lambda_plus * cr.lambda_minus + HPReal(1, bits)).abs() <= tol);
    CHECK(cr.lambda_minus < HPReal(0, 64));
    CHECK(cr.lambda_minus > HPReal(-1, 64));
    // lambda_plus is exactly phi^5, phi the golden ratio.
    CHECK(cr.phi_fifth_gap <= tol);
}
