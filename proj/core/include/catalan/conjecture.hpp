#pragma once

// The geometric-condition counterexample and Perron-ratio diagnostics:
//   - exact floor(lambda^n) for lambda = (11+5*sqrt(5))/2 via the integer
//     companion sequence L_0=2, L_1=11, L_{n+1} = 11 L_n + L_{n-1} and a
//     parity rule;
//   - the sequences x_n = (-1)^n/floor(lambda^n), y_n = floor(lambda^n) and
//     the explicit rational coefficients a(n), b(n) making both satisfy
//     x_{n+1} + a(n) x_n + b(n) x_{n-1} = 0 exactly;
//   - least-common-denominator growth traces;
//   - Perron-basis ratio checks for the order-2 recurrence of the tilde
//     sequence (dominant root (11+5*sqrt(5))/2, recessive (11-5*sqrt(5))/2).

#include <utility>
#include <vector>

#include "catalan/exact.hpp"
#include "catalan/hp_real.hpp"

namespace catalan {

// L_0..L_nmax of the companion sequence.
std::vector<BigInt> lucas_like(long nmax);

// Exact floor(lambda^n): L_n - 1 for even n, L_n for odd n.
BigInt floor_lambda_pow(long n);

// x_0..x_nmax and y_0..y_nmax of the counterexample sequences.
std::vector<BigRat> counterexample_x(long nmax);
std::vector<BigInt> counterexample_y(long nmax);

// (a(n), b(n)) with
//   b(n) = -(f_{n-1}/f_{n+1}) (f_n^2 + f_{n+1}^2)/(f_{n-1}^2 + f_n^2),
//   a(n) = (f_n/f_{n-1}) b(n) + f_n/f_{n+1},   f_k = floor(lambda^k); n >= 1.
std::pair<BigRat, BigRat> ab_counterexample(long n);

struct CounterexampleReport {
    long checks = 0;          // number of n with both recursion identities tested
    bool all_exact = false;   // every identity held exactly
    long first_failure = -1;  // smallest failing n, or -1
    BigRat x_ratio, y_ratio;  // exact x_{N+1}/x_N and y_{N+1}/y_N
    HPReal x_ratio_residual;  // |x_ratio + 1/lambda|
    HPReal y_ratio_residual;  // |y_ratio - lambda|
    BigInt discriminant;      // 125, of z^2 - 11z - 1
    bool discriminant_is_square = true; // expected false: roots irrational
};

// Exact recursion identities for 1 <= n <= N plus limit-ratio diagnostics.
CounterexampleReport verify_counterexample(long N, long precision_bits);

struct DenLcmRow {
    long n = 0;
    BigInt lcm_den;            // lcm of denominators of x_0..x_n
    double log_lcm_over_n = 0; // log(lcm)/n (0 at n = 0)
};

// Least-common-denominator growth trace of an exact sequence.
std::vector<DenLcmRow> den_lcm_growth(const std::vector<BigRat>& xs);

struct PerronReport {
    long n = 0;               // final index the ratios are taken at
    HPReal u_ratio;           // u_{n+1}/u_n (exact rational, rendered)
    HPReal r_ratio;           // r_{n+1}/r_n with r_k = u_k G - v_k
    HPReal lambda_plus;       // (11+5*sqrt(5))/2
    HPReal lambda_minus;      // (11-5*sqrt(5))/2
    HPReal u_residual;        // |u_ratio - lambda_plus|
    HPReal r_residual;        // |r_ratio - lambda_minus|
    BigRat root_sum;          // exact 11 from the characteristic polynomial
    BigRat root_product;      // exact -1
};

// Perron-basis diagnostics at index N for the tilde sequence; g_ref must
// carry enough precision to resolve r_N ~ 0.09^N.
PerronReport perron_basis_check(long N, const HPReal& g_ref);

} // namespace catalan
