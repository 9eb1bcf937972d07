#pragma once

// The continued fraction for 6G:
//   6G = 5 + 516/(q(2) + p(3)/(q(4) + p(5)/(q(6) + ...)))
// with
//   p(n) = (5n^2-20n+18)(n-2)(n-1)^2 n^2 (n+1)^2 (n+2)(5n^2+20n+18),
//   q(n) = 55n^6 - 167n^4 + 49n^2 - 9.
// Convergents are exact rationals and coincide with 6*v_{N+1}/u_{N+1} of the
// tilde linear-form sequence (index map pinned by the N=1 identity).

#include <utility>
#include <vector>

#include "catalan/exact.hpp"
#include "catalan/hp_real.hpp"

namespace catalan {

// Exact (p(n), q(n)); n >= 1.
std::pair<BigInt, BigInt> pq_eval(long n);

// N-th convergent (N >= 0), exact backward evaluation.
BigRat convergent(long N);

// Same value by the forward three-term recurrences (cross-check path).
BigRat convergent_forward(long N);

struct CfVsRecursionRow {
    long N = 0;
    BigRat convergent_value;
    BigRat six_v_over_u; // 6 * v_{N+1} / u_{N+1}
    bool equal = false;
};

// Compares convergent(N) with 6*v_{N+1}/u_{N+1} exactly for 1 <= N <= nmax.
std::vector<CfVsRecursionRow> cf_vs_recursion(long nmax);

struct DigitsReport {
    long N = 0;
    long digits = 0;    // agreeing decimal digits of convergent(N)/6 vs g_ref
    double difference;  // |convergent(N)/6 - g_ref|, for display
};

// g_ref must be certified well beyond the expected agreement (~2.09*N digits).
DigitsReport digits_report(long N, const HPReal& g_ref);

} // namespace catalan
