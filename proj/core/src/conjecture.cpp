#include "catalan/conjecture.hpp"

#include <cmath>

#include "catalan/errors.hpp"
#include "catalan/forms.hpp"
#include "catalan/recurrence.hpp"

namespace catalan {

std::vector<BigInt> lucas_like(long nmax) {
    if (nmax < 0) throw DomainError("lucas_like: requires nmax >= 0");
    std::vector<BigInt> L;
    L.reserve(nmax + 1);
    L.push_back(BigInt(2));
    if (nmax >= 1) L.push_back(BigInt(11));
    for (long n = 2; n <= nmax; ++n) L.push_back(11 * L[n - 1] + L[n - 2]);
    return L;
}

BigInt floor_lambda_pow(long n) {
    if (n < 0) throw DomainError("floor_lambda_pow: requires n >= 0");
    BigInt prev(2), cur(11); // L_0, L_1
    if (n == 0) return prev - 1;
    for (long k = 2; k <= n; ++k) {
        BigInt next = 11 * cur + prev;
        prev = cur;
        cur = next;
    }
    return (n % 2 == 0) ? cur - 1 : cur;
}

std::vector<BigRat> counterexample_x(long nmax) {
    std::vector<BigInt> L = lucas_like(nmax);
    std::vector<BigRat> xs;
    xs.reserve(nmax + 1);
    for (long n = 0; n <= nmax; ++n) {
        BigInt f = (n % 2 == 0) ? L[n] - 1 : L[n];
        xs.push_back(BigRat((n % 2 == 0) ? BigInt(1) : BigInt(-1), f));
    }
    return xs;
}

std::vector<BigInt> counterexample_y(long nmax) {
    std::vector<BigInt> L = lucas_like(nmax);
    std::vector<BigInt> ys;
    ys.reserve(nmax + 1);
    for (long n = 0; n <= nmax; ++n) {
        ys.push_back((n % 2 == 0) ? L[n] - 1 : L[n]);
    }
    return ys;
}

std::pair<BigRat, BigRat> ab_counterexample(long n) {
    if (n < 1) throw DomainError("ab_counterexample: requires n >= 1");
    BigRat fm(floor_lambda_pow(n - 1));
    BigRat f(floor_lambda_pow(n));
    BigRat fp(floor_lambda_pow(n + 1));
    BigRat b = -(fm / fp) * (f * f + fp * fp) / (fm * fm + f * f);
    BigRat a = (f / fm) * b + f / fp;
    return {a, b};
}

CounterexampleReport verify_counterexample(long N, long precision_bits) {
    if (N < 2) throw DomainError("verify_counterexample: requires N >= 2");
    CounterexampleReport rep;
    std::vector<BigRat> xs = counterexample_x(N + 1);
    std::vector<BigInt> ys = counterexample_y(N + 1);
    rep.all_exact = true;
    for (long n = 1; n <= N; ++n) {
        auto [a, b] = ab_counterexample(n);
        BigRat zx = xs[n + 1] + a * xs[n] + b * xs[n - 1];
        BigRat zy = BigRat(ys[n + 1]) + a * BigRat(ys[n]) + b * BigRat(ys[n - 1]);
        ++rep.checks;
        if (!(zx.is_zero() && zy.is_zero())) {
            rep.all_exact = false;
            if (rep.first_failure < 0) rep.first_failure = n;
        }
    }
    rep.x_ratio = xs[N] / xs[N - 1];
    rep.y_ratio = BigRat(ys[N]) / BigRat(ys[N - 1]);

    const long wp = precision_bits + 16;
    HPReal five(5L, wp);
    HPReal sqrt5 = five.sqrt();
    HPReal lambda = (HPReal(11L, wp) + HPReal(5L, wp) * sqrt5) / HPReal(2L, wp);
    rep.x_ratio_residual = (HPReal(rep.x_ratio, wp) + HPReal(1L, wp) / lambda).abs();
    rep.y_ratio_residual = (HPReal(rep.y_ratio, wp) - lambda).abs();

    rep.discriminant = BigInt(125); // of z^2 - 11z - 1
    rep.discriminant_is_square =
        mpz_perfect_square_p(rep.discriminant.get_mpz_t()) != 0;
    return rep;
}

std::vector<DenLcmRow> den_lcm_growth(const std::vector<BigRat>& xs) {
    std::vector<DenLcmRow> rows;
    rows.reserve(xs.size());
    BigInt acc(1);
    for (size_t n = 0; n < xs.size(); ++n) {
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), xs[n].den().get_mpz_t());
        DenLcmRow row;
        row.n = static_cast<long>(n);
        row.lcm_den = acc;
        if (n > 0) {
            // log via mpz size: exact enough for a growth diagnostic
            signed long exp2;
            double d = mpz_get_d_2exp(&exp2, acc.get_mpz_t());
            row.log_lcm_over_n =
                (std::log(d) + static_cast<double>(exp2) * std::log(2.0)) /
                static_cast<double>(n);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

PerronReport perron_basis_check(long N, const HPReal& g_ref) {
    if (N < 10) throw DomainError("perron_basis_check: requires N >= 10");
    PerronReport rep;
    rep.n = N;
    const long wp = g_ref.precision_bits();

    std::vector<LinearFormQG> seq = tilde_sequence(N + 1);
    const LinearFormQG& f0 = seq[N];
    const LinearFormQG& f1 = seq[N + 1];
    if (f0.u.is_zero()) throw DomainError("perron_basis_check: u_N = 0");
    rep.u_ratio = HPReal(f1.u / f0.u, wp);
    HPReal r0 = HPReal(f0.u, wp) * g_ref - HPReal(f0.v, wp);
    HPReal r1 = HPReal(f1.u, wp) * g_ref - HPReal(f1.v, wp);
    if (r0.is_zero()) throw DomainError("perron_basis_check: r_N = 0");
    rep.r_ratio = r1 / r0;

    CharRoots roots = characteristic_roots(catalan_recurrence(), wp);
    rep.lambda_plus = roots.lambda_plus;
    rep.lambda_minus = roots.lambda_minus;
    rep.u_residual = (rep.u_ratio - rep.lambda_plus).abs();
    rep.r_residual = (rep.r_ratio - rep.lambda_minus).abs();
    rep.root_sum = roots.root_sum;
    rep.root_product = roots.root_product;
    return rep;
}

} // namespace catalan
