#include "catalan/contfrac.hpp"

#include <cmath>

#include "catalan/errors.hpp"
#include "catalan/forms.hpp"

namespace catalan {

std::pair<BigInt, BigInt> pq_eval(long n) {
    if (n < 1) throw DomainError("pq_eval: requires n >= 1");
    BigInt m(n);
    BigInt m2 = m * m;
    BigInt p = (5 * m2 - 20 * m + 18) * (m - 2) * (m - 1) * (m - 1) * m2 *
               (m + 1) * (m + 1) * (m + 2) * (5 * m2 + 20 * m + 18);
    BigInt m4 = m2 * m2;
    BigInt q = 55 * m4 * m2 - 167 * m4 + 49 * m2 - 9;
    return {p, q};
}

BigRat convergent(long N) {
    if (N < 0) throw DomainError("convergent: requires N >= 0");
    const BigRat head(5);
    if (N == 0) return head;
    BigRat acc(0);
    for (long k = N; k >= 2; --k) {
        BigRat den = BigRat(pq_eval(2 * k).second) + acc;
        if (den.is_zero()) {
            throw DomainError("convergent: zero denominator at level " +
                              std::to_string(k));
        }
        acc = BigRat(pq_eval(2 * k - 1).first) / den;
    }
    BigRat den = BigRat(pq_eval(2).second) + acc;
    if (den.is_zero()) throw DomainError("convergent: zero denominator at level 1");
    return head + BigRat(516) / den;
}

BigRat convergent_forward(long N) {
    if (N < 0) throw DomainError("convergent_forward: requires N >= 0");
    // A_{-1}=1, A_0=5, B_{-1}=0, B_0=1; level k >= 1 has partial numerator
    // a_k (516 for k=1, p(2k-1) after) and partial denominator b_k = q(2k).
    BigInt a_prev(1), a_cur(5), b_prev(0), b_cur(1);
    for (long k = 1; k <= N; ++k) {
        BigInt pk = (k == 1) ? BigInt(516) : pq_eval(2 * k - 1).first;
        BigInt qk = pq_eval(2 * k).second;
        BigInt a_next = qk * a_cur + pk * a_prev;
        BigInt b_next = qk * b_cur + pk * b_prev;
        a_prev = a_cur; a_cur = a_next;
        b_prev = b_cur; b_cur = b_next;
    }
    if (b_cur == 0) throw DomainError("convergent_forward: zero denominator");
    return BigRat(a_cur, b_cur);
}

std::vector<CfVsRecursionRow> cf_vs_recursion(long nmax) {
    if (nmax < 1) throw DomainError("cf_vs_recursion: requires nmax >= 1");
    std::vector<LinearFormQG> tilde = tilde_sequence(nmax + 1);
    std::vector<CfVsRecursionRow> rows;
    rows.reserve(nmax);
    for (long N = 1; N <= nmax; ++N) {
        CfVsRecursionRow row;
        row.N = N;
        row.convergent_value = convergent(N);
        const LinearFormQG& f = tilde[N + 1];
        if (f.u.is_zero()) {
            throw DomainError("cf_vs_recursion: u vanished at n = " +
                              std::to_string(N + 1));
        }
        row.six_v_over_u = BigRat(6) * f.v / f.u;
        row.equal = row.convergent_value == row.six_v_over_u;
        rows.push_back(std::move(row));
    }
    return rows;
}

DigitsReport digits_report(long N, const HPReal& g_ref) {
    DigitsReport rep;
    rep.N = N;
    const long wp = g_ref.precision_bits();
    HPReal approx = HPReal(convergent(N) / BigRat(6), wp);
    HPReal diff = (approx - g_ref).abs();
    rep.difference = diff.to_double();
    if (diff.is_zero()) {
        rep.digits = static_cast<long>(static_cast<double>(wp) * 0.30103);
        return rep;
    }
    double d = -diff.log().to_double() / std::log(10.0);
    rep.digits = d <= 0 ? 0 : static_cast<long>(d);
    return rep;
}

} // namespace catalan
