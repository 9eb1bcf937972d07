#include "catalan/relation.hpp"

#include <algorithm>
#include <stdexcept>

#include "catalan/errors.hpp"

namespace catalan {

namespace {

using RatVec3 = std::array<BigRat, 3>;

BigRat dot_rr(const RatVec3& u, const RatVec3& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

BigRat dot_ir(const std::array<BigInt, 3>& u, const RatVec3& v) {
    return BigRat(u[0]) * v[0] + BigRat(u[1]) * v[1] + BigRat(u[2]) * v[2];
}

BigInt norm2(const std::array<BigInt, 3>& v) {
    return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
}

} // namespace

Basis3 lll3(Basis3 b) {
    const BigRat delta(99, 100);
    const BigRat half(1, 2);
    const int n = 3;
    while (true) {
        // Exact Gram-Schmidt of the current basis.
        BigRat mu[3][3];
        RatVec3 bstar[3];
        BigRat B[3];
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < 3; ++k) bstar[i][k] = BigRat(b[i][k]);
            for (int j = 0; j < i; ++j) {
                mu[i][j] = B[j].is_zero() ? BigRat(0) : dot_ir(b[i], bstar[j]) / B[j];
                for (int k = 0; k < 3; ++k) bstar[i][k] -= mu[i][j] * bstar[j][k];
            }
            B[i] = dot_rr(bstar[i], bstar[i]);
        }
        // One size-reduction or swap per pass, then recompute.
        bool restart = false;
        for (int k = 1; k < n && !restart; ++k) {
            for (int j = k - 1; j >= 0; --j) {
                if (mu[k][j].abs() > half) {
                    BigInt r = mu[k][j].round_nearest();
                    for (int t = 0; t < 3; ++t) b[k][t] -= r * b[j][t];
                    restart = true;
                    break;
                }
            }
            if (restart) break;
            if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
                std::swap(b[k], b[k - 1]);
                restart = true;
            }
        }
        if (!restart) return b;
    }
}

RelationResult detect_relation(const HPReal& h_value, const HPReal& g_ref,
                               const BigInt& denominator_cap) {
    RelationResult out;
    const long prec =
        std::min(h_value.precision_bits(), g_ref.precision_bits()) - 32;
    if (prec < 48) {
        out.status = RelationStatus::inconclusive;
        out.scale_bits = prec;
        return out;
    }
    out.scale_bits = prec;

    const long wp = std::max(h_value.precision_bits(), g_ref.precision_bits()) + 32;
    HPReal scale = HPReal::pow2(prec, wp);
    BigInt X = (h_value * scale).round_to_int();
    BigInt Y = (g_ref * scale).round_to_int();
    BigInt N = pow2(prec);

    Basis3 basis = {{{BigInt(1), BigInt(0), X},
                     {BigInt(0), BigInt(1), Y},
                     {BigInt(0), BigInt(0), N}}};
    Basis3 red = lll3(basis);
    std::sort(red.begin(), red.end(),
              [](const std::array<BigInt, 3>& u, const std::array<BigInt, 3>& v) {
                  BigInt nu = norm2(u), nv = norm2(v);
                  if (nu != nv) return nu < nv;
                  return std::lexicographical_compare(u.begin(), u.end(), v.begin(),
                                                      v.end());
              });

    HPReal tol_strict = HPReal::pow2(-(prec / 2), wp);
    HPReal tol_loose = HPReal::pow2(-(prec / 4), wp);
    bool suspicious = false;
    for (const auto& v : red) {
        const BigInt& A = v[0];
        const BigInt& B = v[1];
        BigInt C_scaled = v[2] - A * X - B * Y;
        if (!mpz_divisible_p(C_scaled.get_mpz_t(), N.get_mpz_t())) {
            throw std::logic_error("detect_relation: lattice bookkeeping broke");
        }
        BigInt C = C_scaled / N;
        if (A == 0) continue;
        HPReal residual =
            (HPReal(A, wp) * h_value + HPReal(B, wp) * g_ref + HPReal(C, wp)).abs();
        BigInt abs_a = A >= 0 ? A : BigInt(-A);
        HPReal bound = tol_strict * HPReal(std::max(BigInt(1), abs_a), wp);
        if (residual < bound) {
            if (abs_a <= denominator_cap) {
                out.status = RelationStatus::found;
                out.p = BigRat(-B, A);
                out.q = BigRat(-C, A);
                out.residual = residual;
                return out;
            }
            continue; // relation exists only beyond the cap: treat as none
        }
        if (residual < tol_loose * HPReal(std::max(BigInt(1), abs_a), wp)) {
            suspicious = true; // close call: precision cannot separate it
        }
    }
    out.status = suspicious ? RelationStatus::inconclusive : RelationStatus::none;
    return out;
}

} // namespace catalan
