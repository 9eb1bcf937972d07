#pragma once

// Three-term integer-relation detection: given high-precision values H and G,
// search for rationals (p, q) with H = p*G + q by lattice reduction of
//   [1, 0, round(H*2^m)], [0, 1, round(G*2^m)], [0, 0, 2^m],
// then verify any candidate against the full working precision.  A candidate
// is never reported without verification; insufficient precision yields an
// explicit inconclusive status.

#include <array>

#include "catalan/exact.hpp"
#include "catalan/hp_real.hpp"

namespace catalan {

using Basis3 = std::array<std::array<BigInt, 3>, 3>;

// Exact-arithmetic lattice reduction (Lovasz parameter 99/100) for 3x3
// integer bases; returns a reduced basis spanning the same lattice.
Basis3 lll3(Basis3 basis);

enum class RelationStatus { found, none, inconclusive };

struct RelationResult {
    RelationStatus status = RelationStatus::none;
    BigRat p, q;      // meaningful when status == found: H = p*G + q
    HPReal residual;  // |A*H + B*G + C| of the accepted integer relation
    long scale_bits = 0; // lattice scale actually used
};

// denominator_cap bounds |A| (hence the denominators of p and q).
RelationResult detect_relation(const HPReal& h_value, const HPReal& g_ref,
                               const BigInt& denominator_cap);

} // namespace catalan
