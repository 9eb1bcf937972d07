#include "catalan/recurrence.hpp"

namespace catalan {

namespace {

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

IntPoly lin(long c0, long c1) { return {{BigInt(c0), BigInt(c1)}}; }
IntPoly quad(long c0, long c1, long c2) { return {{BigInt(c0), BigInt(c1), BigInt(c2)}}; }

} // namespace

std::string IntPoly::str(const std::string& var) const {
    std::string out;
    for (long d = degree(); d >= 0; --d) {
        const BigInt& k = c[static_cast<size_t>(d)];
        if (k == 0) continue;
        if (!out.empty()) out += (k > 0) ? " + " : " - ";
        else if (k < 0) out += "-";
        BigInt a = ::abs(k);
        const bool unit = (a == 1) && d > 0;
        if (!unit) out += a.get_str();
        if (d > 0) {
            if (!unit) out += "*";
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out.empty() ? "0" : out;
}

Order2Rec catalan_recurrence() {
    Order2Rec rec;
    rec.c2 = mul(mul(mul(lin(0, 2), lin(0, 2)), mul(lin(1, 2), lin(1, 2))), quad(3, -20, 20));
    rec.c1 = {{BigInt(-9), BigInt(0), BigInt(196), BigInt(0), BigInt(-2672), BigInt(0),
               BigInt(3520)}};
    rec.c0 = mul(mul(mul(lin(0, 2), lin(0, 2)), mul(lin(1, 2), lin(-3, 2))), quad(3, 20, 20));
    rec.valid_from = 1;
    return rec;
}

std::vector<BigRat> iterate_recurrence(const Order2Rec& rec, const BigRat& x0,
                                       const BigRat& x1, long nmax) {
    if (nmax < 1) throw DomainError("iterate_recurrence: nmax must be >= 1");
    std::vector<BigRat> xs{x0, x1};
    xs.reserve(static_cast<size_t>(nmax) + 1);
    for (long n = rec.valid_from; n < nmax; ++n) {
        const BigInt c2 = rec.c2.eval(BigInt(n));
        if (c2 == 0) throw DomainError("iterate_recurrence: leading coefficient vanished");
        const BigRat next = (BigRat(rec.c1.eval(BigInt(n))) * xs[n] +
                             BigRat(rec.c0.eval(BigInt(n))) * xs[n - 1]) /
                            BigRat(c2);
        xs.push_back(next);
    }
    return xs;
}

long first_recurrence_violation(const Order2Rec& rec, const std::vector<BigRat>& xs) {
    for (long n = rec.valid_from; n + 1 < static_cast<long>(xs.size()); ++n) {
        const BigRat lhs = BigRat(rec.c2.eval(BigInt(n))) * xs[n + 1] -
                           BigRat(rec.c1.eval(BigInt(n))) * xs[n] -
                           BigRat(rec.c0.eval(BigInt(n))) * xs[n - 1];
        if (!lhs.is_zero()) return n;
    }
    return -1;
}

CharRoots characteristic_roots(const Order2Rec& rec, long precision_bits) {
    const BigInt l2 = rec.c2.c.back(), l1 = rec.c1.c.back(), l0 = rec.c0.c.back();
    if (rec.c2.degree() != rec.c1.degree() || rec.c2.degree() != rec.c0.degree()) {
        throw DomainError("characteristic_roots: coefficient degrees differ");
    }
    CharRoots out{BigRat(l1, l2), -BigRat(l0, l2), HPReal(precision_bits),
                  HPReal(precision_bits), HPReal(precision_bits)};
    const long wp = precision_bits + 16;
    const HPReal s(out.root_sum, wp), p(out.root_product, wp);
    const HPReal disc = s * s - HPReal(4L, wp) * p;
    if (disc.sign() < 0) throw DomainError("characteristic_roots: complex roots");
    const HPReal sq = disc.sqrt();
    const HPReal two(2L, wp);
    out.lambda_plus = (s + sq) / two;
    out.lambda_minus = (s - sq) / two;
    // phi^5 = (11 + 5 sqrt 5)/2
    const HPReal phi5 = (HPReal(11L, wp) + HPReal(5L, wp) * HPReal(5L, wp).sqrt()) / two;
    out.phi_fifth_gap = (out.lambda_plus - phi5).abs();
    return out;
}

} // namespace catalan
