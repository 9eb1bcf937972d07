#include "catalan/hp_real.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace catalan {

namespace {
long clamp_prec(long bits) { return std::max(bits, HPReal::kMinBits); }
long max_prec(const HPReal& a, const HPReal& b) {
    return std::max(a.precision_bits(), b.precision_bits());
}
} // namespace

HPReal::HPReal(long precision_bits) {
    mpfr_init2(x_, clamp_prec(precision_bits));
    mpfr_set_zero(x_, 1);
}

HPReal::HPReal(const BigRat& x, long precision_bits) {
    mpfr_init2(x_, clamp_prec(precision_bits));
    mpfr_set_q(x_, x.raw().get_mpq_t(), MPFR_RNDN);
}

HPReal::HPReal(const BigInt& x, long precision_bits) {
    mpfr_init2(x_, clamp_prec(precision_bits));
    mpfr_set_z(x_, x.get_mpz_t(), MPFR_RNDN);
}

HPReal::HPReal(long x, long precision_bits) {
    mpfr_init2(x_, clamp_prec(precision_bits));
    mpfr_set_si(x_, x, MPFR_RNDN);
}

HPReal::HPReal(const HPReal& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
}

HPReal& HPReal::operator=(const HPReal& o) {
    if (this != &o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

HPReal& HPReal::operator=(HPReal&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
}

HPReal::~HPReal() { mpfr_clear(x_); }

HPReal HPReal::from_string(const std::string& s, long precision_bits) {
    HPReal r(precision_bits);
    if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0) {
        throw DomainError("HPReal: cannot parse '" + s + "'");
    }
    return r;
}

HPReal HPReal::pi(long precision_bits) {
    HPReal r(precision_bits);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

HPReal HPReal::sqrt_pi(long precision_bits) {
    HPReal p = pi(precision_bits + 8);
    HPReal r(precision_bits);
    mpfr_sqrt(r.x_, p.x_, MPFR_RNDN);
    return r;
}

HPReal HPReal::builtin_catalan(long precision_bits) {
    HPReal r(precision_bits);
    mpfr_const_catalan(r.x_, MPFR_RNDN);
    return r;
}

HPReal HPReal::pow2(long e, long precision_bits) {
    HPReal r(1L, precision_bits);
    mpfr_mul_2si(r.x_, r.x_, e, MPFR_RNDN);
    return r;
}

HPReal HPReal::abs() const {
    HPReal r(precision_bits());
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
}

HPReal HPReal::sqrt() const {
    if (sign() < 0) throw DomainError("HPReal: sqrt of negative");
    HPReal r(precision_bits());
    mpfr_sqrt(r.x_, x_, MPFR_RNDN);
    return r;
}

HPReal HPReal::log() const {
    if (sign() <= 0) throw DomainError("HPReal: log of non-positive");
    HPReal r(precision_bits());
    mpfr_log(r.x_, x_, MPFR_RNDN);
    return r;
}

HPReal HPReal::exp() const {
    HPReal r(precision_bits());
    mpfr_exp(r.x_, x_, MPFR_RNDN);
    return r;
}

HPReal HPReal::pow_si(long e) const {
    HPReal r(precision_bits());
    mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
    return r;
}

HPReal HPReal::nth_root(unsigned long n) const {
    if (n == 0) throw DomainError("HPReal: 0th root");
    HPReal r(precision_bits());
    mpfr_rootn_ui(r.x_, x_, n, MPFR_RNDN);
    return r;
}

BigInt HPReal::floor_to_int() const {
    mpfr_t f;
    mpfr_init2(f, mpfr_get_prec(x_));
    mpfr_floor(f, x_);
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), f, MPFR_RNDZ);
    mpfr_clear(f);
    return z;
}

BigInt HPReal::round_to_int() const {
    mpfr_t f;
    mpfr_init2(f, mpfr_get_prec(x_));
    mpfr_round(f, x_);
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), f, MPFR_RNDZ);
    mpfr_clear(f);
    return z;
}

std::string HPReal::str(size_t digits) const {
    if (digits == 0) {
        digits = static_cast<size_t>(precision_bits() * 0.30103) + 2;
    }
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, x_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    std::string out = (neg ? "-" : "");
    // render as d.ddd...e<exp-1> unless the exponent is small
    if (d.empty() || mpfr_zero_p(x_)) return "0";
    out += d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    long ee = static_cast<long>(e) - 1;
    if (ee != 0) out += "e" + std::to_string(ee);
    return out;
}

HPReal operator+(const HPReal& a, const HPReal& b) {
    HPReal r(max_prec(a, b));
    mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

HPReal operator-(const HPReal& a, const HPReal& b) {
    HPReal r(max_prec(a, b));
    mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

HPReal operator*(const HPReal& a, const HPReal& b) {
    HPReal r(max_prec(a, b));
    mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

HPReal operator/(const HPReal& a, const HPReal& b) {
    if (b.is_zero()) throw DomainError("HPReal: division by zero");
    HPReal r(max_prec(a, b));
    mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

HPReal operator-(const HPReal& a) {
    HPReal r(a.precision_bits());
    mpfr_neg(r.x_, a.x_, MPFR_RNDN);
    return r;
}

} // namespace catalan
