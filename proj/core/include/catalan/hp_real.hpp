#pragma once

// High-precision real numbers (MPFR-backed).  Precision is explicit at
// construction and propagates as the max of the operand precisions; there are
// no silent round-trips through double.

#include <mpfr.h>

#include <string>

#include "catalan/exact.hpp"

namespace catalan {

class HPReal {
public:
    static constexpr long kMinBits = 16;

    HPReal() : HPReal(kMinBits) {} // zero at minimum precision
    explicit HPReal(long precision_bits);
    HPReal(const BigRat& x, long precision_bits);
    HPReal(const BigInt& x, long precision_bits);
    HPReal(long x, long precision_bits);

    HPReal(const HPReal& o);
    HPReal(HPReal&& o) noexcept;
    HPReal& operator=(const HPReal& o);
    HPReal& operator=(HPReal&& o) noexcept;
    ~HPReal();

    static HPReal from_string(const std::string& s, long precision_bits);
    static HPReal pi(long precision_bits);
    static HPReal sqrt_pi(long precision_bits);
    // MPFR's own Catalan constant; used only as an independent cross-check
    // against reference_catalan().
    static HPReal builtin_catalan(long precision_bits);
    // 2^e as an HPReal (e may be negative), handy for tolerance thresholds.
    static HPReal pow2(long e, long precision_bits);

    long precision_bits() const { return mpfr_get_prec(x_); }
    int sign() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }

    HPReal abs() const;
    HPReal sqrt() const;
    HPReal log() const;
    HPReal exp() const;
    HPReal pow_si(long e) const;
    HPReal nth_root(unsigned long n) const;

    BigInt floor_to_int() const;
    BigInt round_to_int() const;
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    std::string str(size_t digits = 0) const; // 0 = full precision

    friend HPReal operator+(const HPReal& a, const HPReal& b);
    friend HPReal operator-(const HPReal& a, const HPReal& b);
    friend HPReal operator*(const HPReal& a, const HPReal& b);
    friend HPReal operator/(const HPReal& a, const HPReal& b);
    friend HPReal operator-(const HPReal& a);

    friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }
    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.x_, b.x_) == 0; }

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

private:
    mpfr_t x_;
};

} // namespace catalan
