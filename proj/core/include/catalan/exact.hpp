#pragma once

// Exact arithmetic foundation: arbitrary-precision integers and rationals
// (GMP-backed), quarter-integers, 2-adic valuations, lcm(1..N), and the
// integer-shifted polynomial  (t-1)(t-2)...(t-n)/n!  used throughout.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "catalan/errors.hpp"

namespace catalan {

using BigInt = mpz_class;
using Valuation = std::int64_t;

// Rational number kept in lowest terms with positive denominator.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(n) {} // NOLINT: implicit by design
    explicit BigRat(const BigInt& n) : v_(n) {}
    BigRat(const BigInt& num, const BigInt& den);
    BigRat(long num, long den);

    // Accepts "a" or "a/b"; throws DomainError on malformed input.
    static BigRat from_string(const std::string& s);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    BigRat abs() const;
    BigRat inverse() const;
    BigInt floor() const;
    BigInt round_nearest() const; // ties away from zero

    std::string str() const; // "num" or "num/den"
    double to_double() const { return v_.get_d(); }

    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o);

    friend BigRat operator+(BigRat a, const BigRat& b) { a += b; return a; }
    friend BigRat operator-(BigRat a, const BigRat& b) { a -= b; return a; }
    friend BigRat operator*(BigRat a, const BigRat& b) { a *= b; return a; }
    friend BigRat operator/(BigRat a, const BigRat& b) { a /= b; return a; }
    friend BigRat operator-(const BigRat& a) { BigRat r; r.v_ = -a.v_; return r; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_; // gmp keeps this canonical under arithmetic
};

// Element of (1/4)Z, stored as its quadruple so pole bookkeeping stays exact.
class QuarterInt {
public:
    QuarterInt() : q_(0) {}
    static QuarterInt of_integer(long n) { return QuarterInt(BigInt(4 * n)); }
    static QuarterInt of_integer(const BigInt& n) { return QuarterInt(BigInt(4 * n)); }
    static QuarterInt halves(long k) { return QuarterInt(BigInt(2 * k)); }    // k/2
    static QuarterInt quarters(long k) { return QuarterInt(BigInt(k)); }      // k/4
    static QuarterInt from_quadruple(const BigInt& q) { return QuarterInt(q); }
    // Exact conversion; throws DomainError unless 4r is an integer.
    static QuarterInt from_rat(const BigRat& r);

    BigInt quadruple() const { return q_; }
    BigRat to_rat() const { return BigRat(q_, 4); }
    BigInt floor() const;

    bool is_integer() const { return q_ % 4 == 0; }
    bool is_half_integer() const { return q_ % 2 == 0 && q_ % 4 != 0; }
    // Residue of the quadruple mod 4, normalized to {0,1,2,3}.
    int quadruple_mod4() const;

    bool is_positive() const { return q_ > 0; }
    int sign() const { return sgn(q_); }
    std::string str() const { return to_rat().str(); }

    friend QuarterInt operator+(const QuarterInt& a, const QuarterInt& b) {
        return QuarterInt(BigInt(a.q_ + b.q_));
    }
    friend QuarterInt operator-(const QuarterInt& a, const QuarterInt& b) {
        return QuarterInt(BigInt(a.q_ - b.q_));
    }
    friend QuarterInt operator-(const QuarterInt& a) { return QuarterInt(BigInt(-a.q_)); }
    QuarterInt add_integer(long n) const { return QuarterInt(BigInt(q_ + 4 * n)); }

    friend bool operator==(const QuarterInt& a, const QuarterInt& b) { return a.q_ == b.q_; }
    friend bool operator!=(const QuarterInt& a, const QuarterInt& b) { return a.q_ != b.q_; }
    friend bool operator<(const QuarterInt& a, const QuarterInt& b) { return a.q_ < b.q_; }
    friend bool operator>(const QuarterInt& a, const QuarterInt& b) { return a.q_ > b.q_; }
    friend bool operator<=(const QuarterInt& a, const QuarterInt& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const QuarterInt& a, const QuarterInt& b) { return a.q_ >= b.q_; }

private:
    explicit QuarterInt(const BigInt& quadruple) : q_(quadruple) {}
    BigInt q_; // value is q_/4
};

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt pow2(unsigned long e);

// lcm(1, 2, ..., n); returns 1 for n <= 1.
BigInt lcm_upto(unsigned long n);

// Largest odd divisor of |n|; odd_part(0) throws.
BigInt odd_part(const BigInt& n);

// 2-adic valuation; negative for even denominators, throws on zero input.
Valuation ord2(const BigInt& n);
Valuation ord2(const BigRat& r);

// Binomial-type polynomial (t-1)(t-2)...(t-n)/n!, integer-valued on integers.
// Evaluated exactly at a quarter-integer argument.
BigRat integer_valued_poly(unsigned long n, const QuarterInt& t);

} // namespace catalan
