#include "catalan/exact.hpp"

#include <stdexcept>

namespace catalan {

BigRat::BigRat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("BigRat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRat::BigRat(long num, long den) : BigRat(BigInt(num), BigInt(den)) {}

BigRat BigRat::from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return BigRat(BigInt(s));
        }
        return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("BigRat: cannot parse '" + s + "'");
    }
}

BigRat BigRat::abs() const {
    BigRat r = *this;
    r.v_ = ::abs(r.v_);
    return r;
}

BigRat BigRat::inverse() const {
    if (is_zero()) throw DomainError("BigRat: inverse of zero");
    return BigRat(den(), num());
}

BigInt BigRat::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

BigInt BigRat::round_nearest() const {
    // round(x) = floor(x + 1/2) for x >= 0, mirrored for x < 0
    mpq_class twice = v_ * 2;
    mpz_class n = twice.get_num(), d = twice.get_den();
    mpz_class q;
    if (sgn(v_) >= 0) {
        mpz_fdiv_q(q.get_mpz_t(), mpz_class(n + d).get_mpz_t(), mpz_class(2 * d).get_mpz_t());
    } else {
        mpz_cdiv_q(q.get_mpz_t(), mpz_class(n - d).get_mpz_t(), mpz_class(2 * d).get_mpz_t());
    }
    return q;
}

std::string BigRat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRat& BigRat::operator/=(const BigRat& o) {
    if (o.is_zero()) throw DomainError("BigRat: division by zero");
    v_ /= o.v_;
    return *this;
}

QuarterInt QuarterInt::from_rat(const BigRat& r) {
    BigRat q4 = r * BigRat(4);
    if (!q4.is_integer()) throw DomainError("QuarterInt: " + r.str() + " is not a quarter-integer");
    return QuarterInt(q4.num());
}

BigInt QuarterInt::floor() const {
    BigInt q;
    mpz_fdiv_q_ui(q.get_mpz_t(), q_.get_mpz_t(), 4);
    return q;
}

int QuarterInt::quadruple_mod4() const {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), q_.get_mpz_t(), 4);
    return static_cast<int>(r.get_ui());
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt pow2(unsigned long e) {
    BigInt r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

BigInt lcm_upto(unsigned long n) {
    BigInt l = 1;
    for (unsigned long k = 2; k <= n; ++k) {
        mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), k);
    }
    return l;
}

BigInt odd_part(const BigInt& n) {
    if (n == 0) throw DomainError("odd_part: zero has no odd part");
    BigInt a = ::abs(n);
    mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), mpz_scan1(a.get_mpz_t(), 0));
    return a;
}

Valuation ord2(const BigInt& n) {
    if (n == 0) throw DomainError("ord2: valuation of zero is undefined");
    BigInt a = ::abs(n);
    return static_cast<Valuation>(mpz_scan1(a.get_mpz_t(), 0));
}

Valuation ord2(const BigRat& r) {
    if (r.is_zero()) throw DomainError("ord2: valuation of zero is undefined");
    return ord2(r.num()) - ord2(r.den());
}

BigRat integer_valued_poly(unsigned long n, const QuarterInt& t) {
    // prod_{j=1}^{n} (t - j) / n!, computed over quadruples: (4t - 4j)/4
    BigInt num = 1;
    const BigInt q = t.quadruple();
    for (unsigned long j = 1; j <= n; ++j) {
        num *= q - BigInt(4 * j);
    }
    BigInt den = factorial(n);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * n); // times 4^n
    return BigRat(num, den);
}

} // namespace catalan
