#ifndef PRODCANON_RATIONAL_HPP
#define PRODCANON_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "prodcanon/errors.hpp"

namespace prodcanon {

using Integer = mpz_class;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator. Backed by GMP's mpq layer.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { canonical(); }
    Rational(const Integer& n, const Integer& d) : v_(n, d) { canonical(); }
    explicit Rational(const mpq_class& q) : v_(q) { canonical(); }

    // Parses "a" or "a/b".
    static Rational parse(const std::string& text);

    const Integer num() const { return v_.get_num(); }
    const Integer den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail(ErrorKind::ZeroInput, "division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) fail(ErrorKind::ZeroInput, "inverse of zero");
        return Rational(mpq_class(1 / v_), NoCanon{});
    }

    /// r^k for any integer k (k < 0 requires r != 0).
    Rational pow(long k) const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    struct NoCanon {};
    Rational(mpq_class q, NoCanon) : v_(std::move(q)) {}
    void canonical() {
        if (v_.get_den() == 0) fail(ErrorKind::ZeroInput, "zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

/// gcd of |a| and |b| as nonnegative integer; gcd(0, 0) = 0.
Integer int_gcd(const Integer& a, const Integer& b);
Integer int_lcm(const Integer& a, const Integer& b);

/// Floor division a / b for b > 0.
Integer int_fdiv(const Integer& a, const Integer& b);

}  // namespace prodcanon

#endif
