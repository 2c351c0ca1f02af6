#pragma once

#include <gmpxx.h>

#include <string>

#include "linfty/errors.hpp"

namespace linfty {

/// Exact rational scalar backed by GMP. Division by zero throws instead of
/// trapping, and values are always kept canonical.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rational parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Integer value; only valid when is_integer() and the value fits a long.
    long to_long() const;

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational reciprocal() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    std::string str() const;

private:
    mpq_class v_;
};

inline std::string to_string(const Rational& r) { return r.str(); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }

} // namespace linfty
