#pragma once

#include <string>
#include <vector>

#include "linfty/errors.hpp"
#include "linfty/rational.hpp"

namespace linfty {

/// Dense univariate polynomial over the rationals, used as numerator and
/// denominator of RationalFunction. The variable prints as "c".
class Polynomial {
public:
    Polynomial() {}
    Polynomial(const Rational& constant) {
        if (!constant.is_zero()) coeffs_.push_back(constant);
    }
    static Polynomial variable() {
        Polynomial p;
        p.coeffs_ = {Rational(0), Rational(1)};
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rational(0);
    }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Euclidean division; denominator must be nonzero.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
    static Polynomial gcd(Polynomial a, Polynomial b);

    Polynomial scaled(const Rational& s) const;
    Rational eval(const Rational& x) const;
    std::string str() const;

private:
    std::vector<Rational> coeffs_; // coeffs_[k] multiplies c^k; no trailing zeros
    void trim();
};

/// Element of the rational-function field Q(c). Kept normalized: gcd of
/// numerator and denominator is 1 and the denominator is monic.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(long n) : num_(Rational(n)), den_(Rational(1)) {}
    RationalFunction(const Rational& r) : num_(r), den_(Rational(1)) {}
    RationalFunction(const Polynomial& num, const Polynomial& den);

    static RationalFunction variable() {
        return RationalFunction(Polynomial::variable(), Polynomial(Rational(1)));
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rational constant_value() const;

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw domain_error("division by zero in Q(c)");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str() const;

private:
    Polynomial num_, den_;
};

inline std::string to_string(const RationalFunction& f) { return f.str(); }
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

} // namespace linfty
