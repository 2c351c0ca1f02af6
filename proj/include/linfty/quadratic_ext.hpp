#pragma once

#include <string>

#include "linfty/errors.hpp"
#include "linfty/rational.hpp"

namespace linfty {

/// Element a + b*sqrt(delta) of a quadratic extension Q(sqrt(delta)).
/// delta is carried per element; mixing distinct deltas is an error unless
/// one side is rational (b == 0).
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), delta_(0) {}
    QuadExt(long n) : a_(n), b_(0), delta_(0) {}
    QuadExt(const Rational& a) : a_(a), b_(0), delta_(0) {}
    QuadExt(const Rational& a, const Rational& b, const Rational& delta)
        : a_(a), b_(b), delta_(delta) {
        if (b_.is_zero()) delta_ = Rational(0);
    }

    static QuadExt sqrt_of(const Rational& delta) { return QuadExt(Rational(0), Rational(1), delta); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    const Rational& delta() const { return delta_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt conjugate() const { return QuadExt(a_, -b_, delta_); }
    /// a^2 - b^2*delta, the field norm; zero only for the zero element when
    /// delta is not a rational square.
    Rational norm() const { return a_ * a_ - b_ * b_ * delta_; }

    QuadExt operator-() const { return QuadExt(-a_, -b_, delta_); }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        Rational d = merged_delta(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Rational d = merged_delta(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw domain_error("division by zero in quadratic extension");
        Rational n = y.norm();
        if (n.is_zero()) throw domain_error("division by a zero-norm element (delta is a square)");
        QuadExt num = x * y.conjugate();
        Rational inv = n.reciprocal();
        return QuadExt(num.a_ * inv, num.b_ * inv, num.delta_);
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (!x.b_.is_zero() && !y.b_.is_zero() && x.delta_ != y.delta_) return false;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string rad = "sqrt(" + delta_.str() + ")";
        std::string bterm = b_.abs().is_one() ? rad : b_.abs().str() + "*" + rad;
        if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + bterm;
        return a_.str() + (b_.sign() < 0 ? " - " : " + ") + bterm;
    }

private:
    Rational a_, b_, delta_;

    static Rational merged_delta(const QuadExt& x, const QuadExt& y) {
        if (x.b_.is_zero()) return y.delta_;
        if (y.b_.is_zero()) return x.delta_;
        if (x.delta_ != y.delta_)
            throw domain_error("mixing elements of distinct quadratic extensions");
        return x.delta_;
    }
};

inline std::string to_string(const QuadExt& x) { return x.str(); }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

} // namespace linfty
