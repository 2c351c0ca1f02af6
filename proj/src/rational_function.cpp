#include "linfty/rational_function.hpp"

namespace linfty {

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.coeffs_.resize(n, Rational(0));
    for (size_t k = 0; k < n; ++k) r.coeffs_[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    r.trim();
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    q = Polynomial();
    r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational factor = r.leading() / b.leading();
        Polynomial term;
        term.coeffs_.assign(static_cast<size_t>(shift) + 1, Rational(0));
        term.coeffs_.back() = factor;
        q = q + term;
        r = r - term * b;
    }
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().reciprocal()); // monic
}

Polynomial Polynomial::scaled(const Rational& s) const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c *= s;
    r.trim();
    return r;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational a = coeff(k);
        if (a.is_zero()) continue;
        std::string mag = a.abs().str();
        std::string var = (k == 0) ? "" : (k == 1 ? "c" : "c^" + std::to_string(k));
        std::string body;
        if (var.empty()) body = mag;
        else if (mag == "1") body = var;
        else body = mag + "*" + var;
        if (first) {
            out += (a.sign() < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (a.sign() < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw domain_error("division by zero in Q(c)");
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        Polynomial q, r;
        Polynomial::divmod(num_, g, q, r);
        num_ = q;
        Polynomial::divmod(den_, g, q, r);
        den_ = q;
    }
    Rational lead = den_.leading();
    if (!lead.is_one()) {
        Rational inv = lead.reciprocal();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw domain_error("rational function " + str() + " is not constant");
    return num_.coeff(0);
}

std::string RationalFunction::str() const {
    if (den_.degree() == 0) {
        return num_.str();
    }
    std::string n = num_.str();
    if (num_.degree() > 0) n = "(" + n + ")";
    return n + "/(" + den_.str() + ")";
}

} // namespace linfty
