#include "linfty/rational.hpp"

#include <cctype>

namespace linfty {

Rational::Rational(long num, long den) {
    if (den == 0) throw domain_error("division by zero in rational constant");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    size_t i = 0;
    auto scan_int = [&](const char* what) {
        size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++digits; }
        if (digits == 0) throw parse_error(std::string("expected ") + what + " in rational literal '" + text + "'");
        return text.substr(start, i - start);
    };
    std::string num = scan_int("numerator");
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = scan_int("denominator");
    }
    if (i != text.size()) throw parse_error("trailing characters in rational literal '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw domain_error("division by zero in rational literal '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

long Rational::to_long() const {
    if (!is_integer()) throw domain_error("rational " + str() + " is not an integer");
    if (!v_.get_num().fits_slong_p()) throw domain_error("integer overflow converting " + str());
    return v_.get_num().get_si();
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw domain_error("division by zero (reciprocal of 0)");
    mpq_class r = 1 / v_;
    return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_str();
}

} // namespace linfty
