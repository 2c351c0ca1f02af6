#include "linfty/io.hpp"

#include <cctype>
#include <functional>

namespace linfty {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c, const char* what) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw parse_error("parse error at position " + std::to_string(pos) + ": expected " + what);
        ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    long integer(const char* what) {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) { ++pos; ++digits; }
        if (digits == 0) fail(std::string("expected ") + what);
        return std::stol(text.substr(start, pos - start));
    }

    Rational rational() {
        long num = integer("number");
        if (peek() == '/') {
            ++pos;
            long den = integer("denominator");
            if (den == 0) fail("division by zero in coefficient");
            return Rational(num, den);
        }
        return Rational(num);
    }
};

// Parses one term into (coefficient via callback, basis cochain).
template <class K>
void parse_term(Cursor& cur, Cochain<K>& acc, int sign,
                const std::function<K(Cursor&)>& coefficient) {
    K coeff = K(sign);
    char c = cur.peek();
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == 'c') {
        coeff = coeff * coefficient(cur);
        have_coeff = true;
    }
    if (have_coeff) {
        if (cur.peek() == '*') ++cur.pos;
        // a bare coefficient with no basis symbol is only legal as "0"
        if (cur.eof() || cur.peek() == '+' || cur.peek() == '-') {
            if (is_zero(coeff)) return;
            cur.fail("expected basis symbol 'ph' or 'ps' after coefficient");
        }
    }
    cur.skip_ws();
    if (cur.text.compare(cur.pos, 2, "ph") != 0 && cur.text.compare(cur.pos, 2, "ps") != 0)
        cur.fail("expected basis symbol 'ph' or 'ps'");
    bool wants_odd = cur.text[cur.pos + 1] == 's';
    cur.pos += 2;
    cur.expect('[', "'['");
    long i1 = cur.integer("i1");
    if (i1 != 0 && i1 != 1) cur.fail("i1 must be 0 or 1");
    cur.expect(',', "','");
    long i2 = cur.integer("i2");
    cur.expect(',', "','");
    long i3 = cur.integer("i3");
    cur.expect(';', "';'");
    long j = cur.integer("target index j");
    cur.expect(']', "']'");
    if (i2 < 0 || i3 < 0) cur.fail("exponents must be nonnegative");
    if (j < 1 || j > 3) cur.fail("target index j must be 1, 2 or 3");
    BasisCochain b{MultiIndex{static_cast<int>(i1), static_cast<int>(i2), static_cast<int>(i3)},
                   static_cast<int>(j)};
    if (!b.valid() || b.degree() < 1) cur.fail("basis cochain must have word degree >= 1");
    bool is_odd = b.parity() == Parity::Odd;
    if (is_odd != wants_odd)
        cur.fail(std::string("parity mismatch: ") + b.str().substr(0, 2) + " expected for this index");
    acc.add_term(b, coeff);
}

template <class K>
Cochain<K> parse_expression(const std::string& text, const std::function<K(Cursor&)>& coefficient) {
    Cursor cur{text};
    Cochain<K> acc;
    if (cur.eof()) throw parse_error("empty cochain expression");
    int sign = 1;
    if (cur.peek() == '-') { sign = -1; ++cur.pos; }
    else if (cur.peek() == '+') { ++cur.pos; }
    parse_term(cur, acc, sign, coefficient);
    while (!cur.eof()) {
        char c = cur.peek();
        if (c == '+') sign = 1;
        else if (c == '-') sign = -1;
        else cur.fail("expected '+' or '-' between terms");
        ++cur.pos;
        parse_term(cur, acc, sign, coefficient);
    }
    return acc;
}

} // namespace

Cochain<Rational> parse_cochain(const std::string& text) {
    std::function<Rational(Cursor&)> coeff = [](Cursor& cur) -> Rational {
        if (cur.peek() == 'c') cur.fail("symbolic coefficient 'c' is not allowed here");
        return cur.rational();
    };
    return parse_expression<Rational>(text, coeff);
}

Cochain<RationalFunction> parse_cochain_symbolic(const std::string& text) {
    std::function<RationalFunction(Cursor&)> coeff = [](Cursor& cur) -> RationalFunction {
        if (cur.peek() == 'c') {
            ++cur.pos;
            return RationalFunction::variable();
        }
        Rational r = cur.rational();
        if (cur.peek() == '*') {
            size_t save = cur.pos;
            ++cur.pos;
            if (cur.peek() == 'c') {
                ++cur.pos;
                return RationalFunction(r) * RationalFunction::variable();
            }
            cur.pos = save;
        }
        return RationalFunction(r);
    };
    return parse_expression<RationalFunction>(text, coeff);
}

bool uses_symbolic_coefficient(const std::string& text) {
    return text.find('c') != std::string::npos;
}

} // namespace linfty
