#pragma once

#include <string>

#include "linfty/cochain.hpp"
#include "linfty/rational.hpp"
#include "linfty/rational_function.hpp"

namespace linfty {

// Cochain text grammar:
//   expression := term (("+"|"-") term)*
//   term       := [coeff "*"?] kind "[" i1 "," i2 "," i3 ";" j "]"
//   kind       := "ph" (even) | "ps" (odd)
//   coeff      := rational like "-3/4", or "c" / "p/q*c" with the symbolic
//                 backend
// The zero cochain parses from and prints as "0".

Cochain<Rational> parse_cochain(const std::string& text);
Cochain<RationalFunction> parse_cochain_symbolic(const std::string& text);

/// True when the expression uses the family parameter "c" as a coefficient.
bool uses_symbolic_coefficient(const std::string& text);

namespace io_detail {

template <class K>
std::string coeff_prefix(const K& coeff, bool leading);

template <>
inline std::string coeff_prefix<Rational>(const Rational& coeff, bool leading) {
    std::string join = leading ? (coeff.sign() < 0 ? "-" : "")
                               : (coeff.sign() < 0 ? " - " : " + ");
    Rational mag = coeff.abs();
    return join + (mag.is_one() ? "" : mag.str() + "*");
}

template <>
inline std::string coeff_prefix<RationalFunction>(const RationalFunction& coeff, bool leading) {
    if (coeff.is_constant()) return coeff_prefix<Rational>(coeff.constant_value(), leading);
    std::string join = leading ? "" : " + ";
    std::string s = coeff.str();
    if (s.find_first_of("+-") != std::string::npos || coeff.denominator().degree() > 0)
        s = "(" + s + ")";
    return join + s + "*";
}

} // namespace io_detail

template <class K>
std::string print_cochain(const Cochain<K>& c) {
    if (c.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [b, coeff] : c.terms()) {
        out += io_detail::coeff_prefix<K>(coeff, leading) + b.str();
        leading = false;
    }
    return out;
}

} // namespace linfty
