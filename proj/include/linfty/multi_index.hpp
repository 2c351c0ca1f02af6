#pragma once

#include <compare>
#include <string>
#include <vector>

#include "linfty/errors.hpp"

namespace linfty {

enum class Parity { Even, Odd };

inline Parity operator+(Parity a, Parity b) {
    return (a == b) ? Parity::Even : Parity::Odd;
}
inline std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// Exponent triple (i1,i2,i3) of a monomial w1^i1 w2^i2 w3^i3 of S(W).
/// w1 is the odd generator, so i1 is 0 or 1.
struct MultiIndex {
    int i1 = 0;
    int i2 = 0;
    int i3 = 0;

    bool valid() const { return (i1 == 0 || i1 == 1) && i2 >= 0 && i3 >= 0; }
    int degree() const { return i1 + i2 + i3; }
    Parity parity() const { return i1 % 2 == 0 ? Parity::Even : Parity::Odd; }
    unsigned long long factorial_value() const; // i1! * i2! * i3!

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

    std::string str() const {
        return "(" + std::to_string(i1) + "," + std::to_string(i2) + "," + std::to_string(i3) + ")";
    }
};

unsigned long long factorial(int n);
unsigned long long binomial(int n, int k);

/// All monomials of word degree n: even block (0,p,n-p) with p descending
/// from n, then odd block (1,q,n-q-1) with q ascending from 0.
std::vector<MultiIndex> enumerate_monomials(int n);

} // namespace linfty
