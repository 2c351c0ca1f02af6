#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linfty/cochain.hpp"

namespace linfty {

/// Formal element of S(W): sparse sum of monomials with scalar coefficients.
template <class K>
using MonomialSum = std::map<MultiIndex, K>;

/// Evaluate a degree-homogeneous cochain on a monomial of matching degree.
/// Returns the coefficients on (w1, w2, w3).
template <class K>
std::array<K, 3> evaluate(const Cochain<K>& f, const MultiIndex& monomial) {
    if (!monomial.valid() || monomial.degree() < 1)
        throw domain_error("invalid monomial " + monomial.str());
    std::array<K, 3> out{K(0), K(0), K(0)};
    if (f.is_zero()) return out;
    if (f.degree() != monomial.degree())
        throw domain_error("degree mismatch: cochain of degree " + std::to_string(f.degree()) +
                           " evaluated on monomial of degree " + std::to_string(monomial.degree()));
    for (const auto& [b, c] : f.terms()) {
        if (b.index == monomial)
            out[static_cast<size_t>(b.target - 1)] += c * K(static_cast<long>(b.index.factorial_value()));
    }
    return out;
}

/// Multiply a generator w_j onto a monomial. Returns false when the product
/// vanishes (two odd factors).
inline bool multiply_generator(const MultiIndex& m, int target, MultiIndex& out) {
    out = m;
    if (target == 1) {
        if (m.i1 == 1) return false;
        out.i1 = 1;
    } else if (target == 2) {
        ++out.i2;
    } else {
        ++out.i3;
    }
    return true;
}

/// Value of the coderivation extension of a degree-m cochain on a degree-k
/// monomial (k >= m), expressed in the monomial basis of S^{k-m+1}(W).
/// With a single odd generator every unshuffle Koszul sign is +1, so the
/// coefficient of each surviving term is the product of binomials times the
/// defining I! factor.
template <class K>
MonomialSum<K> extend_as_coderivation(const Cochain<K>& f, const MultiIndex& monomial) {
    if (!monomial.valid() || monomial.degree() < 1)
        throw domain_error("invalid monomial " + monomial.str());
    MonomialSum<K> out;
    if (f.is_zero()) return out;
    int m = f.degree();
    int k = monomial.degree();
    if (k < m)
        throw domain_error("degree mismatch: cannot extend degree-" + std::to_string(m) +
                           " cochain over degree-" + std::to_string(k) + " monomial");
    for (const auto& [b, c] : f.terms()) {
        const MultiIndex& I = b.index;
        if (I.i1 > monomial.i1 || I.i2 > monomial.i2 || I.i3 > monomial.i3) continue;
        unsigned long long count = binomial(monomial.i1, I.i1) * binomial(monomial.i2, I.i2) *
                                   binomial(monomial.i3, I.i3);
        MultiIndex remainder{monomial.i1 - I.i1, monomial.i2 - I.i2, monomial.i3 - I.i3};
        MultiIndex image;
        if (!multiply_generator(remainder, b.target, image)) continue;
        K coeff = c * K(static_cast<long>(count * I.factorial_value()));
        if (is_zero(coeff)) continue;
        auto [it, inserted] = out.try_emplace(image, coeff);
        if (!inserted) {
            it->second += coeff;
            if (is_zero(it->second)) out.erase(it);
        }
    }
    return out;
}

namespace detail {

/// pi_W(f_bar compose g_bar) on S^{m+n-1}(W) for degree-homogeneous f, g.
template <class K>
Cochain<K> compose_project(const Cochain<K>& f, const Cochain<K>& g) {
    Cochain<K> out;
    int m = f.degree();
    int n = g.degree();
    int r = m + n - 1;
    for (const MultiIndex& J : enumerate_monomials(r)) {
        std::array<K, 3> value{K(0), K(0), K(0)};
        for (const auto& [mid, c] : extend_as_coderivation(g, J)) {
            std::array<K, 3> v = evaluate(f, mid);
            for (size_t j = 0; j < 3; ++j) value[j] += c * v[j];
        }
        K jf = K(static_cast<long>(J.factorial_value()));
        for (int j = 1; j <= 3; ++j) {
            K coeff = value[static_cast<size_t>(j - 1)] / jf;
            out.add_term(BasisCochain{J, j}, coeff);
        }
    }
    return out;
}

template <class K>
Cochain<K> bracket_homogeneous(const Cochain<K>& f, const Cochain<K>& g, bool both_odd) {
    Cochain<K> fg = compose_project(f, g);
    Cochain<K> gf = compose_project(g, f);
    return both_odd ? fg + gf : fg - gf;
}

} // namespace detail

/// Graded bracket [f,g] of coderivations, as a cochain. Both arguments must
/// be parity-homogeneous; degrees may be mixed and the bracket distributes
/// over degree components.
template <class K>
Cochain<K> bracket(const Cochain<K>& f, const Cochain<K>& g) {
    if (f.is_zero() || g.is_zero()) return Cochain<K>();
    if (!f.is_parity_homogeneous() || !g.is_parity_homogeneous())
        throw domain_error("bracket requires parity-homogeneous arguments");
    bool both_odd = f.parity() == Parity::Odd && g.parity() == Parity::Odd;
    Cochain<K> out;
    for (int m : f.degrees()) {
        Cochain<K> fm = f.degree_component(m);
        for (int n : g.degrees()) {
            out += detail::bracket_homogeneous(fm, g.degree_component(n), both_odd);
        }
    }
    return out;
}

template <class K>
struct CodifferentialCheck {
    bool ok = false;
    Cochain<K> residual; // [d,d], for diagnostics
    std::string reason;
};

/// d is a codifferential iff it is odd and [d,d] = 0 exactly.
template <class K>
CodifferentialCheck<K> is_codifferential(const Cochain<K>& d) {
    CodifferentialCheck<K> r;
    if (d.is_zero()) {
        r.ok = true;
        return r;
    }
    if (!d.is_parity_homogeneous() || d.parity() != Parity::Odd) {
        r.ok = false;
        r.reason = "not an odd cochain";
        return r;
    }
    r.residual = bracket(d, d);
    r.ok = r.residual.is_zero();
    if (!r.ok) r.reason = "[d,d] != 0";
    return r;
}

enum class Kind { Zero, FirstKind, SecondKind, Mixed };

inline std::string to_string(Kind k) {
    switch (k) {
        case Kind::Zero: return "zero";
        case Kind::FirstKind: return "first-kind";
        case Kind::SecondKind: return "second-kind";
        default: return "mixed";
    }
}

/// Dichotomy for homogeneous odd cochains: first kind uses only ps[1,q,*;2],
/// ps[1,q,*;3] terms, second kind only ps[0,p,*;1] terms.
template <class K>
Kind kind_of(const Cochain<K>& d) {
    if (d.is_zero()) return Kind::Zero;
    if (!d.is_degree_homogeneous())
        throw domain_error("kind is defined for degree-homogeneous cochains");
    if (!d.is_parity_homogeneous() || d.parity() != Parity::Odd)
        throw domain_error("kind is defined for odd cochains");
    bool first = false, second = false;
    for (const auto& [b, c] : d.terms()) {
        if (b.index.i1 == 1) first = true;
        else second = true;
    }
    if (first && second) return Kind::Mixed;
    return first ? Kind::FirstKind : Kind::SecondKind;
}

} // namespace linfty
