#pragma once

#include <array>
#include <string>

#include "linfty/bracket.hpp"

namespace linfty {

/// Invertible linear coalgebra automorphism of S(W): w1 -> q*w1 and an
/// invertible 2x2 block on <w2,w3>,
///   w2 -> r*w2 + s*w3,  w3 -> t*w2 + u*w3.
template <class K>
struct LinearAutomorphism {
    K q = K(1);
    K r = K(1), t = K(0);
    K s = K(0), u = K(1);

    static LinearAutomorphism identity() { return {}; }

    K block_det() const { return r * u - s * t; }
    bool invertible() const { return !is_zero(q) && !is_zero(block_det()); }

    LinearAutomorphism inverse() const {
        require_invertible();
        K inv_det = K(1) / block_det();
        LinearAutomorphism g;
        g.q = K(1) / q;
        g.r = u * inv_det;
        g.t = -t * inv_det;
        g.s = -s * inv_det;
        g.u = r * inv_det;
        return g;
    }

    void require_invertible() const {
        if (!invertible()) throw domain_error("linear automorphism is singular");
    }

    /// Image of w_j in W coordinates.
    std::array<K, 3> generator_image(int j) const {
        if (j == 1) return {q, K(0), K(0)};
        if (j == 2) return {K(0), r, s};
        return {K(0), t, u};
    }

    template <class K2>
    LinearAutomorphism<K2> converted() const {
        return LinearAutomorphism<K2>{K2(q), K2(r), K2(t), K2(s), K2(u)};
    }
};

namespace detail {

/// Expansion of S(g)(w^I) in the monomial basis:
/// (q w1)^{i1} (r w2 + s w3)^{i2} (t w2 + u w3)^{i3}.
template <class K>
MonomialSum<K> automorphism_on_monomial(const LinearAutomorphism<K>& g, const MultiIndex& index) {
    MonomialSum<K> out;
    for (int a = 0; a <= index.i2; ++a) {
        for (int b = 0; b <= index.i3; ++b) {
            K coeff = K(static_cast<long>(binomial(index.i2, a) * binomial(index.i3, b)));
            K rs = K(1);
            for (int k = 0; k < a; ++k) rs *= g.r;
            for (int k = 0; k < index.i2 - a; ++k) rs *= g.s;
            for (int k = 0; k < b; ++k) rs *= g.t;
            for (int k = 0; k < index.i3 - b; ++k) rs *= g.u;
            coeff = coeff * rs;
            if (index.i1 == 1) coeff = coeff * g.q;
            if (is_zero(coeff)) continue;
            MultiIndex m{index.i1, a + b, index.i2 + index.i3 - a - b};
            auto [it, inserted] = out.try_emplace(m, coeff);
            if (!inserted) {
                it->second += coeff;
                if (is_zero(it->second)) out.erase(it);
            }
        }
    }
    return out;
}

} // namespace detail

/// Pullback action d -> g^{-1} o d o S(g), computed degreewise in the
/// monomial basis. The degree-2 first-kind case reduces to the matrix
/// conjugation q * block^{-1} M block.
template <class K>
Cochain<K> act(const LinearAutomorphism<K>& g, const Cochain<K>& d) {
    g.require_invertible();
    if (d.is_zero()) return d;
    LinearAutomorphism<K> ginv = g.inverse();
    Cochain<K> out;
    for (int n : d.degrees()) {
        Cochain<K> dn = d.degree_component(n);
        for (const MultiIndex& J : enumerate_monomials(n)) {
            // evaluate d on S(g)(w^J), then pull the W-part back through g^{-1}
            std::array<K, 3> value{K(0), K(0), K(0)};
            for (const auto& [m, c] : detail::automorphism_on_monomial(g, J)) {
                std::array<K, 3> v = evaluate(dn, m);
                for (size_t i = 0; i < 3; ++i) value[i] += c * v[i];
            }
            std::array<K, 3> pulled{K(0), K(0), K(0)};
            for (int j = 1; j <= 3; ++j) {
                std::array<K, 3> img = ginv.generator_image(j);
                for (size_t i = 0; i < 3; ++i) pulled[i] += value[static_cast<size_t>(j - 1)] * img[i];
            }
            K jf = K(static_cast<long>(J.factorial_value()));
            for (int j = 1; j <= 3; ++j)
                out.add_term(BasisCochain{J, j}, pulled[static_cast<size_t>(j - 1)] / jf);
        }
    }
    return out;
}

} // namespace linfty
