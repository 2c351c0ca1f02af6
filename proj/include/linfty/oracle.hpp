#pragma once

#include <map>
#include <vector>

#include "linfty/bracket.hpp"
#include "linfty/linear_algebra.hpp"

namespace linfty {

/// Ordered basis of the truncation S^1(W) + ... + S^{k_max}(W), used by the
/// brute-force verification path.
struct TruncatedCoalgebraBasis {
    int k_max;
    std::vector<MultiIndex> monomials;
    std::map<MultiIndex, size_t> position;

    explicit TruncatedCoalgebraBasis(int k_max_) : k_max(k_max_) {
        if (k_max < 1) throw domain_error("truncation must keep degree >= 1");
        for (int n = 1; n <= k_max; ++n)
            for (const MultiIndex& m : enumerate_monomials(n)) {
                position.emplace(m, monomials.size());
                monomials.push_back(m);
            }
    }
    size_t size() const { return monomials.size(); }
};

namespace oracle_detail {

// Labeled factor list of a monomial: one generator index per tensor slot.
inline std::vector<int> factor_labels(const MultiIndex& m) {
    std::vector<int> out;
    if (m.i1) out.push_back(1);
    out.insert(out.end(), static_cast<size_t>(m.i2), 2);
    out.insert(out.end(), static_cast<size_t>(m.i3), 3);
    return out;
}

inline bool generator_is_odd(int g) { return g == 1; }

// Koszul sign of moving the selected slots to the front, keeping relative
// order. Computed generically from the factor parities.
inline int unshuffle_sign(const std::vector<int>& labels, const std::vector<size_t>& selected) {
    int sign = 1;
    std::vector<bool> chosen(labels.size(), false);
    for (size_t s : selected) chosen[s] = true;
    for (size_t s : selected) {
        if (!generator_is_odd(labels[s])) continue;
        for (size_t j = 0; j < s; ++j) {
            if (!chosen[j] && generator_is_odd(labels[j])) sign = -sign;
        }
    }
    return sign;
}

} // namespace oracle_detail

/// Matrix of the coderivation extension of a degree-m cochain on the
/// truncated coalgebra, computed by enumerating position subsets of labeled
/// tensor factors (no binomial closed form).
template <class K>
Matrix<K> coderivation_matrix(const Cochain<K>& f, const TruncatedCoalgebraBasis& basis) {
    using namespace oracle_detail;
    if (f.is_zero()) return Matrix<K>(basis.size(), basis.size());
    int m = f.degree();
    if (m > basis.k_max)
        throw domain_error("cochain degree exceeds coalgebra truncation");
    Matrix<K> out(basis.size(), basis.size());
    for (size_t col = 0; col < basis.size(); ++col) {
        const MultiIndex& K_index = basis.monomials[col];
        int k = K_index.degree();
        if (k < m) continue;
        std::vector<int> labels = factor_labels(K_index);
        const size_t mm = static_cast<size_t>(m);
        const size_t kk = labels.size();
        // enumerate all position subsets of size m
        std::vector<size_t> sel(mm);
        for (size_t i = 0; i < mm; ++i) sel[i] = i;
        bool more = true;
        while (more) {
            // argument multiset and remainder
            MultiIndex arg{0, 0, 0}, rem{0, 0, 0};
            std::vector<bool> chosen(kk, false);
            for (size_t s : sel) chosen[s] = true;
            for (size_t i = 0; i < kk; ++i) {
                MultiIndex& dst = chosen[i] ? arg : rem;
                if (labels[i] == 1) dst.i1 += 1;
                else if (labels[i] == 2) dst.i2 += 1;
                else dst.i3 += 1;
            }
            if (arg.i1 <= 1) {
                int sign = unshuffle_sign(labels, sel);
                // f on the argument monomial, by the defining relation
                // ph^I_j(w_J) = I! delta^I_J w_j (kept local to this path).
                for (const auto& [b, c] : f.terms()) {
                    if (b.index != arg) continue;
                    MultiIndex image;
                    if (!multiply_generator(rem, b.target, image)) continue;
                    K value = c * K(static_cast<long>(arg.factorial_value()) * sign);
                    auto it = basis.position.find(image);
                    if (it == basis.position.end()) throw internal_error("image outside truncation");
                    out.at(it->second, col) += value;
                }
            }
            // next combination in lexicographic order
            size_t i = mm;
            while (i > 0 && sel[i - 1] == kk - mm + (i - 1)) --i;
            if (i == 0) {
                more = false;
            } else {
                ++sel[i - 1];
                for (size_t j = i; j < mm; ++j) sel[j] = sel[j - 1] + 1;
            }
        }
    }
    return out;
}

/// Graded commutator of coderivation matrices, re-extracted as a cochain of
/// degree deg f + deg g - 1. Cross-validation target for bracket().
template <class K>
Cochain<K> oracle_bracket(const Cochain<K>& f, const Cochain<K>& g, int k_max) {
    if (f.is_zero() || g.is_zero()) return Cochain<K>();
    int m = f.degree();
    int n = g.degree();
    if (m + n - 1 > k_max) throw domain_error("coalgebra truncation too small for this bracket");
    TruncatedCoalgebraBasis basis(k_max);
    Matrix<K> mf = coderivation_matrix(f, basis);
    Matrix<K> mg = coderivation_matrix(g, basis);
    bool both_odd = f.parity() == Parity::Odd && g.parity() == Parity::Odd;
    Matrix<K> fg = mf * mg;
    Matrix<K> gf = mg * mf;
    Cochain<K> out;
    for (const MultiIndex& J : enumerate_monomials(m + n - 1)) {
        size_t col = basis.position.at(J);
        K jf = K(static_cast<long>(J.factorial_value()));
        for (int j = 1; j <= 3; ++j) {
            MultiIndex gen{j == 1 ? 1 : 0, j == 2 ? 1 : 0, j == 3 ? 1 : 0};
            size_t row = basis.position.at(gen);
            K value = fg.at(row, col);
            value = both_odd ? value + gf.at(row, col) : value - gf.at(row, col);
            out.add_term(BasisCochain{J, j}, value / jf);
        }
    }
    return out;
}

} // namespace linfty
