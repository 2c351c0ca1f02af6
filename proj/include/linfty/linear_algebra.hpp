#pragma once

#include <optional>
#include <vector>

#include "linfty/errors.hpp"

namespace linfty {

/// Dense matrix over an exact field. Sizes here are tiny (a few dozen rows),
/// so plain Gauss-Jordan with deterministic pivoting is all we need.
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    K& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const K& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    static Matrix from_columns(const std::vector<std::vector<K>>& cols, size_t nrows) {
        Matrix m(nrows, cols.size());
        for (size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != nrows) throw internal_error("ragged column set");
            for (size_t r = 0; r < nrows; ++r) m.at(r, c) = cols[c][r];
        }
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw internal_error("matrix shape mismatch in product");
        Matrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                if (is_zero(at(i, k))) continue;
                for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    bool is_zero_matrix() const {
        for (const K& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }

    /// In-place reduced row echelon form. Returns the pivot column of each
    /// pivot row, in row order. First nonzero entry in each column order is
    /// the pivot, so results are deterministic.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t row = 0;
        for (size_t col = 0; col < cols_ && row < rows_; ++col) {
            size_t sel = row;
            while (sel < rows_ && is_zero(at(sel, col))) ++sel;
            if (sel == rows_) continue;
            if (sel != row)
                for (size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
            K inv = K(1) / at(row, col);
            for (size_t c = col; c < cols_; ++c) at(row, c) = at(row, c) * inv;
            for (size_t r = 0; r < rows_; ++r) {
                if (r == row || is_zero(at(r, col))) continue;
                K factor = at(r, col);
                for (size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<K> a_;
};

template <class K>
size_t rank(Matrix<K> m) {
    return m.rref().size();
}

/// Basis of the right kernel {x : M x = 0}, one vector per free column,
/// in ascending free-column order.
template <class K>
std::vector<std::vector<K>> kernel_basis(Matrix<K> m) {
    size_t n = m.cols();
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> out;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<K> v(n, K(0));
        v[free_col] = K(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free_col);
        out.push_back(std::move(v));
    }
    return out;
}

/// One solution of M x = b with free variables set to zero, or nullopt when
/// the system is inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& m, const std::vector<K>& b) {
    if (b.size() != m.rows()) throw internal_error("rhs size mismatch in solve");
    Matrix<K> aug(m.rows(), m.cols() + 1);
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    std::vector<size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<K> x(m.cols(), K(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols());
    return x;
}

/// Row-space accumulator used for independence tests and representative
/// extraction: rows are kept in reduced echelon form.
template <class K>
class RowSpace {
public:
    explicit RowSpace(size_t dim) : dim_(dim) {}

    size_t rank() const { return rows_.size(); }

    /// Reduce v against the current rows; the remainder is independent of the
    /// span (zero iff v is in the span).
    std::vector<K> remainder(std::vector<K> v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const K& lead = v[pivot_[i]];
            if (!is_zero(lead)) {
                K f = lead;
                for (size_t c = 0; c < dim_; ++c) v[c] -= f * rows_[i][c];
            }
        }
        return v;
    }

    bool contains(const std::vector<K>& v) const {
        auto r = remainder(v);
        for (const K& x : r)
            if (!is_zero(x)) return false;
        return true;
    }

    /// Insert v if independent; returns true when the rank grew.
    bool insert(const std::vector<K>& v) {
        std::vector<K> r = remainder(v);
        size_t p = 0;
        while (p < dim_ && is_zero(r[p])) ++p;
        if (p == dim_) return false;
        K inv = K(1) / r[p];
        for (size_t c = 0; c < dim_; ++c) r[c] = r[c] * inv;
        for (size_t i = 0; i < rows_.size(); ++i) {
            K f = rows_[i][p];
            if (is_zero(f)) continue;
            for (size_t c = 0; c < dim_; ++c) rows_[i][c] -= f * r[c];
        }
        rows_.push_back(std::move(r));
        pivot_.push_back(p);
        // keep rows ordered by pivot for determinism
        for (size_t i = rows_.size(); i-- > 1;) {
            if (pivot_[i] < pivot_[i - 1]) {
                std::swap(pivot_[i], pivot_[i - 1]);
                std::swap(rows_[i], rows_[i - 1]);
            } else {
                break;
            }
        }
        return true;
    }

private:
    size_t dim_;
    std::vector<std::vector<K>> rows_;
    std::vector<size_t> pivot_;
};

} // namespace linfty
