#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linfty/bracket.hpp"
#include "linfty/linear_algebra.hpp"

namespace linfty {

struct ParityPair {
    long even = 0;
    long odd = 0;
    friend bool operator==(const ParityPair&, const ParityPair&) = default;
    std::string str() const { return std::to_string(even) + "|" + std::to_string(odd); }
};

/// Matrix of D = [ . , d] restricted to L_n, in the canonical bases of L_n
/// and L_{n+N-1} where N is the degree of d.
template <class K>
struct CoboundaryMatrix {
    int source_degree = 0;
    int target_degree = 0;
    Matrix<K> matrix;
};

/// Exact cohomology of a homogeneous odd codifferential d. Caches the
/// parity-split coboundary matrices per degree; everything downstream
/// (kernels, images, representatives, preimages, cocycle decompositions)
/// reads from the cache. All choices are pivot-deterministic.
template <class K>
class CoboundaryCalculus {
public:
    explicit CoboundaryCalculus(Cochain<K> d) : d_(std::move(d)) {
        auto check = is_codifferential(d_);
        if (!check.ok)
            throw domain_error("not a codifferential: " +
                               (check.reason.empty() ? std::string("[d,d] != 0") : check.reason));
        if (d_.is_zero()) throw domain_error("cohomology of the zero codifferential is not defined");
        if (!d_.is_degree_homogeneous())
            throw domain_error("cohomology requires a degree-homogeneous codifferential");
        degree_ = d_.degree();
    }

    const Cochain<K>& codifferential() const { return d_; }
    int codifferential_degree() const { return degree_; }

    Cochain<K> coboundary(const Cochain<K>& x) const { return bracket(x, d_); }

    CoboundaryMatrix<K> coboundary_matrix(int n) {
        if (n < 1) throw domain_error("empty word degree");
        int t = n + degree_ - 1;
        auto tgt = basis_cochains(t);
        std::map<BasisCochain, size_t> tpos;
        for (size_t i = 0; i < tgt.size(); ++i) tpos.emplace(tgt[i], i);
        auto src = basis_cochains(n);
        Matrix<K> m(tgt.size(), src.size());
        for (size_t c = 0; c < src.size(); ++c) {
            Cochain<K> image = bracket(Cochain<K>::basis(src[c]), d_);
            for (const auto& [b, coeff] : image.terms()) m.at(tpos.at(b), c) = coeff;
        }
        return CoboundaryMatrix<K>{n, t, std::move(m)};
    }

    /// Kernel dimensions of D on L_n, split by source parity.
    ParityPair cocycle_dimensions(int n) {
        return {static_cast<long>(block(n, Parity::Even).kernel.size()),
                static_cast<long>(block(n, Parity::Odd).kernel.size())};
    }

    /// Image dimensions of D on L_n, split by the parity of the image
    /// vectors (opposite to the sources).
    ParityPair image_dimensions(int n) {
        return {static_cast<long>(block(n, Parity::Odd).rank),
                static_cast<long>(block(n, Parity::Even).rank)};
    }

    ParityPair cohomology_dimensions(int n) {
        ParityPair z = cocycle_dimensions(n);
        ParityPair b = boundary_dimensions_into(n);
        return {z.even - b.even, z.odd - b.odd};
    }

    std::vector<Cochain<K>> cocycles(int n) {
        std::vector<Cochain<K>> out;
        for (Parity p : {Parity::Even, Parity::Odd}) {
            const Block& bl = block(n, p);
            for (const auto& v : bl.kernel) out.push_back(from_vector(bl.source, v));
        }
        return out;
    }

    /// Basis of the coboundary space inside L_n.
    std::vector<Cochain<K>> coboundaries_into(int n) {
        std::vector<Cochain<K>> out;
        int s = n - degree_ + 1;
        if (s < 1) return out;
        for (Parity p : {Parity::Even, Parity::Odd}) {
            const Block& bl = block(s, p);
            for (const auto& v : bl.image_rows) out.push_back(from_vector(bl.target, v));
        }
        return out;
    }

    /// Representatives of H^n: preferred candidates first (validated as
    /// cocycles independent modulo coboundaries), then echelon-pivot fills.
    std::vector<Cochain<K>> cohomology_basis(int n, const std::vector<Cochain<K>>& preferred = {}) {
        std::vector<Cochain<K>> reps;
        std::map<Parity, RowSpace<K>> span;
        for (Parity p : {Parity::Even, Parity::Odd}) {
            const Block& bl = block(n, p);
            RowSpace<K> rs(bl.source.size());
            int s = n - degree_ + 1;
            if (s >= 1) {
                const Block& srcbl = block(s, opposite(p));
                for (const auto& v : srcbl.image_rows) rs.insert(v);
            }
            span.emplace(p, std::move(rs));
        }
        auto try_add = [&](const Cochain<K>& cand) {
            if (cand.is_zero()) return false;
            if (!cand.is_parity_homogeneous() || !cand.is_degree_homogeneous()) return false;
            if (cand.degree() != n) return false;
            Parity p = cand.parity();
            const Block& bl = block(n, p);
            std::vector<K> v = to_vector(bl.source, cand);
            if (v.empty()) return false;
            if (!is_cocycle_vector(bl, v)) return false;
            if (!span.at(p).insert(v)) return false;
            reps.push_back(cand);
            return true;
        };
        for (const auto& cand : preferred) try_add(cand);
        for (Parity p : {Parity::Even, Parity::Odd}) {
            const Block& bl = block(n, p);
            for (const auto& v : bl.kernel) {
                std::vector<K> rem = span.at(p).remainder(v);
                bool zero = true;
                for (const K& x : rem)
                    if (!is_zero(x)) { zero = false; break; }
                if (zero) continue;
                if (span.at(p).insert(rem)) reps.push_back(from_vector(bl.source, rem));
            }
        }
        return reps;
    }

    /// Solve D(gamma) = beta. NotACoboundary is a normal outcome, reported
    /// as nullopt.
    std::optional<Cochain<K>> preimage(const Cochain<K>& beta) {
        if (beta.is_zero()) return Cochain<K>();
        if (!beta.is_degree_homogeneous() || !beta.is_parity_homogeneous())
            throw domain_error("preimage requires a homogeneous cochain");
        int n = beta.degree();
        int s = n - degree_ + 1;
        if (s < 1) return std::nullopt;
        const Block& bl = block(s, opposite(beta.parity()));
        std::vector<K> rhs = to_vector(bl.target, beta);
        auto x = solve(bl.matrix, rhs);
        if (!x) return std::nullopt;
        return from_vector(bl.source, *x);
    }

    struct Decomposition {
        std::vector<K> coords;     // on the provided representative basis
        Cochain<K> gamma;          // D(gamma) = coboundary part
        Cochain<K> coboundary_part;
    };

    /// Express a cocycle as sum of representatives plus a coboundary. The
    /// coordinates are unique for a fixed representative basis; gamma is the
    /// pivot-deterministic particular preimage.
    Decomposition decompose_cocycle(const Cochain<K>& zeta, const std::vector<Cochain<K>>& reps) {
        Decomposition out;
        out.coords.assign(reps.size(), K(0));
        if (zeta.is_zero()) return out;
        if (!zeta.is_degree_homogeneous() || !zeta.is_parity_homogeneous())
            throw domain_error("cocycle decomposition requires a homogeneous cochain");
        int n = zeta.degree();
        Parity p = zeta.parity();
        const Block& bl = block(n, p);
        std::vector<K> target = to_vector(bl.source, zeta);
        if (!is_cocycle_vector(bl, target)) throw domain_error("not a cocycle");

        std::vector<size_t> rep_index;
        std::vector<std::vector<K>> cols;
        for (size_t i = 0; i < reps.size(); ++i) {
            const Cochain<K>& r = reps[i];
            if (r.is_zero() || r.degree() != n || r.parity() != p) continue;
            rep_index.push_back(i);
            cols.push_back(to_vector(bl.source, r));
        }
        int s = n - degree_ + 1;
        size_t gamma_dim = 0;
        const Block* src = nullptr;
        if (s >= 1) {
            src = &block(s, opposite(p));
            gamma_dim = src->source.size();
            for (size_t c = 0; c < gamma_dim; ++c) {
                std::vector<K> col(bl.source.size(), K(0));
                for (size_t r = 0; r < bl.source.size(); ++r) col[r] = src->matrix.at(r, c);
                cols.push_back(std::move(col));
            }
        }
        Matrix<K> system = Matrix<K>::from_columns(cols, bl.source.size());
        auto x = solve(system, target);
        if (!x) throw internal_error("cocycle failed to decompose over representatives + image");
        for (size_t i = 0; i < rep_index.size(); ++i) out.coords[rep_index[i]] = (*x)[i];
        if (src) {
            std::vector<K> g(gamma_dim, K(0));
            for (size_t c = 0; c < gamma_dim; ++c) g[c] = (*x)[rep_index.size() + c];
            out.gamma = from_vector(src->source, g);
            out.coboundary_part = bracket(out.gamma, d_);
        }
        return out;
    }

private:
    struct Block {
        std::vector<BasisCochain> source; // basis of (L_n)_p
        std::vector<BasisCochain> target; // basis of (L_{n+N-1})_{1-p}
        Matrix<K> matrix;                 // D restricted to the block
        std::vector<std::vector<K>> kernel;
        std::vector<std::vector<K>> image_rows; // echelonized image basis
        size_t rank = 0;
    };

    static Parity opposite(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

    const Block& block(int n, Parity p) {
        if (n < 1) throw domain_error("empty word degree");
        auto key = std::make_pair(n, p);
        auto it = blocks_.find(key);
        if (it != blocks_.end()) return it->second;
        Block bl;
        bl.source = basis_cochains(n, p);
        bl.target = basis_cochains(n + degree_ - 1, opposite(p));
        std::map<BasisCochain, size_t> tpos;
        for (size_t i = 0; i < bl.target.size(); ++i) tpos.emplace(bl.target[i], i);
        bl.matrix = Matrix<K>(bl.target.size(), bl.source.size());
        for (size_t c = 0; c < bl.source.size(); ++c) {
            Cochain<K> image = bracket(Cochain<K>::basis(bl.source[c]), d_);
            for (const auto& [b, coeff] : image.terms()) {
                auto pos = tpos.find(b);
                if (pos == tpos.end()) throw internal_error("coboundary image outside target basis");
                bl.matrix.at(pos->second, c) = coeff;
            }
        }
        bl.kernel = kernel_basis(bl.matrix);
        RowSpace<K> rows(bl.target.size());
        for (size_t c = 0; c < bl.source.size(); ++c) {
            std::vector<K> col(bl.target.size());
            for (size_t r = 0; r < bl.target.size(); ++r) col[r] = bl.matrix.at(r, c);
            rows.insert(col);
        }
        bl.rank = rows.rank();
        // store the echelonized image rows
        for (size_t c = 0; c < bl.source.size() && bl.image_rows.size() < bl.rank; ++c) {
            std::vector<K> col(bl.target.size());
            for (size_t r = 0; r < bl.target.size(); ++r) col[r] = bl.matrix.at(r, c);
            RowSpace<K> probe(bl.target.size());
            for (const auto& row : bl.image_rows) probe.insert(row);
            auto rem = probe.remainder(col);
            bool zero = true;
            for (const K& x : rem)
                if (!is_zero(x)) { zero = false; break; }
            if (!zero) bl.image_rows.push_back(rem);
        }
        return blocks_.emplace(key, std::move(bl)).first->second;
    }

    ParityPair boundary_dimensions_into(int n) {
        int s = n - degree_ + 1;
        if (s < 1) return {0, 0};
        return {static_cast<long>(block(s, Parity::Odd).rank),
                static_cast<long>(block(s, Parity::Even).rank)};
    }

    bool is_cocycle_vector(const Block& bl, const std::vector<K>& v) const {
        for (size_t r = 0; r < bl.target.size(); ++r) {
            K acc(0);
            for (size_t c = 0; c < bl.source.size(); ++c) acc += bl.matrix.at(r, c) * v[c];
            if (!is_zero(acc)) return false;
        }
        return true;
    }

    static std::vector<K> to_vector(const std::vector<BasisCochain>& basis, const Cochain<K>& c) {
        std::map<BasisCochain, size_t> pos;
        for (size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
        std::vector<K> v(basis.size(), K(0));
        for (const auto& [b, coeff] : c.terms()) {
            auto it = pos.find(b);
            if (it == pos.end()) return {};
            v[it->second] = coeff;
        }
        return v;
    }

    static Cochain<K> from_vector(const std::vector<BasisCochain>& basis, const std::vector<K>& v) {
        Cochain<K> out;
        for (size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], v[i]);
        return out;
    }

    Cochain<K> d_;
    int degree_ = 0;
    std::map<std::pair<int, Parity>, Block> blocks_;
};

/// Per-degree dimension and representative report.
template <class K>
struct DegreeReport {
    ParityPair z; // cocycle dimensions of L_n
    ParityPair b; // image dimensions of D on L_n
    ParityPair h; // cohomology dimensions, z_n minus boundaries into degree n
    std::vector<Cochain<K>> representatives;
};

template <class K>
struct CohomologyReport {
    int n_max = 0;
    std::map<int, DegreeReport<K>> degrees;
};

template <class K>
using RepresentativeSource = std::vector<Cochain<K>> (*)(int);

template <class K>
CohomologyReport<K> cohomology_report(CoboundaryCalculus<K>& calc, int n_max,
                                      const std::function<std::vector<Cochain<K>>(int)>& preferred = {}) {
    if (n_max < 1) throw domain_error("report requires n_max >= 1");
    CohomologyReport<K> report;
    report.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        DegreeReport<K> dr;
        dr.z = calc.cocycle_dimensions(n);
        dr.b = calc.image_dimensions(n);
        dr.h = calc.cohomology_dimensions(n);
        dr.representatives = calc.cohomology_basis(n, preferred ? preferred(n)
                                                                : std::vector<Cochain<K>>{});
        report.degrees.emplace(n, std::move(dr));
    }
    return report;
}

} // namespace linfty
