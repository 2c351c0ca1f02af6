#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "linfty/cohomology.hpp"
#include "linfty/superpoly.hpp"

namespace linfty {

/// Cochain with supercommutative polynomial coefficients.
template <class K>
class SuperCochain {
public:
    using Terms = std::map<BasisCochain, SuperPolynomial<K>>;

    void add(const BasisCochain& b, const SuperPolynomial<K>& p) {
        if (p.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(b, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add_cochain(const Cochain<K>& c, const SuperPolynomial<K>& p) {
        for (const auto& [b, coeff] : c.terms()) add(b, p.scaled(coeff));
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SuperCochain truncated(int n_max, int param_max) const {
        SuperCochain r;
        for (const auto& [b, p] : terms_) {
            if (b.degree() > n_max) continue;
            r.add(b, p.truncated(param_max));
        }
        return r;
    }

    /// Substitute even parameter values (odd parameters evaluate to zero).
    Cochain<K> specialize(const std::vector<K>& values) const {
        Cochain<K> out;
        for (const auto& [b, p] : terms_) out.add_term(b, p.evaluate(values));
        return out;
    }

    friend bool operator==(const SuperCochain& a, const SuperCochain& b) {
        return a.terms_ == b.terms_;
    }

private:
    Terms terms_;
};

enum class DeformationStatus { Converged, Truncated };

inline std::string to_string(DeformationStatus s) {
    return s == DeformationStatus::Converged ? "converged" : "truncated";
}

template <class K>
struct DeformationState {
    int order = 1;
    SuperCochain<K> deformation;
    std::map<int, SuperPolynomial<K>> relations; // class index -> coefficient polynomial
    /// Constraints attached to cohomology classes above the degree cap.
    /// They carry no deformation parameters of their own but are genuine
    /// relations among the existing parameters and are required for the
    /// ideal to be closed at the caps.
    std::map<std::pair<int, int>, SuperPolynomial<K>> boundary_relations; // (degree, index)
};

template <class K>
struct MiniversalResult {
    DeformationStatus status = DeformationStatus::Converged;
    int order = 1;
    SuperCochain<K> deformation;
    std::vector<std::pair<int, SuperPolynomial<K>>> relations; // (class, monic), presentation order
    std::vector<std::pair<Cochain<K>, SuperPolynomial<K>>> boundary_relations;
};

/// Order-by-order construction of a miniversal deformation of a homogeneous
/// codifferential: start from the universal infinitesimal deformation, then
/// repeatedly split 1/2 [d^k, d^k] into cohomology coordinates (relations)
/// and coboundaries (corrections) until nothing new appears within the
/// truncation caps.
template <class K>
class DeformationEngine {
public:
    using Fixtures = std::function<std::vector<Cochain<K>>(int)>;

    DeformationEngine(const Cochain<K>& d, int n_max, int param_max, Fixtures fixtures = {})
        : calc_(d), n_max_(n_max), param_max_(param_max), fixtures_(fixtures) {
        if (n_max_ < 1) throw domain_error("deformation requires n_max >= 1");
        if (param_max_ < 1) throw domain_error("deformation requires a parameter-order cap >= 1");
        // Degree closure for the bracket: deformation terms of parameter
        // order p have cochain degree at most p*(n_max - 1) + base degree,
        // so nothing within the parameter cap ever leaves this range.
        n_ext_ = n_max_ + (param_max_ + 1) * std::max(n_max_ - 1, 1);
        int even_count = 0, odd_count = 0;
        for (int n = 1; n <= n_max_; ++n) {
            auto reps = calc_.cohomology_basis(n, fixtures ? fixtures(n) : std::vector<Cochain<K>>{});
            degree_class_begin_.push_back(static_cast<int>(classes_.size()));
            for (const auto& rep : reps) {
                Parity param_parity =
                    rep.parity() == Parity::Even ? Parity::Odd : Parity::Even;
                std::string name = param_parity == Parity::Even
                                       ? "t" + std::to_string(++even_count)
                                       : "h" + std::to_string(++odd_count);
                int id = registry_.add(name, param_parity);
                classes_.push_back(rep);
                class_param_.push_back(id);
                class_degree_.push_back(n);
            }
        }
        degree_class_begin_.push_back(static_cast<int>(classes_.size()));
    }

    const ParameterRegistry& registry() const { return registry_; }
    const std::vector<Cochain<K>>& classes() const { return classes_; }
    int parameter_of_class(size_t i) const { return class_param_.at(i); }
    const Cochain<K>& base() const { return calc_.codifferential(); }
    CoboundaryCalculus<K>& calculus() { return calc_; }

    /// Index of a cohomology class equal to the given cochain, for tests and
    /// report tooling.
    std::optional<size_t> find_class(const Cochain<K>& rep) const {
        for (size_t i = 0; i < classes_.size(); ++i)
            if (classes_[i] == rep) return i;
        return std::nullopt;
    }

    DeformationState<K> infinitesimal() const {
        DeformationState<K> st;
        st.order = 1;
        st.deformation.add_cochain(calc_.codifferential(), SuperPolynomial<K>(K(1)));
        for (size_t i = 0; i < classes_.size(); ++i) {
            auto p = SuperPolynomial<K>::variable(class_param_[i],
                                                  registry_.at(class_param_[i]).parity);
            st.deformation.add_cochain(classes_[i], p);
        }
        return st;
    }

    SuperCochain<K> half_square(const SuperCochain<K>& dd, int param_cap) {
        SuperCochain<K> out;
        K half = K(1) / K(2);
        for (const auto& [x, px] : dd.terms()) {
            for (const auto& [y, py] : dd.terms()) {
                const Cochain<K>& br = basis_bracket(x, y);
                if (br.is_zero()) continue;
                for (const auto& [mu, ca] : px.terms()) {
                    for (const auto& [nu, cb] : py.terms()) {
                        auto prod = ParamMonomial::mul(mu, nu);
                        if (!prod || prod->first.degree() > param_cap) continue;
                        K sign0 = (mu.parity() == Parity::Odd && y.parity() == Parity::Odd)
                                      ? K(-1)
                                      : K(1);
                        K coeff = half * sign0 * K(prod->second) * ca * cb;
                        if (scalar_is_zero(coeff)) continue;
                        SuperPolynomial<K> mono;
                        mono.add_term(prod->first, coeff);
                        for (const auto& [z, cz] : br.terms()) {
                            if (z.degree() > n_ext_) continue;
                            out.add(z, mono.scaled(cz));
                        }
                    }
                }
            }
        }
        return out;
    }

    struct StepResult {
        DeformationState<K> state;
        bool new_relations = false;
        bool new_corrections = false;
        bool had_noncocycle = false; // before reduction; order-1 steps must not
        bool changed() const { return new_relations || new_corrections; }
    };

    StepResult step(const DeformationState<K>& st) { return step_impl(st, param_max_, st.order + 1); }

    MiniversalResult<K> run() {
        DeformationState<K> st = infinitesimal();
        int safety = param_max_ + 8;
        while (true) {
            StepResult r = step(st);
            if (!r.changed()) break;
            st = std::move(r.state);
            if (--safety < 0) throw internal_error("deformation iteration failed to stabilize");
        }
        // the fixed point must satisfy Maurer-Cartan on the base ring
        SuperCochain<K> mc = maurer_cartan_residual(st);
        if (!mc.is_zero())
            throw internal_error("deformation fixed point violates the Maurer-Cartan identity");
        MiniversalResult<K> out;
        out.order = st.order;
        out.deformation = st.deformation;
        out.relations = presented_relations(st);
        for (const auto& [key, poly] : st.boundary_relations) {
            if (poly.is_zero()) continue;
            out.boundary_relations.push_back(
                {boundary_classes(key.first).at(static_cast<size_t>(key.second)), poly.monic()});
        }
        // probe one parameter order beyond the cap to distinguish a true
        // fixed point from a truncation artifact
        StepResult probe = step_impl(st, param_max_ + 1, 0);
        out.status =
            probe.changed() ? DeformationStatus::Truncated : DeformationStatus::Converged;
        return out;
    }

    /// Coefficient-wise normal form of 1/2 [d, d] modulo the recorded
    /// relations; zero certifies the Maurer-Cartan identity on the base.
    SuperCochain<K> maurer_cartan_residual(const DeformationState<K>& st) {
        RelationIdeal<K> ideal = build_ideal(st, param_max_);
        SuperCochain<K> b = half_square(st.deformation, param_max_);
        SuperCochain<K> out;
        for (const auto& [x, p] : b.terms()) out.add(x, ideal.reduce(p));
        return out;
    }

    RelationIdeal<K> build_ideal(const DeformationState<K>& st, int cap) const {
        RelationIdeal<K> ideal(cap);
        for (const auto& [idx, poly] : st.relations) {
            if (!poly.is_zero()) ideal.add(poly.monic());
        }
        for (const auto& [key, poly] : st.boundary_relations) {
            if (!poly.is_zero()) ideal.add(poly.monic());
        }
        return ideal;
    }

    std::vector<std::pair<int, SuperPolynomial<K>>> presented_relations(
        const DeformationState<K>& st) const {
        std::vector<std::pair<int, SuperPolynomial<K>>> rel;
        for (const auto& [idx, poly] : st.relations)
            if (!poly.is_zero()) rel.push_back({idx, poly.monic()});
        ParamMonomialOrder less;
        std::stable_sort(rel.begin(), rel.end(), [&](const auto& a, const auto& b) {
            const ParamMonomial& ma = a.second.terms().begin()->first;
            const ParamMonomial& mb = b.second.terms().begin()->first;
            if (less(ma, mb)) return true;
            if (less(mb, ma)) return false;
            return a.first < b.first;
        });
        return rel;
    }

private:
    StepResult step_impl(const DeformationState<K>& st, int param_cap, int enforce_limit) {
        StepResult result;
        result.state = st;
        SuperCochain<K> bracket_half = half_square(st.deformation, param_cap);

        // regroup per degree and parameter monomial (raw coefficients: the
        // relations are literally the cohomology coordinates of the bracket)
        std::map<int, std::map<ParamMonomial, Cochain<K>, ParamMonomialOrder>> grouped;
        for (const auto& [x, p] : bracket_half.terms())
            for (const auto& [m, c] : p.terms()) grouped[x.degree()][m].add_term(x, c);

        std::map<int, SuperPolynomial<K>> fresh;
        std::map<std::pair<int, int>, SuperPolynomial<K>> fresh_boundary;
        SuperCochain<K> corrections;
        SuperCochain<K> residue;
        for (auto& [n, by_monomial] : grouped) {
            bool boundary = n > n_max_;
            const std::vector<Cochain<K>>& reps =
                boundary ? boundary_classes(n) : classes_at_degree_ref(n);
            for (auto& [mu, v] : by_monomial) {
                if (!v.is_parity_homogeneous() || v.parity() != mu.parity())
                    throw internal_error("bracket coefficient with inconsistent parity");
                typename CoboundaryCalculus<K>::Decomposition dec;
                bool cocycle = true;
                try {
                    dec = calc_.decompose_cocycle(v, reps);
                } catch (const domain_error&) {
                    cocycle = false;
                }
                if (!cocycle) {
                    result.had_noncocycle = true;
                    SuperPolynomial<K> mono;
                    mono.add_term(mu, K(1));
                    residue.add_cochain(v, mono);
                    continue;
                }
                for (size_t i = 0; i < reps.size(); ++i) {
                    if (scalar_is_zero(dec.coords[i])) continue;
                    if (boundary) {
                        auto [it, ignored] =
                            fresh_boundary.try_emplace({n, static_cast<int>(i)});
                        it->second.add_term(mu, dec.coords[i]);
                    } else {
                        int base = degree_class_begin_[static_cast<size_t>(n - 1)];
                        auto [it, ignored] = fresh.try_emplace(base + static_cast<int>(i));
                        it->second.add_term(mu, dec.coords[i]);
                    }
                }
                if (!dec.coboundary_part.is_zero()) {
                    // cancel D(gamma) * mu by adding gamma_c * mu with
                    // gamma_c = -(-1)^{|mu|} gamma
                    Cochain<K> gamma_c = (mu.parity() == Parity::Odd) ? dec.gamma : -dec.gamma;
                    SuperPolynomial<K> mono;
                    mono.add_term(mu, K(1));
                    corrections.add_cochain(gamma_c, mono);
                }
            }
        }

        // the relations are replaced wholesale: lower orders are stable once
        // processed, higher steps extend them
        for (auto& [idx, poly] : fresh) {
            auto it = result.state.relations.find(idx);
            if (it == result.state.relations.end() || it->second != poly)
                result.new_relations = true;
        }
        for (auto& [idx, poly] : result.state.relations) {
            if (!poly.is_zero() && fresh.find(idx) == fresh.end()) result.new_relations = true;
        }
        result.state.relations = std::move(fresh);
        for (auto& [key, poly] : fresh_boundary) {
            auto it = result.state.boundary_relations.find(key);
            if (it == result.state.boundary_relations.end() || it->second != poly)
                result.new_relations = true;
        }
        for (auto& [key, poly] : result.state.boundary_relations) {
            if (!poly.is_zero() && fresh_boundary.find(key) == fresh_boundary.end())
                result.new_relations = true;
        }
        result.state.boundary_relations = std::move(fresh_boundary);

        // corrections whose coefficients die on the base ring are dropped;
        // survivors are applied raw so closed-form series stay visible
        RelationIdeal<K> updated = build_ideal(result.state, param_cap);
        SuperCochain<K> applied;
        for (const auto& [x, p] : corrections.terms()) {
            if (updated.reduce(p).is_zero()) continue;
            applied.add(x, p);
        }
        if (!applied.is_zero()) {
            result.new_corrections = true;
            for (const auto& [x, p] : applied.terms()) result.state.deformation.add(x, p);
        }

        // Residue terms at the order being processed must already be
        // explained by the recorded relations; higher-order residues are
        // deferred (they reduce once the intermediate orders' corrections
        // and refinements have entered the state, and the fixed point is
        // certified by the Maurer-Cartan check in run()).
        for (const auto& [x, p] : residue.terms()) {
            SuperPolynomial<K> rem = updated.reduce(p.truncated(enforce_limit));
            if (!rem.is_zero())
                throw internal_error(
                    "non-cocycle residue failed to reduce to zero modulo the relations: " +
                    x.str() + " : " + rem.str(registry_));
        }

        if (result.changed()) result.state.order = st.order + 1;
        return result;
    }

    const Cochain<K>& basis_bracket(const BasisCochain& a, const BasisCochain& b) {
        auto key = std::make_pair(a, b);
        auto it = bracket_memo_.find(key);
        if (it != bracket_memo_.end()) return it->second;
        Cochain<K> br = bracket(Cochain<K>::basis(a), Cochain<K>::basis(b));
        return bracket_memo_.emplace(key, std::move(br)).first->second;
    }

    std::vector<Cochain<K>> classes_at_degree(int n) const {
        std::vector<Cochain<K>> reps;
        if (n < 1 || n > n_max_) return reps;
        int begin = degree_class_begin_[static_cast<size_t>(n - 1)];
        int end = degree_class_begin_[static_cast<size_t>(n)];
        for (int i = begin; i < end; ++i) reps.push_back(classes_[static_cast<size_t>(i)]);
        return reps;
    }

    const std::vector<Cochain<K>>& classes_at_degree_ref(int n) {
        auto it = class_cache_.find(n);
        if (it != class_cache_.end()) return it->second;
        return class_cache_.emplace(n, classes_at_degree(n)).first->second;
    }

    /// True cohomology representatives above the degree cap; they receive
    /// relation constraints but no deformation parameters.
    const std::vector<Cochain<K>>& boundary_classes(int n) {
        auto it = boundary_cache_.find(n);
        if (it != boundary_cache_.end()) return it->second;
        auto reps = calc_.cohomology_basis(n, fixtures_ ? fixtures_(n) : std::vector<Cochain<K>>{});
        return boundary_cache_.emplace(n, std::move(reps)).first->second;
    }

    CoboundaryCalculus<K> calc_;
    int n_max_;
    int n_ext_ = 0;
    int param_max_;
    Fixtures fixtures_;
    ParameterRegistry registry_;
    std::map<int, std::vector<Cochain<K>>> class_cache_;
    std::map<int, std::vector<Cochain<K>>> boundary_cache_;
    std::vector<Cochain<K>> classes_;
    std::vector<int> class_param_;
    std::vector<int> class_degree_;
    std::vector<int> degree_class_begin_;
    std::map<std::pair<BasisCochain, BasisCochain>, Cochain<K>> bracket_memo_;
};

} // namespace linfty
