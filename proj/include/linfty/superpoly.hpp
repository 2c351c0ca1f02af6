#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linfty/cochain.hpp"

namespace linfty {

/// Deformation parameter: even parameters commute, odd parameters square to
/// zero and anticommute.
struct Parameter {
    std::string name;
    Parity parity = Parity::Even;
};

class ParameterRegistry {
public:
    int add(const std::string& name, Parity parity) {
        params_.push_back({name, parity});
        return static_cast<int>(params_.size()) - 1;
    }
    const Parameter& at(int id) const { return params_.at(static_cast<size_t>(id)); }
    size_t size() const { return params_.size(); }
    const std::vector<Parameter>& all() const { return params_; }

    std::optional<int> find(const std::string& name) const {
        for (size_t i = 0; i < params_.size(); ++i)
            if (params_[i].name == name) return static_cast<int>(i);
        return std::nullopt;
    }

private:
    std::vector<Parameter> params_;
};

/// Monomial in the parameters: sorted even exponents and a sorted odd
/// subset (the canonical sign normalization orders odd factors by id).
struct ParamMonomial {
    std::vector<std::pair<int, int>> even; // (id, exponent >= 1), ascending id
    std::vector<int> odd;                  // ascending ids

    bool is_unit() const { return even.empty() && odd.empty(); }
    int degree() const {
        int d = static_cast<int>(odd.size());
        for (const auto& [id, e] : even) d += e;
        return d;
    }
    Parity parity() const { return odd.size() % 2 == 0 ? Parity::Even : Parity::Odd; }

    static ParamMonomial unit() { return {}; }
    static ParamMonomial variable(int id, Parity parity) {
        ParamMonomial m;
        if (parity == Parity::Even) m.even.push_back({id, 1});
        else m.odd.push_back(id);
        return m;
    }

    int exponent(int id) const {
        for (const auto& [i, e] : even)
            if (i == id) return e;
        for (int i : odd)
            if (i == id) return 1;
        return 0;
    }

    friend bool operator==(const ParamMonomial& a, const ParamMonomial& b) {
        return a.even == b.even && a.odd == b.odd;
    }

    /// Product with the Koszul sign of re-sorting the odd factors; nullopt
    /// when an odd parameter repeats.
    static std::optional<std::pair<ParamMonomial, int>> mul(const ParamMonomial& a,
                                                            const ParamMonomial& b) {
        ParamMonomial r;
        // merge even exponents
        size_t i = 0, j = 0;
        while (i < a.even.size() || j < b.even.size()) {
            if (j == b.even.size() || (i < a.even.size() && a.even[i].first < b.even[j].first))
                r.even.push_back(a.even[i++]);
            else if (i == a.even.size() || b.even[j].first < a.even[i].first)
                r.even.push_back(b.even[j++]);
            else {
                r.even.push_back({a.even[i].first, a.even[i].second + b.even[j].second});
                ++i;
                ++j;
            }
        }
        // merge odd ids, counting inversions
        int sign = 1;
        i = 0;
        j = 0;
        while (i < a.odd.size() || j < b.odd.size()) {
            if (j == b.odd.size() || (i < a.odd.size() && a.odd[i] < b.odd[j])) {
                r.odd.push_back(a.odd[i++]);
            } else if (i == a.odd.size() || b.odd[j] < a.odd[i]) {
                if ((a.odd.size() - i) % 2 == 1) sign = -sign;
                r.odd.push_back(b.odd[j++]);
            } else {
                return std::nullopt; // odd parameter squared
            }
        }
        return std::make_pair(std::move(r), sign);
    }

    bool divisible_by(const ParamMonomial& m) const {
        for (const auto& [id, e] : m.even)
            if (exponent(id) < e) return false;
        for (int id : m.odd)
            if (std::find(odd.begin(), odd.end(), id) == odd.end()) return false;
        return true;
    }

    /// this / m, valid when divisible_by(m).
    ParamMonomial quotient(const ParamMonomial& m) const {
        ParamMonomial r;
        for (const auto& [id, e] : even) {
            int sub = m.exponent(id);
            if (e - sub > 0) r.even.push_back({id, e - sub});
        }
        for (int id : odd)
            if (std::find(m.odd.begin(), m.odd.end(), id) == m.odd.end()) r.odd.push_back(id);
        return r;
    }

    std::string str(const ParameterRegistry& reg) const {
        if (is_unit()) return "1";
        std::string out;
        auto append = [&](const std::string& f) {
            if (!out.empty()) out += "*";
            out += f;
        };
        for (const auto& [id, e] : even) {
            append(reg.at(id).name + (e > 1 ? "^" + std::to_string(e) : ""));
        }
        for (int id : odd) append(reg.at(id).name);
        return out;
    }
};

/// Term order: degree first (ascending), then within a degree the monomial
/// with the higher exponent on the earliest parameter comes first. The
/// reduction head of a polynomial is the last monomial of its minimal-degree
/// block, matching power-series locality.
struct ParamMonomialOrder {
    bool operator()(const ParamMonomial& a, const ParamMonomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        // walk ids in ascending order; larger exponent first
        size_t ia = 0, ja = 0, ib = 0, jb = 0;
        while (true) {
            int next_a = next_id(a, ia, ja);
            int next_b = next_id(b, ib, jb);
            if (next_a == -1 && next_b == -1) return false; // equal
            if (next_a == -1) return false;
            if (next_b == -1) return true;
            if (next_a != next_b) return next_a < next_b; // earlier id first
            int ea = a.exponent(next_a), eb = b.exponent(next_b);
            if (ea != eb) return ea > eb;
            advance(a, ia, ja);
            advance(b, ib, jb);
        }
    }

private:
    static int next_id(const ParamMonomial& m, size_t i, size_t j) {
        int e = (i < m.even.size()) ? m.even[i].first : -1;
        int o = (j < m.odd.size()) ? m.odd[j] : -1;
        if (e == -1) return o;
        if (o == -1) return e;
        return std::min(e, o);
    }
    static void advance(const ParamMonomial& m, size_t& i, size_t& j) {
        int e = (i < m.even.size()) ? m.even[i].first : -1;
        int o = (j < m.odd.size()) ? m.odd[j] : -1;
        if (o == -1 || (e != -1 && e < o)) ++i;
        else ++j;
    }
};

/// Supercommutative polynomial in the registry's parameters over K.
template <class K>
class SuperPolynomial {
public:
    using Terms = std::map<ParamMonomial, K, ParamMonomialOrder>;

    SuperPolynomial() = default;
    explicit SuperPolynomial(const K& constant) { add_term(ParamMonomial::unit(), constant); }
    static SuperPolynomial variable(int id, Parity parity, const K& coeff = K(1)) {
        SuperPolynomial p;
        p.add_term(ParamMonomial::variable(id, parity), coeff);
        return p;
    }

    void add_term(const ParamMonomial& m, const K& coeff) {
        if (scalar_is_zero(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_parity_homogeneous() const {
        if (terms_.empty()) return true;
        Parity p = terms_.begin()->first.parity();
        for (const auto& [m, c] : terms_)
            if (m.parity() != p) return false;
        return true;
    }
    Parity parity() const {
        if (terms_.empty()) throw domain_error("parity of the zero polynomial is undefined");
        return terms_.begin()->first.parity();
    }

    SuperPolynomial operator-() const {
        SuperPolynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    SuperPolynomial& operator+=(const SuperPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SuperPolynomial& operator-=(const SuperPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
        SuperPolynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                auto prod = ParamMonomial::mul(ma, mb);
                if (!prod) continue;
                r.add_term(prod->first, ca * cb * K(prod->second));
            }
        return r;
    }
    SuperPolynomial scaled(const K& s) const {
        SuperPolynomial r;
        if (scalar_is_zero(s)) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, s * c);
        return r;
    }
    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SuperPolynomial& a, const SuperPolynomial& b) { return !(a == b); }

    SuperPolynomial truncated(int max_degree) const {
        SuperPolynomial r;
        for (const auto& [m, c] : terms_)
            if (m.degree() <= max_degree) r.terms_.emplace(m, c);
        return r;
    }

    int min_degree() const {
        if (terms_.empty()) throw domain_error("degree of the zero polynomial is undefined");
        return terms_.begin()->first.degree();
    }

    /// Reduction head: the last monomial of the minimal-degree block.
    const ParamMonomial& head() const {
        if (terms_.empty()) throw domain_error("head of the zero polynomial is undefined");
        int d = terms_.begin()->first.degree();
        auto it = terms_.begin();
        auto last = it;
        while (it != terms_.end() && it->first.degree() == d) last = it++;
        return last->first;
    }
    K head_coeff() const { return terms_.at(head()); }

    SuperPolynomial monic() const {
        if (is_zero()) return *this;
        return scaled(K(1) / head_coeff());
    }

    /// Evaluation at a point: odd parameters must be absent or sent to zero
    /// (terms containing odd factors vanish at any point of the base field).
    K evaluate(const std::vector<K>& values) const {
        K acc(0);
        for (const auto& [m, c] : terms_) {
            if (!m.odd.empty()) continue;
            K t = c;
            for (const auto& [id, e] : m.even)
                for (int k = 0; k < e; ++k) t *= values.at(static_cast<size_t>(id));
            acc += t;
        }
        return acc;
    }

    std::string str(const ParameterRegistry& reg) const;

private:
    Terms terms_;
};

template <class K>
std::string SuperPolynomial<K>::str(const ParameterRegistry& reg) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = to_string(c);
        bool negative = !cs.empty() && cs[0] == '-';
        std::string mag = negative ? cs.substr(1) : cs;
        std::string body;
        if (m.is_unit()) body = mag;
        else if (mag == "1") body = m.str(reg);
        else body = mag + "*" + m.str(reg);
        if (first) {
            out += (negative ? "-" : "") + body;
            first = false;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

/// Relation ideal with leading-term rewriting in the local order: heads are
/// taken at the low-degree end as in a power-series ring, tails rewrite
/// upward, and everything lives modulo parameter order > max_degree, which
/// bounds the rewriting universe. The rewriting set is saturated with
/// S-polynomials and odd-annihilator products so that reduce() is a true
/// normal form on the truncated ring.
template <class K>
class RelationIdeal {
public:
    explicit RelationIdeal(int max_degree = 64) : max_degree_(max_degree) {}

    int max_degree() const { return max_degree_; }

    /// Reduce then store monic; returns false when the generator dies.
    bool add(const SuperPolynomial<K>& p) {
        SuperPolynomial<K> r = reduce(p);
        if (r.is_zero()) return false;
        gens_.push_back(r.monic());
        completed_ = false;
        return true;
    }

    const std::vector<SuperPolynomial<K>>& generators() const { return gens_; }

    SuperPolynomial<K> reduce(const SuperPolynomial<K>& p) const {
        complete();
        return rewrite(p, basis_);
    }

private:
    static SuperPolynomial<K> rewrite_step(const SuperPolynomial<K>& r, const ParamMonomial& m,
                                           const K& c, const SuperPolynomial<K>& g, int cap) {
        ParamMonomial q = m.quotient(g.head());
        auto prod = ParamMonomial::mul(q, g.head());
        if (!prod) throw internal_error("quotient times head vanished");
        SuperPolynomial<K> qpoly;
        qpoly.add_term(q, c * K(prod->second));
        return (r - qpoly * g).truncated(cap);
    }

    SuperPolynomial<K> rewrite(const SuperPolynomial<K>& p,
                               const std::vector<SuperPolynomial<K>>& rules) const {
        SuperPolynomial<K> r = p.truncated(max_degree_);
        bool changed = true;
        while (changed && !r.is_zero()) {
            changed = false;
            for (const auto& g : rules) {
                const ParamMonomial& h = g.head();
                for (const auto& [m, c] : r.terms()) {
                    if (!m.divisible_by(h)) continue;
                    r = rewrite_step(r, m, c, g, max_degree_);
                    changed = true;
                    break;
                }
                if (changed) break;
            }
        }
        return r;
    }

    static ParamMonomial head_lcm(const ParamMonomial& a, const ParamMonomial& b) {
        ParamMonomial l;
        size_t i = 0, j = 0;
        while (i < a.even.size() || j < b.even.size()) {
            if (j == b.even.size() || (i < a.even.size() && a.even[i].first < b.even[j].first))
                l.even.push_back(a.even[i++]);
            else if (i == a.even.size() || b.even[j].first < a.even[i].first)
                l.even.push_back(b.even[j++]);
            else {
                l.even.push_back({a.even[i].first, std::max(a.even[i].second, b.even[j].second)});
                ++i;
                ++j;
            }
        }
        std::set_union(a.odd.begin(), a.odd.end(), b.odd.begin(), b.odd.end(),
                       std::back_inserter(l.odd));
        return l;
    }

    void complete() const {
        if (completed_) return;
        basis_.clear();
        for (const auto& g : gens_) {
            SuperPolynomial<K> r = rewrite(g, basis_);
            if (!r.is_zero()) basis_.push_back(r.monic());
        }
        // saturate: S-polynomials cancel matched heads; odd-annihilator
        // products expose tails whose head was killed by an odd square
        bool grew = true;
        int safety = 1000;
        while (grew) {
            if (--safety < 0) throw internal_error("relation ideal completion failed to stabilize");
            grew = false;
            size_t count = basis_.size();
            for (size_t i = 0; i < count && !grew; ++i) {
                for (size_t j = i; j < count && !grew; ++j) {
                    const ParamMonomial& hi = basis_[i].head();
                    const ParamMonomial& hj = basis_[j].head();
                    if (i != j) {
                        ParamMonomial l = head_lcm(hi, hj);
                        if (l.degree() > max_degree_) continue;
                        SuperPolynomial<K> qi, qj;
                        qi.add_term(l.quotient(hi), K(1));
                        qj.add_term(l.quotient(hj), K(1));
                        SuperPolynomial<K> ti = (qi * basis_[i]).truncated(max_degree_);
                        SuperPolynomial<K> tj = (qj * basis_[j]).truncated(max_degree_);
                        K ci = ti.is_zero() ? K(0) : ti.terms().count(l) ? ti.terms().at(l) : K(0);
                        K cj = tj.is_zero() ? K(0) : tj.terms().count(l) ? tj.terms().at(l) : K(0);
                        SuperPolynomial<K> spoly;
                        if (!scalar_is_zero(ci) && !scalar_is_zero(cj))
                            spoly = ti.scaled(K(1) / ci) - tj.scaled(K(1) / cj);
                        else
                            spoly = ti - tj; // at least one head vanished under the odd square
                        SuperPolynomial<K> r = rewrite(spoly, basis_);
                        if (!r.is_zero()) {
                            basis_.push_back(r.monic());
                            grew = true;
                        }
                    } else {
                        // annihilator products theta * g for odd theta in the head
                        for (int id : hi.odd) {
                            SuperPolynomial<K> theta;
                            theta.add_term(ParamMonomial::variable(id, Parity::Odd), K(1));
                            SuperPolynomial<K> prod = (theta * basis_[i]).truncated(max_degree_);
                            SuperPolynomial<K> r = rewrite(prod, basis_);
                            if (!r.is_zero()) {
                                basis_.push_back(r.monic());
                                grew = true;
                            }
                        }
                    }
                }
            }
        }
        completed_ = true;
    }

    int max_degree_;
    std::vector<SuperPolynomial<K>> gens_;
    mutable std::vector<SuperPolynomial<K>> basis_;
    mutable bool completed_ = false;
};

} // namespace linfty
