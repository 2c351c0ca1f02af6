#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "linfty/multi_index.hpp"

namespace linfty {

/// Scalar zero test usable inside class templates regardless of member-name
/// shadowing.
template <class K>
inline bool scalar_is_zero(const K& x) { return x == K(0); }

/// Basis cochain phi^I_j of L_n = Hom(S^n(W), W), defined by
/// phi^I_j(w_J) = I! delta^I_J w_j. Odd basis cochains print as "ps",
/// even ones as "ph".
struct BasisCochain {
    MultiIndex index;
    int target = 1; // j in {1,2,3}; w1 is odd, w2 and w3 are even

    bool valid() const { return index.valid() && index.degree() >= 1 && target >= 1 && target <= 3; }
    int degree() const { return index.degree(); }
    Parity target_parity() const { return target == 1 ? Parity::Odd : Parity::Even; }
    Parity parity() const { return index.parity() + target_parity(); }

    /// Position in the canonical ordered basis of L_n (even block, then odd).
    int basis_position() const;

    friend bool operator==(const BasisCochain& a, const BasisCochain& b) {
        return a.index == b.index && a.target == b.target;
    }
    friend bool operator<(const BasisCochain& a, const BasisCochain& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.basis_position() < b.basis_position();
    }

    std::string str() const {
        const char* kind = (parity() == Parity::Odd) ? "ps" : "ph";
        return std::string(kind) + "[" + std::to_string(index.i1) + "," + std::to_string(index.i2) +
               "," + std::to_string(index.i3) + ";" + std::to_string(target) + "]";
    }
};

/// Canonical ordered basis of L_n: even block
///   ph[1,q,n-1-q;1] (q ascending), ph[0,p,n-p;2] (p descending), ph[0,p,n-p;3] (p descending),
/// then odd block
///   ps[1,q,n-1-q;2], ps[1,q,n-1-q;3] (q ascending), ps[0,p,n-p;1] (p descending).
std::vector<BasisCochain> basis_cochains(int n);
std::vector<BasisCochain> basis_cochains(int n, Parity parity);

/// Sparse cochain: finite linear combination of basis cochains over an exact
/// scalar field K. Zero coefficients are never stored.
template <class K>
class Cochain {
public:
    using Terms = std::map<BasisCochain, K>;

    Cochain() = default;
    Cochain(const BasisCochain& b, const K& coeff) { add_term(b, coeff); }

    static Cochain basis(const BasisCochain& b) { return Cochain(b, K(1)); }

    void add_term(const BasisCochain& b, const K& coeff) {
        if (!b.valid()) throw domain_error("invalid basis cochain " + b.str());
        if (scalar_is_zero(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(b, coeff);
        if (!inserted) {
            it->second += coeff;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    K coeff(const BasisCochain& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? K(0) : it->second;
    }

    Cochain& operator+=(const Cochain& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    Cochain& operator-=(const Cochain& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    Cochain operator-() const {
        Cochain r;
        for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
        return r;
    }
    friend Cochain operator*(const K& s, const Cochain& c) { return c.scaled(s); }
    Cochain scaled(const K& s) const {
        Cochain r;
        if (scalar_is_zero(s)) return r;
        for (const auto& [b, c] : terms_) r.terms_.emplace(b, s * c);
        return r;
    }

    friend bool operator==(const Cochain& a, const Cochain& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

    std::set<int> degrees() const {
        std::set<int> d;
        for (const auto& [b, c] : terms_) d.insert(b.degree());
        return d;
    }
    bool is_degree_homogeneous() const { return degrees().size() <= 1; }
    /// Word degree of a nonzero homogeneous cochain.
    int degree() const {
        auto d = degrees();
        if (d.size() != 1) throw domain_error("cochain is zero or not degree-homogeneous");
        return *d.begin();
    }
    Cochain degree_component(int n) const {
        Cochain r;
        for (const auto& [b, c] : terms_)
            if (b.degree() == n) r.terms_.emplace(b, c);
        return r;
    }

    bool is_parity_homogeneous() const {
        if (terms_.empty()) return true;
        Parity p = terms_.begin()->first.parity();
        for (const auto& [b, c] : terms_)
            if (b.parity() != p) return false;
        return true;
    }
    Parity parity() const {
        if (terms_.empty()) throw domain_error("parity of the zero cochain is undefined");
        if (!is_parity_homogeneous()) throw domain_error("cochain is not parity-homogeneous");
        return terms_.begin()->first.parity();
    }

    template <class K2>
    Cochain<K2> converted() const {
        Cochain<K2> r;
        for (const auto& [b, c] : terms_) r.add_term(b, K2(c));
        return r;
    }

private:
    Terms terms_;
};

} // namespace linfty
