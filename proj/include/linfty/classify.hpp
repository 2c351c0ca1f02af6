#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linfty/automorphism.hpp"
#include "linfty/canonical.hpp"
#include "linfty/quadratic_ext.hpp"

namespace linfty {

/// Result of a canonical-form classification. The witness g, when present,
/// satisfies act(g, canonical representative) == input exactly; it is
/// machine-verified before being returned. Witnesses live over Q when
/// possible and over a single quadratic extension Q(sqrt(delta)) otherwise.
struct Classification {
    CanonicalLabel label;
    std::optional<LinearAutomorphism<QuadExt>> witness;
    bool witness_rational = true;
    Rational delta;     // discriminant, meaningful when !witness_rational
    std::string note;   // e.g. minimal polynomial of an irrational family parameter
    /// Representative the witness acts on. Coincides with the label's
    /// rational representative except for family labels with an irrational
    /// parameter, where it is dt_c over the quadratic extension.
    Cochain<QuadExt> canonical_ext;
};

namespace classify_detail {

inline QuadExt qe(const Rational& r) { return QuadExt(r); }

inline LinearAutomorphism<QuadExt> lift(const Rational& q, const Rational& r, const Rational& t,
                                        const Rational& s, const Rational& u) {
    return LinearAutomorphism<QuadExt>{qe(q), qe(r), qe(t), qe(s), qe(u)};
}

inline void verify_witness(const Classification& result, const Cochain<Rational>& input) {
    if (!result.witness) return;
    Cochain<QuadExt> reached = act(*result.witness, result.canonical_ext);
    if (reached != input.converted<QuadExt>())
        throw internal_error("classification witness failed verification for label " +
                             result.label.str());
}

/// Square root of a rational if it is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    if (x.is_zero()) return Rational(0);
    mpz_class num = x.numerator(), den = x.denominator();
    mpz_class sn, sd;
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(sn, sd));
}

// 2x2 matrices over a field, enough for the conjugation bookkeeping.
template <class K>
struct Mat2 {
    K a, b, c, d; // [[a, b], [c, d]]
    K det() const { return a * d - b * c; }
    K tr() const { return a + d; }
};

} // namespace classify_detail

/// Classification of nonzero degree-1 codifferentials: one class per kind.
Classification classify_degree1(const Cochain<Rational>& d);

/// Classification of the first-kind degree-2 codifferential
///   d = x ps[1,1,0;2] + a ps[1,1,0;3] + b ps[1,0,1;2] + c ps[1,0,1;3],
/// via the conjugation-and-scaling invariants of the matrix M = [[x,b],[a,c]]:
/// nilpotent nonzero -> star, det = 0 with trace != 0 -> family(c=0), scalar
/// -> family(c=1), non-diagonalizable with tr^2 = 4 det -> sharp, otherwise
/// family with invariant j = tr^2/det (c recovered when j(j-4) is a square).
Classification classify_first_kind_deg2(const Rational& x, const Rational& a, const Rational& b,
                                        const Rational& c);

/// Classification of the second-kind degree-2 codifferential
///   d = a ps[0,2,0;1] + b ps[0,1,1;1] + c ps[0,0,2;1]
/// by the congruence rank of the Gram matrix [[2a, b], [b, 2c]].
Classification classify_second_kind_deg2(const Rational& a, const Rational& b, const Rational& c);

/// Dispatch on the kind of a homogeneous degree-2 codifferential.
Classification classify_deg2(const Cochain<Rational>& d);

/// Classify canonical representative + eps * direction for every direction
/// and every eps; non-codifferential perturbations (mixed kind) are skipped.
std::set<CanonicalLabel> closeness_scan(const CanonicalLabel& label,
                                        const std::vector<Rational>& epsilons,
                                        const std::vector<Cochain<Rational>>& directions);

/// The degree-2 odd basis directions used by the default scan.
std::vector<Cochain<Rational>> default_scan_directions();

} // namespace linfty
