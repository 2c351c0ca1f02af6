#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linfty/cochain.hpp"
#include "linfty/rational.hpp"
#include "linfty/rational_function.hpp"

namespace linfty {

enum class LabelKind {
    Zero,
    Deg1FirstKind,
    Deg1SecondKind,
    Star,       // nilpotent matrix class, canonical ps[1,1,0;3]
    Sharp,      // non-diagonalizable tr^2 = 4 det class
    Family,     // diagonalizable class dt_c = ps[1,1,0;2] + c*ps[1,0,1;3]
    SecondRank1, // quadratic form of rank 1, canonical ps[0,2,0;1]
    SecondRank2, // quadratic form of rank 2, canonical ps[0,1,1;1]
};

/// Orbit label for canonical-form classification. Family carries the
/// conjugation invariant j = tr^2/det; when c is rational it also carries c,
/// normalized to |c| <= 1 under the c ~ 1/c identification.
struct CanonicalLabel {
    LabelKind kind = LabelKind::Zero;
    std::optional<Rational> c; // for Family when rational (j = (1+c)^2/c, or c = 0)
    std::optional<Rational> j; // for Family when c is irrational

    static CanonicalLabel zero() { return {LabelKind::Zero, {}, {}}; }
    static CanonicalLabel star() { return {LabelKind::Star, {}, {}}; }
    static CanonicalLabel sharp() { return {LabelKind::Sharp, {}, {}}; }
    static CanonicalLabel family_c(const Rational& c);
    static CanonicalLabel family_j(const Rational& j) { return {LabelKind::Family, {}, j}; }
    static CanonicalLabel second_rank1() { return {LabelKind::SecondRank1, {}, {}}; }
    static CanonicalLabel second_rank2() { return {LabelKind::SecondRank2, {}, {}}; }
    static CanonicalLabel deg1_first() { return {LabelKind::Deg1FirstKind, {}, {}}; }
    static CanonicalLabel deg1_second() { return {LabelKind::Deg1SecondKind, {}, {}}; }

    std::string str() const;
    static CanonicalLabel parse(const std::string& text);

    friend bool operator==(const CanonicalLabel& a, const CanonicalLabel& b);
    friend bool operator!=(const CanonicalLabel& a, const CanonicalLabel& b) { return !(a == b); }
    friend bool operator<(const CanonicalLabel& a, const CanonicalLabel& b);
};

/// Canonical representative of a label over the rationals. Family requires a
/// rational c.
Cochain<Rational> canonical_codifferential(const CanonicalLabel& label);

/// dt_c with the parameter taken symbolically in Q(c).
Cochain<RationalFunction> canonical_family_symbolic();

/// Parameter regimes of the one-parameter family dt_c that change the
/// cohomology pattern.
enum class FamilyRegime {
    Generic,
    One,            // c = 1
    Zero,           // c = 0
    IntegerRecip,   // 1/c = m >= 2 a positive integer
    Integer,        // c = m >= 2 a positive integer
    NegativeRational,
};

struct RegimeInfo {
    FamilyRegime regime = FamilyRegime::Generic;
    long m = 0;         // for the integer regimes
    long r = 0, s = 0;  // c/(c-1) = r/s in lowest terms, for negative c
};

RegimeInfo detect_family_regime(const Rational& c);

/// Representative bases preferred for cohomology reports, per label and
/// degree; chosen to match the published canonical bases where one exists.
/// Candidates that fail validation fall back to echelon pivots downstream.
std::vector<Cochain<Rational>> preferred_representatives(const CanonicalLabel& label, int n);

} // namespace linfty
