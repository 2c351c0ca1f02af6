#include "linfty/canonical.hpp"

#include <tuple>

namespace linfty {

namespace {

Cochain<Rational> term(int i1, int i2, int i3, int j, const Rational& coeff = Rational(1)) {
    return Cochain<Rational>(BasisCochain{MultiIndex{i1, i2, i3}, j}, coeff);
}

int kind_rank(LabelKind k) { return static_cast<int>(k); }

} // namespace

CanonicalLabel CanonicalLabel::family_c(const Rational& c) {
    CanonicalLabel l;
    l.kind = LabelKind::Family;
    Rational cc = c;
    if (cc.abs() > Rational(1)) cc = cc.reciprocal();
    l.c = cc;
    if (!cc.is_zero()) {
        Rational one(1);
        l.j = (one + cc) * (one + cc) / cc;
    }
    return l;
}

std::string CanonicalLabel::str() const {
    switch (kind) {
        case LabelKind::Zero: return "zero";
        case LabelKind::Deg1FirstKind: return "deg1-first";
        case LabelKind::Deg1SecondKind: return "deg1-second";
        case LabelKind::Star: return "star";
        case LabelKind::Sharp: return "sharp";
        case LabelKind::SecondRank1: return "second-rank1";
        case LabelKind::SecondRank2: return "second-rank2";
        case LabelKind::Family:
            if (c) return "family(c=" + c->str() + ")";
            return "family(j=" + j->str() + ")";
    }
    return "zero";
}

CanonicalLabel CanonicalLabel::parse(const std::string& text) {
    if (text == "zero") return zero();
    if (text == "star") return star();
    if (text == "sharp") return sharp();
    if (text == "second-rank1") return second_rank1();
    if (text == "second-rank2") return second_rank2();
    if (text == "deg1-first") return deg1_first();
    if (text == "deg1-second") return deg1_second();
    auto inner = [&](const std::string& prefix) -> std::optional<std::string> {
        if (text.size() > prefix.size() + 1 && text.compare(0, prefix.size(), prefix) == 0 &&
            text.back() == ')')
            return text.substr(prefix.size(), text.size() - prefix.size() - 1);
        return std::nullopt;
    };
    if (auto v = inner("family(c=")) return family_c(Rational::parse(*v));
    if (auto v = inner("family(j=")) return family_j(Rational::parse(*v));
    throw parse_error("unknown canonical label '" + text + "'");
}

bool operator==(const CanonicalLabel& a, const CanonicalLabel& b) {
    if (a.kind != b.kind) return false;
    if (a.kind != LabelKind::Family) return true;
    if (a.c && b.c) return *a.c == *b.c;
    if (!a.c && !b.c) return *a.j == *b.j;
    return false;
}

bool operator<(const CanonicalLabel& a, const CanonicalLabel& b) {
    if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind);
    if (a.kind != LabelKind::Family) return false;
    // rational-c labels sort before j-only labels
    auto key = [](const CanonicalLabel& l) {
        return l.c ? std::make_tuple(0, *l.c) : std::make_tuple(1, *l.j);
    };
    return key(a) < key(b);
}

Cochain<Rational> canonical_codifferential(const CanonicalLabel& label) {
    switch (label.kind) {
        case LabelKind::Zero: return {};
        case LabelKind::Deg1FirstKind: return term(1, 0, 0, 2);
        case LabelKind::Deg1SecondKind: return term(0, 1, 0, 1);
        case LabelKind::Star: return term(1, 1, 0, 3);
        case LabelKind::Sharp: return term(1, 1, 0, 2) + term(1, 1, 0, 3) + term(1, 0, 1, 3);
        case LabelKind::SecondRank1: return term(0, 2, 0, 1);
        case LabelKind::SecondRank2: return term(0, 1, 1, 1);
        case LabelKind::Family:
            if (!label.c)
                throw domain_error("family label with irrational parameter has no rational representative");
            return term(1, 1, 0, 2) + term(1, 0, 1, 3, *label.c);
    }
    return {};
}

Cochain<RationalFunction> canonical_family_symbolic() {
    Cochain<RationalFunction> d;
    d.add_term(BasisCochain{MultiIndex{1, 1, 0}, 2}, RationalFunction(1));
    d.add_term(BasisCochain{MultiIndex{1, 0, 1}, 3}, RationalFunction::variable());
    return d;
}

RegimeInfo detect_family_regime(const Rational& c) {
    RegimeInfo info;
    if (c == Rational(1)) {
        info.regime = FamilyRegime::One;
        return info;
    }
    if (c.is_zero()) {
        info.regime = FamilyRegime::Zero;
        return info;
    }
    if (c.sign() < 0) {
        info.regime = FamilyRegime::NegativeRational;
        Rational ratio = c / (c - Rational(1)); // in (0,1), already in lowest terms
        info.r = Rational(ratio).numerator().get_si();
        info.s = Rational(ratio).denominator().get_si();
        return info;
    }
    if (c.is_integer() && c > Rational(1)) {
        info.regime = FamilyRegime::Integer;
        info.m = c.to_long();
        return info;
    }
    Rational rec = c.reciprocal();
    if (rec.is_integer() && rec > Rational(1)) {
        info.regime = FamilyRegime::IntegerRecip;
        info.m = rec.to_long();
        return info;
    }
    info.regime = FamilyRegime::Generic;
    return info;
}

namespace {

std::vector<Cochain<Rational>> family_generic_h1() {
    return {term(1, 0, 0, 2), term(1, 0, 0, 3), term(0, 1, 0, 2), term(0, 0, 1, 3)};
}

std::vector<Cochain<Rational>> family_representatives(const Rational& c, int n) {
    RegimeInfo info = detect_family_regime(c);
    if (n == 1) {
        auto h1 = family_generic_h1();
        if (info.regime == FamilyRegime::One) {
            h1.push_back(term(0, 0, 1, 2));
            h1.push_back(term(0, 1, 0, 3));
        }
        return h1;
    }
    switch (info.regime) {
        case FamilyRegime::Generic:
            return n == 2 ? std::vector<Cochain<Rational>>{term(1, 0, 1, 3)}
                          : std::vector<Cochain<Rational>>{};
        case FamilyRegime::One:
            return n == 2 ? std::vector<Cochain<Rational>>{term(1, 0, 1, 3), term(1, 0, 1, 2),
                                                           term(1, 1, 0, 3)}
                          : std::vector<Cochain<Rational>>{};
        case FamilyRegime::Zero:
            return {term(1, 0, n - 1, 3), term(0, 0, n, 3)};
        case FamilyRegime::IntegerRecip: {
            std::vector<Cochain<Rational>> reps;
            if (n == 2) reps.push_back(term(1, 0, 1, 3));
            if (n == static_cast<int>(info.m)) reps.push_back(term(0, 0, n, 2));
            if (n == static_cast<int>(info.m) + 1) reps.push_back(term(1, 0, n - 1, 2));
            return reps;
        }
        case FamilyRegime::Integer: {
            std::vector<Cochain<Rational>> reps;
            if (n == 2) reps.push_back(term(1, 0, 1, 3));
            if (n == static_cast<int>(info.m)) reps.push_back(term(0, n, 0, 3));
            if (n == static_cast<int>(info.m) + 1) reps.push_back(term(1, n - 1, 0, 3));
            return reps;
        }
        case FamilyRegime::NegativeRational: {
            std::vector<Cochain<Rational>> reps;
            if (n == 2) reps.push_back(term(1, 0, 1, 3));
            long r = info.r, s = info.s;
            if ((n - 1) % s == 0 && (n - 1) / s >= 1) {
                long k = (n - 1) / s;
                reps.push_back(term(0, static_cast<int>(k * r), static_cast<int>(k * (s - r) + 1), 3));
            }
            if ((n - 2) % s == 0 && (n - 2) / s >= 1) {
                long k = (n - 2) / s;
                reps.push_back(term(1, static_cast<int>(k * r), static_cast<int>(k * (s - r) + 1), 3));
            }
            return reps;
        }
    }
    return {};
}

} // namespace

std::vector<Cochain<Rational>> preferred_representatives(const CanonicalLabel& label, int n) {
    Rational rn(static_cast<long>(n));
    switch (label.kind) {
        case LabelKind::Star:
            if (n == 1)
                return {term(1, 0, 0, 2), term(1, 0, 0, 3), term(0, 1, 0, 3),
                        term(0, 0, 1, 3) + term(1, 0, 0, 1), term(0, 1, 0, 2) + term(0, 0, 1, 3)};
            return {term(1, 0, n - 1, 2), term(1, 0, n - 1, 3),
                    term(0, n, 0, 2) + term(0, n - 1, 1, 3),
                    term(0, 0, n, 3) + term(1, 0, n - 1, 1, rn)};
        case LabelKind::Sharp:
            if (n == 1)
                return {term(1, 0, 0, 2), term(1, 0, 0, 3), term(0, 1, 0, 3),
                        term(0, 1, 0, 2) + term(0, 0, 1, 3)};
            if (n == 2) return {term(1, 0, 1, 2)};
            return {};
        case LabelKind::Family:
            if (!label.c) return {};
            return family_representatives(*label.c, n);
        case LabelKind::SecondRank1:
            if (n == 1)
                return {term(0, 0, 1, 1), term(0, 1, 0, 1), term(0, 0, 1, 3), term(0, 1, 0, 3),
                        term(1, 0, 0, 1, Rational(2)) + term(0, 1, 0, 2)};
            return {term(0, 0, n, 1), term(0, 0, n, 3), term(0, 1, n - 1, 3),
                    term(1, 0, n - 1, 1, Rational(2)) + term(0, 1, n - 1, 2)};
        case LabelKind::SecondRank2:
            if (n == 1)
                return {term(0, 0, 1, 1), term(0, 1, 0, 1), term(1, 0, 0, 1) + term(0, 0, 1, 3),
                        term(1, 0, 0, 1) + term(0, 1, 0, 2)};
            return {term(1, 0, n - 1, 1) + term(0, 0, n, 3),
                    term(1, n - 1, 0, 1) + term(0, n, 0, 2)};
        default:
            return {};
    }
}

} // namespace linfty
