#include "linfty/classify.hpp"

#include "linfty/bracket.hpp"

namespace linfty {

using classify_detail::lift;
using classify_detail::Mat2;
using classify_detail::qe;
using classify_detail::rational_sqrt;
using classify_detail::verify_witness;

namespace {

Rational coeff_of(const Cochain<Rational>& d, int i1, int i2, int i3, int j) {
    return d.coeff(BasisCochain{MultiIndex{i1, i2, i3}, j});
}

/// Witness block conjugating the canonical nilpotent [[0,0],[1,0]] to a
/// nonzero nilpotent N: with P = [v | N v] for v outside ker N one has
/// P^{-1} N P = N_can, so the block P^{-1} pulls N_can back to N.
Mat2<Rational> nilpotent_block(const Mat2<Rational>& N) {
    Rational v1, v2;
    if (!N.a.is_zero() || !N.c.is_zero()) { v1 = Rational(1); v2 = Rational(0); }
    else { v1 = Rational(0); v2 = Rational(1); }
    Rational w1 = N.a * v1 + N.b * v2;
    Rational w2 = N.c * v1 + N.d * v2;
    Rational det = v1 * w2 - w1 * v2;
    if (det.is_zero()) throw internal_error("nilpotent conjugation produced a singular frame");
    Rational inv = det.reciprocal();
    return Mat2<Rational>{w2 * inv, -w1 * inv, -v2 * inv, v1 * inv}; // P^{-1}
}

/// Witness from an eigenvector frame: with V = [v1 | v2] and
/// M = V diag(l1, l2) V^{-1}, the automorphism (q, block) = (l1, V^{-1})
/// pulls the canonical diag(1, l2/l1) back to M.
template <class K>
LinearAutomorphism<K> eigenframe_witness(const K& l1, const K& v1x, const K& v1y, const K& v2x,
                                         const K& v2y) {
    K det = v1x * v2y - v2x * v1y;
    if (is_zero(det)) throw internal_error("eigenvector frame is singular");
    K inv = K(1) / det;
    return LinearAutomorphism<K>{l1, v2y * inv, -v2x * inv, -v1y * inv, v1x * inv};
}

Cochain<QuadExt> family_canonical_ext(const QuadExt& cval) {
    Cochain<QuadExt> d;
    d.add_term(BasisCochain{MultiIndex{1, 1, 0}, 2}, QuadExt(1));
    d.add_term(BasisCochain{MultiIndex{1, 0, 1}, 3}, cval);
    return d;
}

Classification family_with_distinct_eigenvalues(const Rational& x, const Rational& a,
                                                const Rational& b, const Rational& c) {
    Rational tr = x + c;
    Rational det = x * c - a * b;
    Rational disc = tr * tr - Rational(4) * det;
    Rational j = tr * tr / det;
    Classification result;
    // the family parameter is rational iff j(j-4) is a rational square,
    // independently of whether the eigenvalues themselves are rational
    auto jj4 = rational_sqrt(j * (j - Rational(4)));
    if (jj4) {
        Rational c1 = ((j - Rational(2)) + *jj4) / Rational(2);
        Rational c2 = ((j - Rational(2)) - *jj4) / Rational(2);
        result.label = CanonicalLabel::family_c(c1.abs() <= Rational(1) ? c1 : c2);
    } else {
        result.label = CanonicalLabel::family_j(j);
        Rational lin = Rational(2) - j;
        result.note = "family parameter satisfies c^2 + (" + lin.str() + ")*c + 1 = 0";
    }
    auto sq = rational_sqrt(disc);
    if (sq) {
        Rational l1 = (tr + *sq) / Rational(2);
        Rational l2 = (tr - *sq) / Rational(2);
        // normalize the family parameter to |c| <= 1 by ordering eigenvalues
        if ((l2 / l1).abs() > Rational(1)) std::swap(l1, l2);
        auto eigvec = [&](const Rational& l, Rational& vx, Rational& vy) {
            if (!b.is_zero()) { vx = b; vy = l - x; }
            else if (!a.is_zero()) { vx = l - c; vy = a; }
            else { // diagonal matrix: eigenvectors are the axes
                vx = (x == l) ? Rational(1) : Rational(0);
                vy = (x == l) ? Rational(0) : Rational(1);
            }
        };
        Rational v1x, v1y, v2x, v2y;
        eigvec(l1, v1x, v1y);
        eigvec(l2, v2x, v2y);
        auto g = eigenframe_witness(l1, v1x, v1y, v2x, v2y);
        result.witness = lift(g.q, g.r, g.t, g.s, g.u);
        result.witness_rational = true;
        result.canonical_ext = family_canonical_ext(qe(l2 / l1));
        return result;
    }
    // irrational eigenvalues: witness over Q(sqrt(disc))
    QuadExt root = QuadExt::sqrt_of(disc);
    QuadExt l1 = (qe(tr) + root) / QuadExt(2);
    QuadExt l2 = (qe(tr) - root) / QuadExt(2);
    QuadExt ratio = l2 / l1;
    if (result.label.c && ratio != qe(*result.label.c)) {
        std::swap(l1, l2);
        ratio = l2 / l1;
        if (ratio != qe(*result.label.c))
            throw internal_error("eigenvalue ratio does not match the family parameter");
    }
    auto eigvec = [&](const QuadExt& l, QuadExt& vx, QuadExt& vy) {
        if (!b.is_zero()) { vx = qe(b); vy = l - qe(x); }
        else if (!a.is_zero()) { vx = l - qe(c); vy = qe(a); }
        else throw internal_error("diagonal matrix cannot have irrational eigenvalues");
    };
    QuadExt v1x, v1y, v2x, v2y;
    eigvec(l1, v1x, v1y);
    eigvec(l2, v2x, v2y);
    result.witness = eigenframe_witness(l1, v1x, v1y, v2x, v2y);
    result.witness_rational = false;
    result.delta = disc;
    result.canonical_ext = family_canonical_ext(ratio);
    return result;
}

/// Fill the extension-field representative from the label when a branch has
/// not provided one (all rational-representative labels).
void finalize(Classification& result, const Cochain<Rational>& input) {
    if (result.canonical_ext.is_zero() && result.label.kind != LabelKind::Zero)
        result.canonical_ext = canonical_codifferential(result.label).converted<QuadExt>();
    verify_witness(result, input);
}

} // namespace

Classification classify_first_kind_deg2(const Rational& x, const Rational& a, const Rational& b,
                                        const Rational& c) {
    Cochain<Rational> input;
    input.add_term(BasisCochain{MultiIndex{1, 1, 0}, 2}, x);
    input.add_term(BasisCochain{MultiIndex{1, 1, 0}, 3}, a);
    input.add_term(BasisCochain{MultiIndex{1, 0, 1}, 2}, b);
    input.add_term(BasisCochain{MultiIndex{1, 0, 1}, 3}, c);

    Classification result;
    if (input.is_zero()) {
        result.label = CanonicalLabel::zero();
        result.witness = LinearAutomorphism<QuadExt>::identity();
        finalize(result, input);
        return result;
    }
    Mat2<Rational> M{x, b, a, c};
    Rational tr = M.tr();
    Rational det = M.det();
    if (det.is_zero() && tr.is_zero()) {
        result.label = CanonicalLabel::star();
        auto B = nilpotent_block(M);
        result.witness = lift(Rational(1), B.a, B.b, B.c, B.d);
    } else if (det.is_zero()) {
        // eigenvalues {tr, 0}; canonical representative has matrix diag(1, 0)
        result.label = CanonicalLabel::family_c(Rational(0));
        Rational v1x, v1y, v2x, v2y;
        if (!b.is_zero()) { v1x = b; v1y = tr - x; v2x = b; v2y = -x; }
        else if (!a.is_zero()) { v1x = tr - c; v1y = a; v2x = -c; v2y = a; }
        else if (x.is_zero()) { v1x = Rational(0); v1y = Rational(1); v2x = Rational(1); v2y = Rational(0); }
        else { v1x = Rational(1); v1y = Rational(0); v2x = Rational(0); v2y = Rational(1); }
        auto g = eigenframe_witness(tr, v1x, v1y, v2x, v2y);
        result.witness = lift(g.q, g.r, g.t, g.s, g.u);
    } else if (a.is_zero() && b.is_zero() && x == c) {
        result.label = CanonicalLabel::family_c(Rational(1));
        result.witness = lift(x, Rational(1), Rational(0), Rational(0), Rational(1));
    } else if (tr * tr == Rational(4) * det) {
        result.label = CanonicalLabel::sharp();
        Rational lam = tr / Rational(2);
        Rational inv = lam.reciprocal();
        Mat2<Rational> N{x * inv - Rational(1), b * inv, a * inv, c * inv - Rational(1)};
        auto B = nilpotent_block(N);
        result.witness = lift(lam, B.a, B.b, B.c, B.d);
    } else {
        result = family_with_distinct_eigenvalues(x, a, b, c);
    }
    finalize(result, input);
    return result;
}

Classification classify_second_kind_deg2(const Rational& a, const Rational& b, const Rational& c) {
    Cochain<Rational> input;
    input.add_term(BasisCochain{MultiIndex{0, 2, 0}, 1}, a);
    input.add_term(BasisCochain{MultiIndex{0, 1, 1}, 1}, b);
    input.add_term(BasisCochain{MultiIndex{0, 0, 2}, 1}, c);

    Classification result;
    // Gram matrix of d(w_i w_j) on the even generators
    Rational g11 = Rational(2) * a, g12 = b, g22 = Rational(2) * c;
    Rational det = g11 * g22 - g12 * g12;
    if (g11.is_zero() && g12.is_zero() && g22.is_zero()) {
        result.label = CanonicalLabel::zero();
        result.witness = LinearAutomorphism<QuadExt>::identity();
        finalize(result, input);
        return result;
    }
    if (det.is_zero()) {
        // rank 1: G = kappa v v^T; (1/q) P^T [[2,0],[0,0]] P = G with
        // first row of P equal to v and q = 2/kappa. Normalized so that the
        // canonical input gets the identity witness.
        result.label = CanonicalLabel::second_rank1();
        Rational v1, v2, kappa;
        if (!g11.is_zero()) { v1 = Rational(1); v2 = g12 / g11; kappa = g11; }
        else { v1 = Rational(0); v2 = Rational(1); kappa = g22; } // g12 = 0 when rank 1 and g11 = 0
        Rational q = Rational(2) / kappa;
        Rational w1 = v1.is_zero() ? Rational(1) : Rational(0);
        Rational w2 = v1.is_zero() ? Rational(0) : Rational(1);
        result.witness = lift(q, v1, v2, w1, w2);
    } else {
        // rank 2: scale the hyperbolic plane onto the split-off-square form
        result.label = CanonicalLabel::second_rank2();
        if (g11.is_zero() && g22.is_zero()) {
            result.witness = lift(g12.reciprocal(), Rational(1), Rational(0), Rational(0), Rational(1));
        } else {
            bool swapped = g11.is_zero(); // work with the swapped matrix when the corner vanishes
            Rational h11 = swapped ? g22 : g11;
            Rational h12 = g12;
            Rational q = Rational(2) / h11;
            Rational beta2 = -det / (h11 * h11);
            Rational l = h12 / h11;
            auto beta = rational_sqrt(beta2);
            if (beta) {
                // P = [[1, l + beta], [1, l - beta]]
                Rational p11 = Rational(1), p12 = l + *beta;
                Rational p21 = Rational(1), p22 = l - *beta;
                if (swapped) { std::swap(p11, p12); std::swap(p21, p22); }
                result.witness = lift(q, p11, p12, p21, p22);
            } else {
                QuadExt bq = QuadExt::sqrt_of(beta2);
                QuadExt p11 = QuadExt(1), p12 = qe(l) + bq;
                QuadExt p21 = QuadExt(1), p22 = qe(l) - bq;
                if (swapped) { std::swap(p11, p12); std::swap(p21, p22); }
                result.witness = LinearAutomorphism<QuadExt>{qe(q), p11, p12, p21, p22};
                result.witness_rational = false;
                result.delta = beta2;
            }
        }
    }
    finalize(result, input);
    return result;
}

Classification classify_degree1(const Cochain<Rational>& d) {
    if (d.is_zero()) throw domain_error("degree-1 classification requires a nonzero codifferential");
    if (!d.is_degree_homogeneous() || d.degree() != 1)
        throw domain_error("expected a homogeneous degree-1 cochain");
    Kind kind = kind_of(d);
    if (kind == Kind::Mixed) throw domain_error("mixed-kind cochain is not a codifferential");
    Classification result;
    if (kind == Kind::FirstKind) {
        Rational a1 = coeff_of(d, 1, 0, 0, 2), a2 = coeff_of(d, 1, 0, 0, 3);
        result.label = CanonicalLabel::deg1_first();
        result.witness = lift(a1 * a1 + a2 * a2, a1, a2, -a2, a1);
    } else {
        Rational a1 = coeff_of(d, 0, 1, 0, 1), a2 = coeff_of(d, 0, 0, 1, 1);
        result.label = CanonicalLabel::deg1_second();
        result.witness = lift(Rational(1), a1, a2, -a2, a1);
    }
    finalize(result, d);
    return result;
}

Classification classify_deg2(const Cochain<Rational>& d) {
    if (d.is_zero()) {
        Classification result;
        result.label = CanonicalLabel::zero();
        result.witness = LinearAutomorphism<QuadExt>::identity();
        return result;
    }
    if (!d.is_degree_homogeneous() || d.degree() != 2)
        throw domain_error("expected a homogeneous degree-2 cochain");
    Kind kind = kind_of(d);
    if (kind == Kind::Mixed) throw domain_error("mixed-kind cochain is not a codifferential");
    if (kind == Kind::FirstKind)
        return classify_first_kind_deg2(coeff_of(d, 1, 1, 0, 2), coeff_of(d, 1, 1, 0, 3),
                                        coeff_of(d, 1, 0, 1, 2), coeff_of(d, 1, 0, 1, 3));
    return classify_second_kind_deg2(coeff_of(d, 0, 2, 0, 1), coeff_of(d, 0, 1, 1, 1),
                                     coeff_of(d, 0, 0, 2, 1));
}

std::vector<Cochain<Rational>> default_scan_directions() {
    std::vector<Cochain<Rational>> dirs;
    for (const auto& b : basis_cochains(2, Parity::Odd)) dirs.push_back(Cochain<Rational>::basis(b));
    return dirs;
}

std::set<CanonicalLabel> closeness_scan(const CanonicalLabel& label,
                                        const std::vector<Rational>& epsilons,
                                        const std::vector<Cochain<Rational>>& directions) {
    Cochain<Rational> base = canonical_codifferential(label);
    std::set<CanonicalLabel> reached;
    for (const auto& eps : epsilons) {
        for (const auto& dir : directions) {
            Cochain<Rational> candidate = base + dir.scaled(eps);
            if (!is_codifferential(candidate).ok) continue;
            reached.insert(classify_deg2(candidate).label);
        }
    }
    return reached;
}

} // namespace linfty
