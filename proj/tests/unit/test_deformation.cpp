#include "doctest.h"

#include "linfty/canonical.hpp"
#include "linfty/deformation.hpp"
#include "linfty/io.hpp"

#include "test_helpers.hpp"

using namespace linfty;
using linfty::testing::term;

namespace {

using Poly = SuperPolynomial<Rational>;

struct Run {
    CanonicalLabel label;
    DeformationEngine<Rational> engine;
    MiniversalResult<Rational> result;

    Run(const CanonicalLabel& l, int n_max, int k_max)
        : label(l),
          engine(canonical_codifferential(l), n_max, k_max,
                 [l](int n) { return preferred_representatives(l, n); }),
          result(engine.run()) {}

    // parameter id of the class equal to the given cochain
    int pid(const Cochain<Rational>& cls) const {
        auto idx = engine.find_class(cls);
        REQUIRE(idx.has_value());
        return engine.parameter_of_class(*idx);
    }
    Poly var(int id) const {
        return Poly::variable(id, engine.registry().at(id).parity);
    }
    Poly prod(const Rational& coeff, std::initializer_list<int> ids) const {
        Poly p(coeff);
        for (int id : ids) p = p * var(id);
        return p;
    }

    std::vector<Poly> monic_relations() const {
        std::vector<Poly> out;
        for (const auto& [idx, poly] : result.relations) out.push_back(poly);
        return out;
    }

    /// Set equality of relation lists up to a scalar on each generator.
    void expect_relations(std::vector<Poly> expected) const {
        auto got = monic_relations();
        CAPTURE(got.size());
        CAPTURE(expected.size());
        REQUIRE(got.size() == expected.size());
        for (auto& e : expected) {
            Poly target = e.monic();
            bool found = false;
            for (auto& g : got) {
                if (g == target) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                CAPTURE(target.str(engine.registry()));
            }
            CHECK(found);
        }
    }

    /// Correction applied on top of the infinitesimal deformation.
    SuperCochain<Rational> correction() const {
        SuperCochain<Rational> delta;
        auto inf = engine.infinitesimal();
        for (const auto& [b, p] : result.deformation.terms()) {
            Poly d = p;
            auto it = inf.deformation.terms().find(b);
            if (it != inf.deformation.terms().end()) d -= it->second;
            if (!d.is_zero()) delta.add(b, d);
        }
        return delta;
    }

    /// Cochain attached to one parameter monomial inside the correction.
    Cochain<Rational> correction_at(const ParamMonomial& mu) const {
        Cochain<Rational> out;
        SuperCochain<Rational> corr = correction();
        for (const auto& [b, p] : corr.terms()) {
            auto it = p.terms().find(mu);
            if (it != p.terms().end()) out.add_term(b, it->second);
        }
        return out;
    }

    ParamMonomial mono(std::initializer_list<int> ids) const {
        ParamMonomial m = ParamMonomial::unit();
        for (int id : ids) {
            auto prod = ParamMonomial::mul(
                m, ParamMonomial::variable(id, engine.registry().at(id).parity));
            REQUIRE(prod.has_value());
            m = prod->first;
        }
        return m;
    }

    void check_parity_conservation() const {
        for (const auto& [b, p] : result.deformation.terms()) {
            for (const auto& [m, c] : p.terms()) {
                CHECK((b.parity() + m.parity()) == Parity::Odd);
            }
        }
    }
};

} // namespace

TEST_CASE("non-diagonalizable class: miniversal deformation") {
    Run run(CanonicalLabel::sharp(), 6, 4);
    CHECK(run.result.status == DeformationStatus::Converged);
    CHECK(run.result.order == 3);

    int t1 = run.pid(term(1, 0, 0, 2));
    int t2 = run.pid(term(1, 0, 0, 3));
    int h1 = run.pid(term(0, 1, 0, 3));
    int h2 = run.pid(term(0, 1, 0, 2) + term(0, 0, 1, 3));
    int t3 = run.pid(term(1, 0, 1, 2));
    CHECK(run.engine.registry().at(t1).name == "t1");
    CHECK(run.engine.registry().at(h1).name == "h1");
    CHECK(run.engine.registry().at(t3).name == "t3");

    run.expect_relations({
        run.prod(Rational(1), {t1, h1}) + run.prod(Rational(1), {t2, h2}),
        run.prod(Rational(1), {t1, h2}) + run.prod(Rational(1), {t2, t3, h1}),
    });
    CHECK(run.result.boundary_relations.empty());

    // the single correction cancels the coboundary forced by the bracket:
    // D(gamma) = ps[1,1,0;2] - ps[1,0,1;3], with gamma = ph[0,0,1;2] up to a
    // cocycle (here exactly)
    auto corr = run.correction();
    REQUIRE(corr.terms().size() == 1);
    auto gamma = run.correction_at(run.mono({t3, h1}));
    CHECK(gamma == term(0, 0, 1, 2));
    CHECK(bracket(gamma, run.engine.base()) == term(1, 1, 0, 2) - term(1, 0, 1, 3));

    run.check_parity_conservation();

    // specialization soundness: rational points with odd parameters at zero
    std::mt19937 rng(42);
    std::vector<Rational> values(run.engine.registry().size(), Rational(0));
    for (int trial = 0; trial < 20; ++trial) {
        values[static_cast<size_t>(t1)] = linfty::testing::random_rational(rng);
        values[static_cast<size_t>(t2)] = linfty::testing::random_rational(rng);
        values[static_cast<size_t>(t3)] = linfty::testing::random_rational(rng);
        auto specialized = run.result.deformation.specialize(values);
        CHECK(is_codifferential(specialized).ok);
    }
    // all parameters zero gives back the base codifferential
    std::vector<Rational> zero(run.engine.registry().size(), Rational(0));
    CHECK(run.result.deformation.specialize(zero) == run.engine.base());
}

TEST_CASE("generic family point: infinitesimal deformation is miniversal") {
    Run run(CanonicalLabel::family_c(Rational(2, 3)), 4, 4);
    CHECK(run.result.status == DeformationStatus::Converged);
    CHECK(run.result.order == 2);
    CHECK(run.correction().is_zero());

    int t1 = run.pid(term(1, 0, 0, 2));
    int t2 = run.pid(term(1, 0, 0, 3));
    int h1 = run.pid(term(0, 1, 0, 2));
    int h2 = run.pid(term(0, 0, 1, 3));
    run.expect_relations({
        run.prod(Rational(1), {t1, h1}),
        run.prod(Rational(1), {t2, h2}),
    });
}

TEST_CASE("symbolic family parameter deforms like a generic point") {
    Cochain<RationalFunction> d = canonical_family_symbolic();
    DeformationEngine<RationalFunction> engine(d, 4, 3);
    auto result = engine.run();
    CHECK(result.status == DeformationStatus::Converged);
    CHECK(result.order == 2);
    REQUIRE(result.relations.size() == 2);
    for (const auto& [idx, poly] : result.relations) CHECK(poly.terms().size() == 1);
}

TEST_CASE("family point c = 1: five published relations plus the even sector") {
    Run run(CanonicalLabel::family_c(Rational(1)), 4, 4);
    CHECK(run.result.status == DeformationStatus::Converged);
    CHECK(run.result.order == 2);
    CHECK(run.correction().is_zero()); // infinitesimal deformation is miniversal

    int t1 = run.pid(term(1, 0, 0, 2));
    int t2 = run.pid(term(1, 0, 0, 3));
    int h1 = run.pid(term(0, 1, 0, 2));
    int h2 = run.pid(term(0, 0, 1, 3));
    int h3 = run.pid(term(0, 0, 1, 2));
    int h4 = run.pid(term(0, 1, 0, 3));
    int t3 = run.pid(term(1, 0, 1, 3));
    int t4 = run.pid(term(1, 0, 1, 2));
    int t5 = run.pid(term(1, 1, 0, 3));

    // the five published generators
    std::vector<Poly> published = {
        run.prod(Rational(1), {t1, h1}) + run.prod(Rational(1), {t2, h3}),
        run.prod(Rational(1), {t2, h2}) + run.prod(Rational(1), {t1, h4}),
        run.prod(Rational(1), {t4, h4}) - run.prod(Rational(1), {t5, h3}),
        run.prod(Rational(1), {t3, h3}) + run.prod(Rational(1), {t4, h1}) -
            run.prod(Rational(1), {t4, h2}),
        run.prod(Rational(1), {t3, h4}) + run.prod(Rational(1), {t5, h1}) -
            run.prod(Rational(1), {t5, h2}),
    };
    // four even-sector generators the published list omits, forced by the
    // brackets of the H^1 classes with each other
    std::vector<Poly> even_sector = {
        run.prod(Rational(1), {h1, h3}) - run.prod(Rational(1), {h2, h3}),
        run.prod(Rational(1), {h1, h4}) - run.prod(Rational(1), {h2, h4}),
        run.prod(Rational(1), {h3, h4}),
        run.prod(Rational(1), {h3, h4}),
    };
    std::vector<Poly> expected = published;
    expected.insert(expected.end(), even_sector.begin(), even_sector.end());
    run.expect_relations(expected);
}

TEST_CASE("family point c = 1/2: closed-form correction series") {
    Run run(CanonicalLabel::family_c(Rational(1, 2)), 3, 4);
    CHECK(run.result.status == DeformationStatus::Truncated);
    CHECK(run.result.order == 4);

    int t1 = run.pid(term(1, 0, 0, 2));
    int t2 = run.pid(term(1, 0, 0, 3));
    int h1 = run.pid(term(0, 1, 0, 2));
    int h2 = run.pid(term(0, 0, 1, 3));
    int t3 = run.pid(term(1, 0, 1, 3));
    int h3 = run.pid(term(0, 0, 2, 2));
    int t4 = run.pid(term(1, 0, 2, 2));

    // correction on ph[0,0,1;2]: the geometric series
    // m^2 t^2 theta^3 / (1 - m(m-1) t^3) at m = 2, through order 4
    auto corr = run.correction();
    auto it = corr.terms().find(BasisCochain{MultiIndex{0, 0, 1}, 2});
    REQUIRE(it != corr.terms().end());
    Poly series = run.prod(Rational(4), {t2, h3}) + run.prod(Rational(8), {t2, t3, h3}) +
                  run.prod(Rational(16), {t2, t3, t3, h3});
    CHECK(it->second == series);

    run.expect_relations({
        // at m = 2 the degree-1 class ps[1,0,0;2] reappears at higher order,
        // so its relation extends beyond t1*h1
        run.prod(Rational(1), {t1, h1}) + run.prod(Rational(4), {t2, t2, h3}) +
            run.prod(Rational(8), {t2, t2, t3, h3}),
        run.prod(Rational(1), {t2, h2}),
        run.prod(Rational(1), {h1, h3}) - run.prod(Rational(2), {h2, h3}),
        run.prod(Rational(2), {t3, h3}) + run.prod(Rational(1), {t4, h1}) -
            run.prod(Rational(2), {t4, h2}),
    });
    run.check_parity_conservation();
}

TEST_CASE("family point c = 0: relation families of the degree-graded line") {
    Run run(CanonicalLabel::family_c(Rational(0)), 4, 4);
    CHECK(run.result.status == DeformationStatus::Converged);
    CHECK(run.result.order == 2);
    CHECK(run.correction().is_zero());

    int s = run.pid(term(1, 0, 0, 2));
    int eta = run.pid(term(0, 1, 0, 2));
    // psi_k = ps[1,0,k-1;3] with even parameter t^k, phi_k = ph[0,0,k;3]
    // with odd parameter theta^k
    std::vector<int> t(5, -1), h(5, -1);
    t[1] = run.pid(term(1, 0, 0, 3));
    h[1] = run.pid(term(0, 0, 1, 3));
    for (int k = 2; k <= 4; ++k) {
        t[static_cast<size_t>(k)] = run.pid(term(1, 0, k - 1, 3));
        h[static_cast<size_t>(k)] = run.pid(term(0, 0, k, 3));
    }

    std::vector<Poly> expected;
    expected.push_back(run.prod(Rational(1), {s, eta}));
    // psi_n-class: sum over k+l = n+1 of (k-l-1) t^k theta^l
    for (int n = 1; n <= 4; ++n) {
        Poly p;
        for (int k = 1; k <= 4; ++k) {
            int l = n + 1 - k;
            if (l < 1 || l > 4) continue;
            p += run.prod(Rational(k - l - 1), {t[static_cast<size_t>(k)], h[static_cast<size_t>(l)]});
        }
        if (!p.is_zero()) expected.push_back(p);
    }
    // phi_n-class: sum over k < l, k+l = n+1 of (k-l) theta^k theta^l
    for (int n = 1; n <= 4; ++n) {
        Poly p;
        for (int k = 1; k <= 4; ++k) {
            int l = n + 1 - k;
            if (l <= k || l > 4) continue;
            p += run.prod(Rational(k - l), {h[static_cast<size_t>(k)], h[static_cast<size_t>(l)]});
        }
        if (!p.is_zero()) expected.push_back(p);
    }
    run.expect_relations(expected);
    // boundary constraints continue the same families above the degree cap
    CHECK(!run.result.boundary_relations.empty());
}

TEST_CASE("negative rational family point c = -1") {
    Run run(CanonicalLabel::family_c(Rational(-1)), 5, 3);
    CHECK(run.result.status == DeformationStatus::Truncated);
    CHECK(run.result.order == 3);

    int s1 = run.pid(term(1, 0, 0, 2));
    int s2 = run.pid(term(1, 0, 0, 3));
    int eta1 = run.pid(term(0, 1, 0, 2));
    int th0 = run.pid(term(0, 0, 1, 3));
    int t0 = run.pid(term(1, 0, 1, 3));
    int th1 = run.pid(term(0, 1, 2, 3));
    int t1 = run.pid(term(1, 1, 2, 3));
    int th2 = run.pid(term(0, 2, 3, 3));

    run.expect_relations({
        run.prod(Rational(1), {s1, eta1}),
        run.prod(Rational(1), {s2, th0}),
        // psi_1-family: n r t^n eta^1 + (s-r) sum (k-l) t^k theta^l
        run.prod(Rational(1), {t1, eta1}) + run.prod(Rational(1), {t1, th0}) -
            run.prod(Rational(1), {t0, th1}),
        // phi_n-families
        run.prod(Rational(1), {eta1, th1}) + run.prod(Rational(1), {th0, th1}),
        run.prod(Rational(1), {eta1, th2}) + run.prod(Rational(1), {th0, th2}),
    });

    // second-order corrections: gamma_1 cancels [xi_1, phi_1] s^1 theta^1,
    // whose value is -ps[1,0,2;3]; epsilon_1 cancels [xi_2, phi_1] s^2
    // theta^1 with value -2 ps[1,1,1;3]. Verified modulo the preimage
    // choice by applying D to the engine's correction terms.
    auto g1 = run.correction_at(run.mono({s1, th1}));
    CHECK(bracket(g1, run.engine.base()) == term(1, 0, 2, 3).scaled(Rational(-1)));
    auto e1 = run.correction_at(run.mono({s2, th1}));
    CHECK(bracket(e1, run.engine.base()) == term(1, 1, 1, 3).scaled(Rational(-2)));
    run.check_parity_conservation();
}

TEST_CASE("second-kind rank-1 point: relation families") {
    Run run(CanonicalLabel::second_rank1(), 4, 2);
    CHECK(run.result.status == DeformationStatus::Truncated);
    CHECK(run.result.order == 2);

    // labels: xi has even parameter s1; psi_n even t^n; phi_n odd theta^n;
    // sigma_n odd eta^n; tau_n odd zeta^n
    int s1 = run.pid(term(0, 1, 0, 1));
    std::vector<int> t(5, -1), th(5, -1), eta(5, -1), ze(5, -1);
    for (int n = 1; n <= 4; ++n) {
        t[static_cast<size_t>(n)] = run.pid(term(0, 0, n, 1));
        th[static_cast<size_t>(n)] = run.pid(term(0, 0, n, 3));
        eta[static_cast<size_t>(n)] = run.pid(term(0, 1, n - 1, 3));
        ze[static_cast<size_t>(n)] =
            run.pid(term(1, 0, n - 1, 1, Rational(2)) + term(0, 1, n - 1, 2));
    }
    auto T = [&](int k) { return t[static_cast<size_t>(k)]; };
    auto TH = [&](int k) { return th[static_cast<size_t>(k)]; };
    auto ETA = [&](int k) { return eta[static_cast<size_t>(k)]; };
    auto ZE = [&](int k) { return ze[static_cast<size_t>(k)]; };

    std::vector<Poly> expected;
    // xi-class: -s1 zeta^1 + t^1 eta^1
    expected.push_back(run.prod(Rational(-1), {s1, ZE(1)}) + run.prod(Rational(1), {T(1), ETA(1)}));
    // psi_n-class: sum_{k+l=n+1} k t^k theta^l - 2 t^k zeta^l
    for (int n = 1; n <= 4; ++n) {
        Poly p;
        for (int k = 1; k <= 4; ++k) {
            int l = n + 1 - k;
            if (l < 1 || l > 4) continue;
            p += run.prod(Rational(k), {T(k), TH(l)});
            p += run.prod(Rational(-2), {T(k), ZE(l)});
        }
        if (!p.is_zero()) expected.push_back(p);
    }
    // phi_n-class: sum_{k<l} (k-l) theta^k theta^l
    for (int n = 2; n <= 4; ++n) {
        Poly p;
        for (int k = 1; k <= 4; ++k) {
            int l = n + 1 - k;
            if (l <= k || l > 4) continue;
            p += run.prod(Rational(k - l), {TH(k), TH(l)});
        }
        if (!p.is_zero()) expected.push_back(p);
    }
    // sigma_n-class: sum (k-l+1) theta^k eta^l + sum eta^k zeta^l
    for (int n = 1; n <= 4; ++n) {
        Poly p;
        for (int k = 1; k <= 4; ++k) {
            int l = n + 1 - k;
            if (l < 1 || l > 4) continue;
            p += run.prod(Rational(k - l + 1), {TH(k), ETA(l)});
            p += run.prod(Rational(1), {ETA(k), ZE(l)});
        }
        if (!p.is_zero()) expected.push_back(p);
    }
    // tau_n-class: sum (1-l) theta^k zeta^l
    for (int n = 1; n <= 4; ++n) {
        Poly p;
        for (int k = 1; k <= 4; ++k) {
            int l = n + 1 - k;
            if (l < 1 || l > 4) continue;
            p += run.prod(Rational(1 - l), {TH(k), ZE(l)});
        }
        if (!p.is_zero()) expected.push_back(p);
    }
    run.expect_relations(expected);
}

TEST_CASE("second-kind rank-2 point: third-order relation update") {
    Run run(CanonicalLabel::second_rank2(), 4, 3);
    CHECK(run.result.status == DeformationStatus::Truncated);
    CHECK(run.result.order == 3);

    int s1 = run.pid(term(0, 0, 1, 1));
    int s2 = run.pid(term(0, 1, 0, 1));
    std::vector<int> th(5, -1), eta(5, -1);
    th[1] = run.pid(term(1, 0, 0, 1) + term(0, 0, 1, 3));
    eta[1] = run.pid(term(1, 0, 0, 1) + term(0, 1, 0, 2));
    for (int n = 2; n <= 4; ++n) {
        th[static_cast<size_t>(n)] = run.pid(term(1, 0, n - 1, 1) + term(0, 0, n, 3));
        eta[static_cast<size_t>(n)] = run.pid(term(1, n - 1, 0, 1) + term(0, n, 0, 2));
    }

    // order-2 truncation recovers the published second-order families
    std::map<int, Poly> order2;
    for (const auto& [idx, poly] : run.result.relations) order2[idx] = poly.truncated(2).monic();
    std::vector<Poly> expected2;
    expected2.push_back(run.prod(Rational(1), {s1, eta[1]}));
    expected2.push_back(run.prod(Rational(1), {s2, th[1]}));
    for (int n = 2; n <= 4; ++n) {
        Poly p, q;
        for (int k = 1; k <= 4; ++k) {
            int l = n + 1 - k;
            if (l <= k || l > 4) continue;
            p += run.prod(Rational(k - l), {th[static_cast<size_t>(k)], th[static_cast<size_t>(l)]});
            q += run.prod(Rational(k - l), {eta[static_cast<size_t>(k)], eta[static_cast<size_t>(l)]});
        }
        if (!p.is_zero()) expected2.push_back(p);
        if (!q.is_zero()) expected2.push_back(q);
    }
    std::vector<Poly> got2;
    for (auto& [idx, poly] : order2) got2.push_back(poly);
    REQUIRE(got2.size() == expected2.size());
    for (auto& e : expected2) {
        bool found = false;
        for (auto& g : got2) found = found || g == e.monic();
        CHECK(found);
    }

    // the s2 theta^1 relation gains third-order terms (the published update
    // modulo the engine's correction normalization)
    auto idx2 = run.engine.find_class(term(0, 1, 0, 1));
    REQUIRE(idx2.has_value());
    Poly r2;
    for (const auto& [idx, poly] : run.result.relations)
        if (idx == static_cast<int>(*idx2)) r2 = poly;
    REQUIRE(!r2.is_zero());
    CHECK(r2.truncated(2).monic() == run.prod(Rational(1), {s2, th[1]}));
    CHECK(r2 != r2.truncated(2)); // nontrivial third-order part

    // corrections match the published gamma/epsilon families modulo the
    // cocycle freedom in the preimage: D(correction at s1 eta^2) equals
    // D(-ph[0,1,0;2]) = -ps[0,1,1;1]
    auto g2 = run.correction_at(run.mono({s1, eta[2]}));
    CHECK(bracket(g2, run.engine.base()) == term(0, 1, 1, 1).scaled(Rational(-1)));
    auto e2 = run.correction_at(run.mono({s2, th[2]}));
    CHECK(bracket(e2, run.engine.base()) == bracket(term(0, 1, 0, 2).scaled(Rational(-1)),
                                                    run.engine.base()));
}

TEST_CASE("nilpotent class: second-order relation list") {
    Run run(CanonicalLabel::star(), 5, 2);
    CHECK(run.result.status == DeformationStatus::Truncated);
    CHECK(run.result.order == 2);

    // psi_k has even parameter s^k, xi_k even t^k, tau odd zeta,
    // phi_k odd theta^k, sigma_k odd eta^k
    std::vector<int> s(6, -1), t(6, -1), th(6, -1), eta(6, -1);
    int ze = run.pid(term(0, 1, 0, 3));
    for (int k = 1; k <= 5; ++k) {
        s[static_cast<size_t>(k)] = run.pid(term(1, 0, k - 1, 2));
        t[static_cast<size_t>(k)] = run.pid(term(1, 0, k - 1, 3));
        if (k == 1) {
            th[1] = run.pid(term(0, 0, 1, 3) + term(1, 0, 0, 1));
            eta[1] = run.pid(term(0, 1, 0, 2) + term(0, 0, 1, 3));
        } else {
            th[static_cast<size_t>(k)] =
                run.pid(term(0, 0, k, 3) + term(1, 0, k - 1, 1, Rational(k)));
            eta[static_cast<size_t>(k)] = run.pid(term(0, k, 0, 2) + term(0, k - 1, 1, 3));
        }
    }
    auto S = [&](int k) { return s[static_cast<size_t>(k)]; };
    auto T = [&](int k) { return t[static_cast<size_t>(k)]; };
    auto TH = [&](int k) { return th[static_cast<size_t>(k)]; };
    auto ETA = [&](int k) { return eta[static_cast<size_t>(k)]; };

    std::vector<Poly> expected;
    // xi_1: s^1 zeta + t^1 eta^1
    expected.push_back(run.prod(Rational(1), {S(1), ze}) + run.prod(Rational(1), {T(1), ETA(1)}));
    // tau: zeta theta^1
    expected.push_back(run.prod(Rational(1), {ze, TH(1)}));
    // psi_1: -s^1 eta^1 + s^1 theta^1
    expected.push_back(run.prod(Rational(-1), {S(1), ETA(1)}) +
                       run.prod(Rational(1), {S(1), TH(1)}));
    // psi_n (n > 1): (n-2) s^n eta^1 + n sum_{k+l=n+1} s^k theta^l
    for (int n = 2; n <= 5; ++n) {
        Poly p = run.prod(Rational(n - 2), {S(n), ETA(1)});
        for (int k = 1; k <= 5; ++k) {
            int l = n + 1 - k;
            if (l < 1 || l > 5) continue;
            p += run.prod(Rational(n), {S(k), TH(l)});
        }
        expected.push_back(p);
    }
    // xi_n (n > 1): (n-2) t^n eta^1 + sum (k-1) t^k theta^l - 3/(n-1) s^{n-1} eta^2.
    // The eta^2 term rides on the xi-family: the published list puts it in
    // the psi-family, but decomposing [psi_k, sigma_2] against the verified
    // coboundary tables forces -3/k on xi_{k+1}.
    for (int n = 2; n <= 5; ++n) {
        Poly p = run.prod(Rational(n - 2), {T(n), ETA(1)});
        for (int k = 1; k <= 5; ++k) {
            int l = n + 1 - k;
            if (l < 1 || l > 5) continue;
            p += run.prod(Rational(k - 1), {T(k), TH(l)});
        }
        p += run.prod(Rational(-3, n - 1), {S(n - 1), ETA(2)});
        expected.push_back(p);
    }
    // phi_n: (n-1) theta^n eta^1 + sum_{k<l} (k-l) theta^k theta^l
    for (int n = 2; n <= 5; ++n) {
        Poly p = run.prod(Rational(n - 1), {TH(n), ETA(1)});
        for (int k = 1; k <= 5; ++k) {
            int l = n + 1 - k;
            if (l <= k || l > 5) continue;
            p += run.prod(Rational(k - l), {TH(k), TH(l)});
        }
        expected.push_back(p);
    }
    // sigma_n: sum_{k<l} (k-l) eta^k eta^l
    for (int n = 2; n <= 5; ++n) {
        Poly p;
        for (int k = 1; k <= 5; ++k) {
            int l = n + 1 - k;
            if (l <= k || l > 5) continue;
            p += run.prod(Rational(k - l), {ETA(k), ETA(l)});
        }
        if (!p.is_zero()) expected.push_back(p);
    }
    run.expect_relations(expected);

    // corrections: the bracket [psi_2 s^2, tau zeta] forces the coboundary
    // ps[1,1,0;2] - ps[1,0,1;3]; its cancellation term satisfies
    // D(gamma) = that value
    auto gz = run.correction_at(run.mono({S(2), ze}));
    CHECK(bracket(gz, run.engine.base()) == term(1, 1, 0, 2) - term(1, 0, 1, 3));
    run.check_parity_conservation();
}

TEST_CASE("degree-1 canonical codifferentials deform along the surviving even line") {
    for (auto label : {CanonicalLabel::deg1_first(), CanonicalLabel::deg1_second()}) {
        Cochain<Rational> d = canonical_codifferential(label);
        DeformationEngine<Rational> engine(d, 4, 3);
        auto result = engine.run();
        CHECK(result.status == DeformationStatus::Converged);
        CHECK(result.order == 2);
        // one odd parameter per degree, relations are the theta theta family
        CHECK(engine.registry().size() == 4);
        for (const auto& [idx, poly] : result.relations) {
            for (const auto& [m, c] : poly.terms()) CHECK(m.degree() == 2);
        }
        // the infinitesimal deformation is already miniversal
        CHECK(result.deformation == engine.infinitesimal().deformation);
    }
}

TEST_CASE("order-1 exactness: first-step bracket coefficients are cocycles") {
    for (auto label :
         {CanonicalLabel::sharp(), CanonicalLabel::star(), CanonicalLabel::second_rank1(),
          CanonicalLabel::second_rank2(), CanonicalLabel::family_c(Rational(1, 2))}) {
        Cochain<Rational> d = canonical_codifferential(label);
        DeformationEngine<Rational> engine(d, 3, 2, [label](int n) {
            return preferred_representatives(label, n);
        });
        auto st = engine.infinitesimal();
        auto r = engine.step(st);
        CHECK(!r.had_noncocycle);
    }
}

TEST_CASE("Maurer-Cartan residual vanishes modulo the recorded relations") {
    for (auto label : {CanonicalLabel::sharp(), CanonicalLabel::family_c(Rational(0)),
                       CanonicalLabel::second_rank2()}) {
        Run run(label, 4, 3);
        DeformationState<Rational> st;
        st.order = run.result.order;
        st.deformation = run.result.deformation;
        for (const auto& [idx, poly] : run.result.relations) st.relations[idx] = poly;
        for (const auto& [cls, poly] : run.result.boundary_relations) {
            // re-key by position in the boundary list; only membership in the
            // ideal matters for the residual
            st.boundary_relations[{cls.degree(), static_cast<int>(st.boundary_relations.size())}] =
                poly;
        }
        CHECK(run.engine.maurer_cartan_residual(st).is_zero());
    }
}

TEST_CASE("reduction example from the relation calculus") {
    // reduce(t2 h2 h1) by {t1 h1 + t2 h2, t1 h2}: rewrite t2 h2 -> -t1 h1,
    // then the odd square kills the term
    ParameterRegistry reg;
    int t1 = reg.add("t1", Parity::Even);
    int t2 = reg.add("t2", Parity::Even);
    int h1 = reg.add("h1", Parity::Odd);
    int h2 = reg.add("h2", Parity::Odd);
    auto var = [&](int id) { return Poly::variable(id, reg.at(id).parity); };
    RelationIdeal<Rational> ideal(6);
    ideal.add(var(t1) * var(h1) + var(t2) * var(h2));
    ideal.add(var(t1) * var(h2));
    CHECK(ideal.reduce(var(t2) * var(h2) * var(h1)).is_zero());
}
