#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pim/catalog.hpp"
#include "pim/natural_connection.hpp"
#include "pim/verify.hpp"

using namespace pim;

TEST_CASE("potential on the example") {
    const PiManifoldInstance inst = build_section5({1, 1});
    const Connection lc = koszul_levi_civita(inst);
    const Tensor F = fundamental_tensor(inst, lc);
    const Potential p = first_natural_potential(inst, lc, F);

    CHECK(p.Q(0, 1, 3) == 1);   // Q(e1, e3) = e0
    CHECK(p.Q(3, 1, 0) == -1);  // Q(e1, e0) = -e3
    CHECK(p.Q(0, 2, 4) == 1);
    CHECK(p.Q(4, 2, 0) == -1);
    CHECK(p.Q(0, 0, 0) == 0);
    CHECK(p.Q(2, 0, 1) == 0);   // no correction in the e0 direction
}

TEST_CASE("first natural connection keeps only the e0-direction rows") {
    const Analysis a = analyze(build_section5({1, 1}));
    const int d = 5;
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) CHECK(a.fnc.coef(0, j, k) == a.lc.coef(0, j, k));
    for (int i = 1; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) CHECK(a.fnc.coef(i, j, k) == 0);

    for (const auto& nr : naturality_residuals(a.instance, a.fnc)) {
        CAPTURE(nr.name);
        CHECK(nr.residual.is_zero());
    }
}

TEST_CASE("torsion golden values on the example") {
    const Analysis a = analyze(build_section5({1, 1}));
    Tensor want(5, 0, 3);
    want(0, 1, 3) = want(0, 3, 1) = 1;
    want(0, 2, 4) = want(0, 4, 2) = 1;
    want(1, 0, 3) = want(3, 0, 1) = -1;
    want(2, 0, 4) = want(4, 0, 2) = -1;
    CHECK(a.fnc_torsion.T3 == want);

    CHECK(a.fnc_torsion.t.is_zero());
    CHECK(a.fnc_torsion.t_hat.is_zero());
    Tensor want_ts(5, 0, 1);
    want_ts(0) = 4;  // t* = 4 eta
    CHECK(a.fnc_torsion.t_star == want_ts);
}

TEST_CASE("the natural connection is flat on the whole family") {
    for (const auto& [l, m] : std::vector<std::pair<Rational, Rational>>{
             {1, 1}, {0, 1}, {2, -3}, {Rational(1, 2), Rational(1, 3)}}) {
        const Analysis a = analyze(build_section5({l, m}));
        CAPTURE(a.instance.name);
        CHECK(a.fnc_bundle.R.is_zero());
        CHECK(a.fnc_bundle.ricci.is_zero());
        CHECK(a.fnc_bundle.tau == 0);
        CHECK(a.r_via_potential.is_zero());
    }
}

TEST_CASE("closed-form connection and torsion match the direct computation") {
    const Analysis a = analyze(build_section5({1, 1}));
    const Connection cf = closed_form_connection(a.instance, ClassLabel::F4, a.fd.lee);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) CHECK(cf.coef(i, j, k) == a.fnc.coef(i, j, k));
    CHECK(closed_form_torsion(a.instance, ClassLabel::F4, a.fd.lee) == a.fnc_torsion.T);
}

TEST_CASE("closed forms reject non-main classes") {
    const Analysis a = analyze(build_section5({1, 1}));
    CHECK_THROWS_AS(closed_form_connection(a.instance, ClassLabel::F0, a.fd.lee),
                    UnsupportedClass);
    CHECK_THROWS_AS(closed_form_torsion(a.instance, ClassLabel::Unresolved, a.fd.lee),
                    UnsupportedClass);
}

TEST_CASE("closed-form curvature residual is the recorded discrepancy table") {
    const Analysis a = analyze(build_section5({1, 1}));
    const ClosedFormCurvature cf =
        closed_form_curvature(a.instance, ClassLabel::F4, a.fd.lee, a.lc, a.lc_bundle);
    const Tensor res = cf.value - a.fnc_bundle.R;
    int nonzero = 0;
    std::vector<int> idx(4, 0);
    do {
        const Rational& v = res.at(idx);
        if (v != 0) {
            ++nonzero;
            CHECK(abs(v) == 2);
        }
    } while (Tensor::next_index(idx, 5));
    CHECK(nonzero == 24);
    CHECK(res(1, 2, 3, 4) == 2);
    CHECK(res(1, 3, 1, 3) == -2);
}

TEST_CASE("closed-form Ricci residuals on the example") {
    const Analysis a = analyze(build_section5({2, -3}));
    const RicciClosedForm rc = closed_form_ricci(a.instance, ClassLabel::F4, a.fd.lee, a.lc,
                                                 a.lc_bundle, a.fnc_bundle);
    Tensor want_rho(5, 0, 2);
    for (int i = 1; i < 5; ++i) want_rho(i, i) = 2;
    CHECK(rc.rho_residual == want_rho);

    Tensor want_star(5, 0, 2);
    want_star(1, 3) = want_star(3, 1) = -6;
    want_star(2, 4) = want_star(4, 2) = -6;
    CHECK(rc.rho_star_residual == want_star);

    CHECK(rc.tau_residual == 0);
    CHECK(rc.tau_star_residual == 0);
}

TEST_CASE("torsion form relations hold on every catalog instance") {
    for (const auto& inst : build_catalog()) {
        CAPTURE(inst.name);
        const Analysis a = analyze(inst);
        const auto rels = torsion_form_relations(a.instance, a.fd.lee, a.fnc_torsion);
        CHECK(rels.size() == 8);
        for (const auto& nr : rels) {
            CAPTURE(nr.name);
            CHECK(nr.residual.is_zero());
        }
    }
}

TEST_CASE("abelian instance: natural connection coincides with Levi-Civita") {
    for (const auto& inst : build_catalog()) {
        if (inst.name.rfind("abelian", 0) != 0) continue;
        CAPTURE(inst.name);
        const Analysis a = analyze(inst);
        CHECK(a.fnc == a.lc);
        CHECK(a.potential.Q.is_zero());
        CHECK(a.fnc_torsion.T.is_zero());
        CHECK(a.fnc_bundle.R.is_zero());
    }
}
