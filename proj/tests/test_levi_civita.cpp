#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pim/catalog.hpp"
#include "pim/levi_civita.hpp"

using namespace pim;

namespace {

// The parametric connection table of the 5-dimensional example.
Connection expected_lc(const Rational& l, const Rational& m) {
    Connection c(5, "expected");
    c.coef(0, 1, 2) = l;
    c.coef(0, 1, 4) = m;
    c.coef(0, 2, 1) = -l;
    c.coef(0, 2, 3) = -m;
    c.coef(0, 3, 2) = m;
    c.coef(0, 3, 4) = l;
    c.coef(0, 4, 1) = -m;
    c.coef(0, 4, 3) = -l;
    c.coef(1, 0, 3) = 1;
    c.coef(2, 0, 4) = 1;
    c.coef(3, 0, 1) = 1;
    c.coef(4, 0, 2) = 1;
    c.coef(1, 3, 0) = -1;
    c.coef(2, 4, 0) = -1;
    c.coef(3, 1, 0) = -1;
    c.coef(4, 2, 0) = -1;
    return c;
}

}  // namespace

TEST_CASE("Koszul connection matches the example table for several parameters") {
    for (const auto& [l, m] : std::vector<std::pair<Rational, Rational>>{
             {1, 1}, {0, 0}, {2, -3}, {Rational(1, 2), Rational(1, 3)}}) {
        const PiManifoldInstance inst = build_section5({l, m});
        const Connection lc = koszul_levi_civita(inst);
        const Connection want = expected_lc(l, m);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                for (int k = 0; k < 5; ++k) {
                    CAPTURE(i);
                    CAPTURE(j);
                    CAPTURE(k);
                    CHECK(lc.coef(i, j, k) == want.coef(i, j, k));
                }
    }
}

TEST_CASE("fundamental tensor and Lee forms on the example") {
    const PiManifoldInstance inst = build_section5({1, 1});
    const Connection lc = koszul_levi_civita(inst);
    const FundamentalData fd = compute_fundamental(inst, lc);

    CHECK(fd.F(1, 1, 0) == -1);
    CHECK(fd.F(1, 0, 1) == -1);
    CHECK(fd.F(2, 2, 0) == -1);
    CHECK(fd.F(3, 3, 0) == -1);
    CHECK(fd.F(4, 4, 0) == -1);
    CHECK(fd.F(0, 1, 1) == 0);
    CHECK(fd.F(1, 2, 0) == 0);

    CHECK(fd.lee.theta(0) == -4);
    for (int i = 1; i < 5; ++i) CHECK(fd.lee.theta(i) == 0);
    CHECK(fd.lee.theta_star.is_zero());
    CHECK(fd.lee.omega.is_zero());
    CHECK(fd.lee.theta_sharp(0) == -4);
}

TEST_CASE("nabla of xi and eta on the example") {
    const PiManifoldInstance inst = build_section5({1, 1});
    const Connection lc = koszul_levi_civita(inst);
    const NablaXiEta ne = nabla_xi_eta(inst, lc);

    // nabla_{e_i} xi = phi e_i (the para-Sasaki property)
    const auto& phi = inst.structure.phi;
    for (int i = 0; i < 5; ++i)
        for (int l = 0; l < 5; ++l) CHECK(ne.nabla_xi(l, i) == phi(l, i));
    CHECK(ne.nabla_eta(1, 3) == 1);
    CHECK(ne.nabla_eta(1, 1) == 0);
}

TEST_CASE("curvature bundle golden values") {
    const PiManifoldInstance inst = build_section5({1, 1});
    const Connection lc = koszul_levi_civita(inst);
    const CurvatureBundle cb = curvature_bundle(inst, lc);

    CHECK(cb.R(0, 1, 0, 1) == 1);
    CHECK(cb.R(0, 2, 0, 2) == 1);
    CHECK(cb.R(0, 3, 0, 3) == 1);
    CHECK(cb.R(0, 4, 0, 4) == 1);
    CHECK(cb.R(1, 3, 3, 1) == 1);
    CHECK(cb.R(2, 4, 4, 2) == 1);
    CHECK(cb.R(1, 2, 3, 4) == 1);
    CHECK(cb.R(1, 4, 3, 2) == 1);
    CHECK(cb.R(1, 2, 1, 2) == 0);
    CHECK(cb.R(0, 1, 0, 2) == 0);

    Tensor want_ricci(5, 0, 2);
    want_ricci(0, 0) = -4;
    CHECK(cb.ricci == want_ricci);
    CHECK(cb.tau == -4);

    Tensor want_star(5, 0, 2);
    want_star(1, 3) = want_star(3, 1) = -3;
    want_star(2, 4) = want_star(4, 2) = -3;
    CHECK(cb.ricci_star == want_star);
    CHECK(cb.tau_star == 0);
}

TEST_CASE("Nijenhuis pair and reconstruction on every catalog instance") {
    for (const auto& inst : build_catalog()) {
        CAPTURE(inst.name);
        const Connection lc = koszul_levi_civita(inst);
        const FundamentalData fd = compute_fundamental(inst, lc);
        const int d = inst.dim();
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) {
                    CHECK(fd.N(x, y, z) == -fd.N(y, x, z));
                    CHECK(fd.N_assoc(x, y, z) == fd.N_assoc(y, x, z));
                }
        CHECK(reconstruct_F(fd.N, fd.N_assoc, inst) == fd.F);
    }
}

TEST_CASE("abelian instances are flat and F-free") {
    for (const auto& inst : build_catalog()) {
        if (inst.name.rfind("abelian", 0) != 0) continue;
        CAPTURE(inst.name);
        const Connection lc = koszul_levi_civita(inst);
        for (int i = 0; i < inst.dim(); ++i)
            for (int j = 0; j < inst.dim(); ++j)
                for (int k = 0; k < inst.dim(); ++k) CHECK(lc.coef(i, j, k) == 0);
        CHECK(fundamental_tensor(inst, lc).is_zero());
        CHECK(curvature_bundle(inst, lc).R.is_zero());
    }
}
