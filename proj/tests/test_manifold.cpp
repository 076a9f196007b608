#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pim/catalog.hpp"
#include "pim/manifold.hpp"

using namespace pim;

TEST_CASE("every catalog instance validates with all-zero residuals") {
    for (const auto& inst : build_catalog()) {
        CAPTURE(inst.name);
        const ValidationOutcome vo = validate(inst);
        CHECK(vo.all_zero);
        for (const auto& nr : vo.residuals) {
            CAPTURE(nr.name);
            CHECK(nr.residual.is_zero());
        }
    }
}

TEST_CASE("derived metrics on the 5-dimensional example") {
    const PiManifoldInstance inst = build_section5({1, 1});
    const DerivedMetrics dm = derived_metrics(inst);

    CHECK(dm.g_star(1, 3) == 1);
    CHECK(dm.g_star(3, 1) == 1);
    CHECK(dm.g_star(0, 0) == 0);
    CHECK(dm.g_star(1, 1) == 0);

    // g** = g - eta x eta
    const int d = inst.dim();
    const auto& g = inst.structure.metric.g;
    const auto& eta = inst.structure.eta;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            CHECK(dm.g_double_star(i, j) == g(i, j) - eta(i) * eta(j));

    // g~ = g* + eta x eta
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            CHECK(dm.g_tilde(i, j) == dm.g_star(i, j) + eta(i) * eta(j));

    // g~ has signature (n+1, n)
    const Inertia sig = congruence_inertia(dm.g_tilde);
    CHECK(sig.positive == inst.structure.n + 1);
    CHECK(sig.negative == inst.structure.n);
    CHECK(sig.zero == 0);
}

TEST_CASE("horizontal-vertical projection recovers the vector") {
    const PiManifoldInstance inst = build_section5({2, -3});
    const int d = inst.dim();
    Tensor x(d, 1, 0);
    x(0) = Rational(1, 2);
    x(1) = -1;
    x(3) = 7;
    const Projection p = project(inst, x);
    CHECK(p.horizontal + p.vertical == x);
    // horizontal part lies in ker(eta)
    Rational s = 0;
    for (int m = 0; m < d; ++m) s += inst.structure.eta(m) * p.horizontal(m);
    CHECK(s == 0);
}

TEST_CASE("broken phi is reported by name") {
    PiManifoldInstance inst = build_section5({1, 1});
    inst.structure.phi(1, 1) = 1;  // tr phi = 1 now, and phi^2 is off too
    const ValidationOutcome vo = validate(inst);
    CHECK(!vo.all_zero);
    bool trace_hit = false;
    for (const auto& nr : vo.residuals)
        if (nr.name == "trace-phi" && !nr.residual.is_zero()) trace_hit = true;
    CHECK(trace_hit);
}

TEST_CASE("broken Jacobi is reported") {
    PiManifoldInstance inst = build_section5({1, 1});
    inst.algebra.bracket(1, 2, 3) = 1;
    inst.algebra.bracket(2, 1, 3) = -1;
    const ValidationOutcome vo = validate(inst);
    bool jacobi_hit = false;
    for (const auto& nr : vo.residuals)
        if (nr.name == "jacobi" && !nr.residual.is_zero()) jacobi_hit = true;
    CHECK(jacobi_hit);
}

TEST_CASE("phi_apply and phi_into_slot agree") {
    const PiManifoldInstance inst = build_section5({1, 1});
    const auto& phi = inst.structure.phi;
    CHECK(phi_apply(phi, inst.structure.xi).is_zero());  // phi xi = 0

    Tensor v(5, 1, 0);
    v(1) = 2;
    v(4) = -1;
    const Tensor pv = phi_apply(phi, v);
    CHECK(pv(3) == 2);
    CHECK(pv(2) == -1);

    Tensor form(5, 0, 1);
    form(3) = 5;
    const Tensor fp = phi_into_slot(form, phi, 0);
    CHECK(fp(1) == 5);  // (form o phi)(e1) = form(e3)
    CHECK(fp(3) == 0);
}
