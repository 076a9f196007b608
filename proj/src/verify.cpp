#include "pim/verify.hpp"

namespace pim {

namespace {

Rational form_at(const Tensor& form, const Tensor& v) {
    Rational s = 0;
    for (int m = 0; m < form.dim(); ++m) s += form(m) * v(m);
    return s;
}

Tensor compose_phi(const Tensor& form, const Tensor& phi) {
    const int d = form.dim();
    Tensor out(d, 0, 1);
    for (int j = 0; j < d; ++j) {
        Rational s = 0;
        for (int m = 0; m < d; ++m) s += form(m) * phi(m, j);
        out(j) = s;
    }
    return out;
}

Tensor scalar_tensor(int dim, const Rational& v) {
    Tensor t(dim, 0, 0);
    t.scalar() = v;
    return t;
}

IdentityReport report_from(std::string id, Category cat, const Tensor& residual) {
    IdentityReport r;
    r.id = std::move(id);
    r.category = cat;
    if (residual.is_zero()) {
        r.status = Status::Holds;
        r.max_abs_residual = 0;
    } else {
        r.status = Status::Residual;
        auto [m, w] = residual.max_abs();
        r.max_abs_residual = m;
        r.witness = std::move(w);
    }
    return r;
}

IdentityReport skipped(std::string id) {
    IdentityReport r;
    r.id = std::move(id);
    r.category = Category::PaperCrosscheck;
    r.status = Status::Skipped;
    r.max_abs_residual = 0;
    return r;
}

}  // namespace

std::string to_string(Category c) {
    return c == Category::HardInvariant ? "hard-invariant" : "paper-crosscheck";
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Residual: return "residual";
        default: return "skipped";
    }
}

Analysis analyze(const PiManifoldInstance& instance) {
    Analysis a;
    a.instance = instance;
    a.validation = validate(instance);
    a.lc = koszul_levi_civita(instance);
    a.fd = compute_fundamental(instance, a.lc);
    a.nabla = nabla_xi_eta(instance, a.lc);
    a.lc_bundle = curvature_bundle(instance, a.lc);
    a.potential = first_natural_potential(instance, a.lc, a.fd.F);
    a.fnc = first_natural_connection(instance, a.lc, a.potential);
    a.fnc_torsion = torsion(instance, a.fnc);
    a.fnc_bundle = curvature_bundle(instance, a.fnc);
    a.r_via_potential = curvature_via_potential(instance, a.lc_bundle, a.potential, a.lc);
    a.classification = classify(instance);
    return a;
}

std::vector<IdentityReport> run_identity_suite(const Analysis& a) {
    const int d = a.instance.dim();
    const auto& phi = a.instance.structure.phi;
    const auto& xi = a.instance.structure.xi;
    const auto& eta = a.instance.structure.eta;
    const auto& g = a.instance.structure.metric.g;
    const auto& F = a.fd.F;
    const auto cat = Category::HardInvariant;
    std::vector<IdentityReport> out;
    auto add = [&](std::string id, const Tensor& res) {
        out.push_back(report_from(std::move(id), cat, res));
    };

    const Tensor F_p1 = phi_into_slot(F, phi, 1);       // F(x, phi y, z)
    const Tensor F_p2 = phi_into_slot(F, phi, 2);       // F(x, y, phi z)
    const Tensor F_p1p2 = phi_into_slot(F_p1, phi, 2);  // F(x, phi y, phi z)
    const Tensor F_xi2 = plug_vector(F, xi, 2);         // F(x, y, xi)
    const Tensor F_xi1 = plug_vector(F, xi, 1);         // F(x, xi, z)
    const Tensor F_p1_xi2 = plug_vector(F_p1, xi, 2);   // F(x, phi y, xi)
    const Tensor F_xi1_p = phi_into_slot(F_xi1, phi, 1);  // F(x, xi, phi z)

    {
        Tensor r(d, 0, 3);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) r(x, y, z) = F(x, y, z) - F(x, z, y);
        add("F.sym.23", r);
    }
    {
        Tensor r(d, 0, 3);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z)
                    r(x, y, z) = F(x, y, z) + F_p1p2(x, y, z) - eta(y) * F_xi1(x, z) -
                                 eta(z) * F_xi2(x, y);
        add("F.sym.phiphi", r);
    }
    {
        Tensor r(d, 0, 3);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z)
                    r(x, y, z) = F_p2(x, y, z) + F_p1(x, y, z) - eta(y) * F_xi1_p(x, z) -
                                 eta(z) * F_p1_xi2(x, y);
        add("F.sym.phi-z", r);
    }

    const auto& lee = a.fd.lee;
    add("lee.omega-xi", scalar_tensor(d, form_at(lee.omega, xi)));
    {
        // theta* . phi + theta . phi^2 = omega
        const Tensor ths_phi = compose_phi(lee.theta_star, phi);
        const Tensor th_phi2 = compose_phi(compose_phi(lee.theta, phi), phi);
        add("lee.star-phi", ths_phi + th_phi2 - lee.omega);
    }
    {
        // theta . phi + theta* = omega . phi + theta*(xi) eta
        const Tensor th_phi = compose_phi(lee.theta, phi);
        const Tensor om_phi = compose_phi(lee.omega, phi);
        const Rational ths_xi = form_at(lee.theta_star, xi);
        Tensor r = th_phi + lee.theta_star - om_phi;
        for (int x = 0; x < d; ++x) r(x) -= ths_xi * eta(x);
        add("lee.theta-phi", r);
    }

    {
        Tensor r(d, 0, 2);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Rational s = a.nabla.nabla_eta(i, j);
                for (int m = 0; m < d; ++m) s -= g(m, j) * a.nabla.nabla_xi(m, i);
                r(i, j) = s;
            }
        add("lem2.1.eta-g", r);
    }
    {
        Tensor r(d, 0, 1);
        for (int i = 0; i < d; ++i) {
            Rational s = 0;
            for (int m = 0; m < d; ++m) s += eta(m) * a.nabla.nabla_xi(m, i);
            r(i) = s;
        }
        add("lem2.1.eta-xi", r);
    }
    {
        Tensor r(d, 0, 2);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                r(x, y) = F_p1_xi2(x, y) + a.nabla.nabla_eta(x, y);
        add("lem2.1.F-xi", r);
    }

    {
        Tensor r(d, 0, 3);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z)
                    r(x, y, z) = a.fd.N(x, y, z) + a.fd.N(y, x, z);
        add("nijenhuis.antisym", r);
    }
    {
        Tensor r(d, 0, 3);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z)
                    r(x, y, z) = a.fd.N_assoc(x, y, z) - a.fd.N_assoc(y, x, z);
        add("nijenhuis.assoc-sym", r);
    }
    add("F.reconstruction", reconstruct_F(a.fd.N, a.fd.N_assoc, a.instance) - F);

    {
        const auto& Q3 = a.potential.Q3;
        Tensor r(d, 0, 3);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) r(x, y, z) = Q3(x, y, z) + Q3(x, z, y);
        add("prop3.2.skew", r);
        add("prop3.2.F",
            phi_into_slot(Q3, phi, 2) - phi_into_slot(Q3, phi, 1) - F);
    }

    for (const auto& nr : naturality_residuals(a.instance, a.fnc))
        add("nat." + nr.name, nr.residual);

    add("lc.torsion-free", torsion(a.instance, a.lc).T);
    add("lc.metric", covariant_derivative(g, a.lc));

    auto curvature_checks = [&](const std::string& prefix, const Tensor& R, bool full) {
        Tensor a12(d, 0, 4), a34(d, 0, 4);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z)
                    for (int w = 0; w < d; ++w) {
                        a12(x, y, z, w) = R(x, y, z, w) + R(y, x, z, w);
                        a34(x, y, z, w) = R(x, y, z, w) + R(x, y, w, z);
                    }
        add(prefix + ".antisym.12", a12);
        add(prefix + ".antisym.34", a34);
        if (!full) return;
        Tensor pair(d, 0, 4), bianchi(d, 0, 4);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z)
                    for (int w = 0; w < d; ++w) {
                        pair(x, y, z, w) = R(x, y, z, w) - R(z, w, x, y);
                        bianchi(x, y, z, w) =
                            R(x, y, z, w) + R(y, z, x, w) + R(z, x, y, w);
                    }
        add(prefix + ".pair", pair);
        add(prefix + ".bianchi", bianchi);
    };
    curvature_checks("R", a.lc_bundle.R, true);

    {
        const auto& T = a.fnc_torsion.T;
        const auto& Q = a.potential.Q;
        Tensor anti(d, 1, 2), viaq(d, 1, 2);
        for (int l = 0; l < d; ++l)
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y) {
                    anti(l, x, y) = T(l, x, y) + T(l, y, x);
                    viaq(l, x, y) = T(l, x, y) - Q(l, x, y) + Q(l, y, x);
                }
        add("fnc.T-antisym", anti);
        add("fnc.T-vs-potential", viaq);
        add("fnc.that-xi", scalar_tensor(d, form_at(a.fnc_torsion.t_hat, xi)));
    }

    for (const auto& nr : torsion_form_relations(a.instance, lee, a.fnc_torsion))
        add("tform." + nr.name, nr.residual);

    curvature_checks("R1", a.fnc_bundle.R, false);
    add("R1.via-potential", a.r_via_potential - a.fnc_bundle.R);

    return out;
}

std::vector<IdentityReport> run_crosscheck_suite(const Analysis& a) {
    const int d = a.instance.dim();
    const auto cat = Category::PaperCrosscheck;
    std::vector<IdentityReport> out;
    auto add = [&](std::string id, const Tensor& res) {
        out.push_back(report_from(std::move(id), cat, res));
    };

    // Full-frame vs horizontal-only Lee trace: the two conventions differ by
    // omega, so the delta doubles as an omega-vanishing report.
    add("lee.trace-convention", a.fd.lee.omega);

    const ClassLabel label = a.classification.label;
    const bool main_class = label == ClassLabel::F1 || label == ClassLabel::F4 ||
                            label == ClassLabel::F5 || label == ClassLabel::F11;

    const auto torsion_checks = torsion_crosschecks(a.instance, a.fnc_torsion, a.fd.F,
                                                    {a.fd.N, a.fd.N_assoc}, a.fd.lee, label);
    for (const auto& nr : torsion_checks)
        if (nr.name == "f-expr" || nr.name == "nn-expr") add("torsion." + nr.name, nr.residual);

    if (!main_class) {
        out.push_back(skipped("thm4.2"));
        out.push_back(skipped("thm4.3"));
        out.push_back(skipped("cor4.4"));
        out.push_back(skipped("thm4.5"));
        out.push_back(skipped("cor4.6"));
        return out;
    }
    const std::string suffix = to_string(label);

    {
        const Connection cf = closed_form_connection(a.instance, label, a.fd.lee);
        Tensor r(d, 1, 2);
        for (int l = 0; l < d; ++l)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    r(l, i, j) = cf.coef(i, j, l) - a.fnc.coef(i, j, l);
        add("thm4.2." + suffix, r);
    }
    add("thm4.3." + suffix,
        closed_form_torsion(a.instance, label, a.fd.lee) - a.fnc_torsion.T);
    for (const auto& nr : torsion_checks)
        if (nr.name == "torsion-form." + suffix) add("cor4.4." + suffix, nr.residual);
    add("thm4.5." + suffix,
        closed_form_curvature(a.instance, label, a.fd.lee, a.lc, a.lc_bundle).value -
            a.fnc_bundle.R);
    {
        const RicciClosedForm rc = closed_form_ricci(a.instance, label, a.fd.lee, a.lc,
                                                     a.lc_bundle, a.fnc_bundle);
        add("cor4.6." + suffix + ".rho", rc.rho_residual);
        add("cor4.6." + suffix + ".rho_star", rc.rho_star_residual);
        add("cor4.6." + suffix + ".tau", scalar_tensor(d, rc.tau_residual));
        add("cor4.6." + suffix + ".tau_star", scalar_tensor(d, rc.tau_star_residual));
    }
    return out;
}

bool any_hard_residual(const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports)
        if (r.category == Category::HardInvariant && r.status == Status::Residual) return true;
    return false;
}

}  // namespace pim
