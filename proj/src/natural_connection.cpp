#include "pim/natural_connection.hpp"

#include "pim/errors.hpp"

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

Tensor phi_squared(const Tensor& phi) {
    const int d = phi.dim();
    Tensor out(d, 1, 1);
    for (int l = 0; l < d; ++l)
        for (int j = 0; j < d; ++j) {
            Rational s = 0;
            for (int m = 0; m < d; ++m) s += phi(l, m) * phi(m, j);
            out(l, j) = s;
        }
    return out;
}

Tensor outer_eta(const Tensor& eta) {
    const int d = eta.dim();
    Tensor out(d, 0, 2);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out(i, j) = eta(i) * eta(j);
    return out;
}

void require_main_class(ClassLabel label) {
    switch (label) {
        case ClassLabel::F1:
        case ClassLabel::F4:
        case ClassLabel::F5:
        case ClassLabel::F11:
            return;
        default:
            throw UnsupportedClass("closed forms exist only for F1, F4, F5, F11; got " +
                                   to_string(label));
    }
}

// Directional derivative of a frame-constant scalar: identically zero, kept
// as a (0,1)-tensor so the formula terms stay structurally present.
Tensor scalar_frame_derivative(int dim) { return Tensor(dim, 0, 1); }

}  // namespace

Potential first_natural_potential(const PiManifoldInstance& inst, const Connection& lc,
                                  const Tensor& F) {
    const int d = inst.dim();
    const auto& phi = inst.structure.phi;
    const auto& xi = inst.structure.xi;
    const auto& eta = inst.structure.eta;
    const Tensor nphi = covariant_derivative(phi, lc);
    const Tensor neta = covariant_derivative(eta, lc);
    const Tensor nxi = covariant_derivative(xi, lc);

    Potential p{Tensor(d, 1, 2), Tensor()};
    const Rational half(1, 2);
    for (int l = 0; l < d; ++l)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Rational s = 0;
                for (int m = 0; m < d; ++m) s += nphi(l, i, m) * phi(m, j);
                p.Q(l, i, j) = -half * (s - neta(i, j) * xi(l)) - eta(j) * nxi(l, i);
            }
    p.Q3 = lower_upper(p.Q, inst.structure.metric);

    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z)
                if (p.Q3(x, y, z) != -p.Q3(x, z, y))
                    throw NaturalityViolation("potential is not skew in its last two slots");
    const Tensor lhs = phi_into_slot(p.Q3, phi, 2) - phi_into_slot(p.Q3, phi, 1);
    if (lhs != F)
        throw NaturalityViolation("potential does not satisfy Q(x,y,phi z) - Q(x,phi y,z) = F");
    return p;
}

Connection first_natural_connection(const PiManifoldInstance& inst, const Connection& lc,
                                    const Potential& potential) {
    const int d = inst.dim();
    Connection fnc(d, "first-natural");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l)
                fnc.coef(i, j, l) = lc.coef(i, j, l) + potential.Q(l, i, j);

    for (const auto& nr : naturality_residuals(inst, fnc))
        if (!nr.residual.is_zero())
            throw NaturalityViolation("first natural connection fails D " + nr.name + " = 0");
    return fnc;
}

std::vector<NamedResidual> naturality_residuals(const PiManifoldInstance& inst,
                                                const Connection& conn) {
    const DerivedMetrics dm = derived_metrics(inst);
    std::vector<NamedResidual> out;
    out.push_back({"phi", covariant_derivative(inst.structure.phi, conn)});
    out.push_back({"g", covariant_derivative(inst.structure.metric.g, conn)});
    out.push_back({"xi", covariant_derivative(inst.structure.xi, conn)});
    out.push_back({"eta", covariant_derivative(inst.structure.eta, conn)});
    out.push_back({"g-tilde", covariant_derivative(dm.g_tilde, conn)});
    return out;
}

TorsionData torsion(const PiManifoldInstance& inst, const Connection& conn) {
    const int d = inst.dim();
    const auto& mp = inst.structure.metric;
    TorsionData td;
    td.T = Tensor(d, 1, 2);
    for (int l = 0; l < d; ++l)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                td.T(l, i, j) =
                    conn.coef(i, j, l) - conn.coef(j, i, l) - inst.algebra.bracket(i, j, l);
    td.T3 = lower_upper(td.T, mp);
    td.t = contract(td.T3, 1, 2, mp);
    td.t_star = contract(phi_into_slot(td.T3, inst.structure.phi, 2), 1, 2, mp);
    td.t_hat = plug_vector(plug_vector(td.T3, inst.structure.xi, 1), inst.structure.xi, 1);
    return td;
}

std::vector<NamedResidual> torsion_crosschecks(const PiManifoldInstance& inst,
                                               const TorsionData& td, const Tensor& F,
                                               const NijenhuisPair& nij,
                                               const LeeForms& lee, ClassLabel label) {
    const int d = inst.dim();
    const auto& phi = inst.structure.phi;
    const auto& xi = inst.structure.xi;
    const auto& eta = inst.structure.eta;
    std::vector<NamedResidual> out;

    // (a) F-expression of the D1 torsion.
    {
        const Tensor Fp1 = phi_into_slot(F, phi, 1);          // F(x, phi y, z)
        const Tensor Fp1_xi = plug_vector(Fp1, xi, 2);        // F(x, phi y, xi)
        Tensor route(d, 0, 3);
        const Rational half(1, 2);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z)
                    route(x, y, z) = -half * (Fp1(x, y, z) - Fp1(y, x, z)) -
                                     half * eta(z) * (Fp1_xi(x, y) - Fp1_xi(y, x)) +
                                     eta(y) * Fp1_xi(x, z) - eta(x) * Fp1_xi(y, z);
        out.push_back({"f-expr", route - td.T3});
    }

    // (b) (N, N_assoc)-expression.
    {
        const Tensor& N = nij.N;
        const Tensor& Na = nij.N_assoc;
        const Tensor ph2 = phi_squared(phi);
        // Slot-wise phi insertions.
        const Tensor N_p0p1 = phi_into_slot(phi_into_slot(N, phi, 0), phi, 1);  // N(fx,fy,z)
        const Tensor N_p0p2 = phi_into_slot(phi_into_slot(N, phi, 0), phi, 2);  // N(fx,y,fz)
        const Tensor Na_p0p2 = phi_into_slot(phi_into_slot(Na, phi, 0), phi, 2);
        const Tensor Nxi = plug_vector(N, xi, 0);    // N(xi, ., .)
        const Tensor Naxi = plug_vector(Na, xi, 0);
        const Tensor Nxi_pp = phi_into_slot(phi_into_slot(Nxi, phi, 0), phi, 1);  // N(xi,fy,fz)
        const Tensor N_p0p1_xi = plug_vector(N_p0p1, xi, 2);  // N(fx, fy, xi)
        const Tensor Na_p0p1_xi = plug_vector(phi_into_slot(phi_into_slot(Na, phi, 0), phi, 1),
                                              xi, 2);          // Na(fx, fy, xi)
        const Tensor Naxixi = plug_vector(Naxi, xi, 0);        // Na(xi, xi, .)
        // Na(xi, xi, phi^2 y)
        Tensor Naxixi_p2(d, 0, 1);
        for (int y = 0; y < d; ++y) {
            Rational s = 0;
            for (int m = 0; m < d; ++m) s += Naxixi(m) * ph2(m, y);
            Naxixi_p2(y) = s;
        }
        // N(fx, z, fy): phi on slots 0 and 2, arguments (x, z, y).
        const Tensor N_p02 = phi_into_slot(phi_into_slot(N, phi, 0), phi, 2);
        const Tensor Na_p02 = Na_p0p2;
        // N(fx, xi, fy): phi slots 0,2 then xi in middle.
        const Tensor N_p02_ximid = plug_vector(N_p02, xi, 1);   // (x, y) -> N(fx, xi, fy)
        const Tensor Na_p02_ximid = plug_vector(Na_p02, xi, 1);

        Tensor route(d, 0, 3);
        const Rational c8(1, 8), c4(1, 4);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) {
                    Rational s = -c8 * (2 * N_p0p1(x, y, z) + N_p02(x, z, y) - N_p02(y, z, x) +
                                        Na_p02(x, z, y) - Na_p02(y, z, x));
                    s += c4 * eta(x) *
                         (2 * Nxi_pp(y, z) - N_p0p1_xi(y, z) + 2 * eta(z) * Naxixi_p2(y) -
                          Na_p0p1_xi(y, z));
                    s -= c4 * eta(y) *
                         (2 * Nxi_pp(x, z) - N_p0p1_xi(x, z) + 2 * eta(z) * Naxixi_p2(x) -
                          Na_p0p1_xi(x, z));
                    s -= c8 * eta(z) *
                         (2 * N_p0p1_xi(x, y) + N_p02_ximid(x, y) - N_p02_ximid(y, x) +
                          Na_p02_ximid(x, y) - Na_p02_ximid(y, x));
                    route(x, y, z) = s;
                }
        out.push_back({"nn-expr", route - td.T3});
    }

    // (c) Torsion-form expression of the class row.
    switch (label) {
        case ClassLabel::F1:
        case ClassLabel::F4:
        case ClassLabel::F5:
        case ClassLabel::F11: {
            const int n = inst.structure.n;
            const Tensor ph2 = phi_squared(phi);
            const Tensor t_phi = compose_phi(td.t, phi);
            const Tensor t_phi2 = compose_phi(t_phi, phi);
            const Rational ts_xi = form_at(td.t_star, xi);
            const Rational t_xi = form_at(td.t, xi);
            const Tensor th_phi = compose_phi(td.t_hat, phi);
            Tensor route(d, 1, 2);
            for (int l = 0; l < d; ++l)
                for (int x = 0; x < d; ++x)
                    for (int y = 0; y < d; ++y) {
                        Rational s = 0;
                        switch (label) {
                            case ClassLabel::F1:
                                s = Rational(-1, 2 * n) *
                                    (t_phi2(y) * ph2(l, x) - t_phi2(x) * ph2(l, y) +
                                     t_phi(x) * phi(l, y) - t_phi(y) * phi(l, x));
                                break;
                            case ClassLabel::F4:
                                s = Rational(-1, 2 * n) * ts_xi *
                                    (eta(y) * phi(l, x) - eta(x) * phi(l, y));
                                break;
                            case ClassLabel::F5:
                                s = Rational(-1, 2 * n) * t_xi *
                                    (eta(y) * ph2(l, x) - eta(x) * ph2(l, y));
                                break;
                            default:  // F11
                                s = (eta(y) * td.t_hat(x) - eta(x) * td.t_hat(y)) * xi(l);
                                break;
                        }
                        route(l, x, y) = s;
                    }
            (void)th_phi;
            out.push_back({"torsion-form." + to_string(label),
                           lower_upper(route, inst.structure.metric) - td.T3});
            break;
        }
        default:
            break;
    }
    return out;
}

std::vector<NamedResidual> torsion_form_relations(const PiManifoldInstance& inst,
                                                  const LeeForms& lee, const TorsionData& td) {
    const int d = inst.dim();
    const auto& phi = inst.structure.phi;
    const auto& xi = inst.structure.xi;
    const auto& eta = inst.structure.eta;
    const Tensor th_phi = compose_phi(lee.theta, phi);
    const Tensor th_phi2 = compose_phi(th_phi, phi);
    const Tensor ths_phi = compose_phi(lee.theta_star, phi);
    const Tensor ths_phi2 = compose_phi(ths_phi, phi);
    const Tensor om_phi = compose_phi(lee.omega, phi);
    const Tensor t_phi = compose_phi(td.t, phi);
    const Tensor t_phi2 = compose_phi(t_phi, phi);
    const Tensor ts_phi = compose_phi(td.t_star, phi);
    const Tensor ts_phi2 = compose_phi(ts_phi, phi);
    const Rational th_xi = form_at(lee.theta, xi);
    const Rational ths_xi = form_at(lee.theta_star, xi);

    const Rational half(1, 2);
    std::vector<NamedResidual> out;
    auto add = [&](const char* name, auto f) {
        Tensor r(d, 0, 1);
        for (int x = 0; x < d; ++x) r(x) = f(x);
        out.push_back({name, std::move(r)});
    };
    add("t-theta", [&](int x) { return td.t(x) - half * th_phi(x) + ths_xi * eta(x); });
    add("tstar-thetastar", [&](int x) { return td.t_star(x) - half * ths_phi(x) + th_xi * eta(x); });
    add("that-omega", [&](int x) { return td.t_hat(x) - om_phi(x); });
    add("tstar-phi", [&](int x) { return ts_phi(x) - t_phi2(x); });
    add("2t-phi", [&](int x) { return 2 * t_phi(x) - th_phi2(x); });
    add("2t-phi2", [&](int x) { return 2 * t_phi2(x) - th_phi(x); });
    add("2tstar-phi", [&](int x) { return 2 * ts_phi(x) - ths_phi2(x); });
    add("2tstar-phi2", [&](int x) { return 2 * ts_phi2(x) - ths_phi(x); });
    return out;
}

Tensor curvature_via_potential(const PiManifoldInstance& inst, const CurvatureBundle& lc_bundle,
                               const Potential& potential, const Connection& lc) {
    const int d = inst.dim();
    const Tensor nQ3 = covariant_derivative(potential.Q3, lc);  // (a; b, c, w) with a direction
    const auto& g = inst.structure.metric.g;

    Tensor out(d, 0, 4);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z)
                for (int w = 0; w < d; ++w) {
                    Rational s = lc_bundle.R(x, y, z, w);
                    s += nQ3(x, y, z, w) - nQ3(y, x, z, w);
                    Rational quad = 0;
                    for (int l = 0; l < d; ++l)
                        for (int m = 0; m < d; ++m)
                            quad += g(l, m) * (potential.Q(l, x, z) * potential.Q(m, y, w) -
                                               potential.Q(l, y, z) * potential.Q(m, x, w));
                    out(x, y, z, w) = s + quad;
                }

    const Connection fnc = first_natural_connection(inst, lc, potential);
    if (out != curvature_bundle(inst, fnc).R)
        throw IdentityViolation("potential expansion of the D1 curvature disagrees with the "
                                "direct computation");
    return out;
}

Connection closed_form_connection(const PiManifoldInstance& inst, ClassLabel label,
                                  const LeeForms& lee) {
    require_main_class(label);
    const int d = inst.dim();
    const int n = inst.structure.n;
    const auto& phi = inst.structure.phi;
    const auto& xi = inst.structure.xi;
    const auto& eta = inst.structure.eta;
    const Tensor ph2 = phi_squared(phi);
    const DerivedMetrics dm = derived_metrics(inst);
    const Tensor th_phi = compose_phi(lee.theta, phi);
    const Tensor th_phi2 = compose_phi(th_phi, phi);
    const Tensor om_phi = compose_phi(lee.omega, phi);
    const Tensor phi_th_sharp = phi_apply(phi, lee.theta_sharp);
    const Tensor phi2_th_sharp = phi_apply(phi, phi_th_sharp);
    const Tensor phi_om_sharp = phi_apply(phi, lee.omega_sharp);
    const Rational th_xi = form_at(lee.theta, xi);
    const Rational ths_xi = form_at(lee.theta_star, xi);

    const Connection lc = koszul_levi_civita(inst);
    Connection out(d, "closed-form-" + to_string(label));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
                Rational q = 0;
                switch (label) {
                    case ClassLabel::F1:
                        q = Rational(-1, 4 * n) *
                            (th_phi(j) * ph2(l, i) - th_phi2(j) * phi(l, i) +
                             dm.g_star(i, j) * phi2_th_sharp(l) -
                             dm.g_double_star(i, j) * phi_th_sharp(l));
                        break;
                    case ClassLabel::F4:
                        q = Rational(-1, 2 * n) * th_xi *
                            (dm.g_star(i, j) * xi(l) - eta(j) * phi(l, i));
                        break;
                    case ClassLabel::F5:
                        q = Rational(-1, 2 * n) * ths_xi *
                            (dm.g_double_star(i, j) * xi(l) - eta(j) * ph2(l, i));
                        break;
                    default:  // F11
                        q = -eta(i) * (om_phi(j) * xi(l) - eta(j) * phi_om_sharp(l));
                        break;
                }
                out.coef(i, j, l) = lc.coef(i, j, l) + q;
            }
    return out;
}

Tensor closed_form_torsion(const PiManifoldInstance& inst, ClassLabel label,
                           const LeeForms& lee) {
    require_main_class(label);
    const int d = inst.dim();
    const int n = inst.structure.n;
    const auto& phi = inst.structure.phi;
    const auto& xi = inst.structure.xi;
    const auto& eta = inst.structure.eta;
    const Tensor ph2 = phi_squared(phi);
    const Tensor th_phi = compose_phi(lee.theta, phi);
    const Tensor th_phi2 = compose_phi(th_phi, phi);
    const Tensor ths_phi = compose_phi(lee.theta_star, phi);
    const Tensor om_phi = compose_phi(lee.omega, phi);
    const Rational th_xi = form_at(lee.theta, xi);
    const Rational ths_xi = form_at(lee.theta_star, xi);
    (void)ths_phi;

    Tensor out(d, 1, 2);
    for (int l = 0; l < d; ++l)
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                Rational s = 0;
                switch (label) {
                    case ClassLabel::F1:
                        s = Rational(-1, 4 * n) *
                            (th_phi(y) * ph2(l, x) - th_phi(x) * ph2(l, y) +
                             th_phi2(x) * phi(l, y) - th_phi2(y) * phi(l, x));
                        break;
                    case ClassLabel::F4:
                        s = Rational(1, 2 * n) * th_xi *
                            (eta(y) * phi(l, x) - eta(x) * phi(l, y));
                        break;
                    case ClassLabel::F5:
                        s = Rational(1, 2 * n) * ths_xi *
                            (eta(y) * ph2(l, x) - eta(x) * ph2(l, y));
                        break;
                    default:  // F11
                        s = (eta(y) * om_phi(x) - eta(x) * om_phi(y)) * xi(l);
                        break;
                }
                out(l, x, y) = s;
            }
    return out;
}

ClosedFormCurvature closed_form_curvature(const PiManifoldInstance& inst, ClassLabel label,
                                          const LeeForms& lee, const Connection& lc,
                                          const CurvatureBundle& lc_bundle) {
    require_main_class(label);
    const int d = inst.dim();
    const int n = inst.structure.n;
    const auto& phi = inst.structure.phi;
    const auto& xi = inst.structure.xi;
    const auto& eta = inst.structure.eta;
    const auto& g = inst.structure.metric.g;
    const DerivedMetrics dm = derived_metrics(inst);
    const Tensor ee = outer_eta(eta);
    const Tensor th_phi = compose_phi(lee.theta, phi);
    const Tensor th_phi2 = compose_phi(th_phi, phi);
    const Rational th_xi = form_at(lee.theta, xi);
    const Rational ths_xi = form_at(lee.theta_star, xi);

    ClosedFormCurvature cf{lc_bundle.R, {}};
    switch (label) {
        case ClassLabel::F1: {
            const Rational th_phi_sharp = form_at(th_phi, lee.theta_sharp);   // theta(phi theta#)
            const Rational th_phi2_sharp = form_at(th_phi2, lee.theta_sharp); // theta(phi^2 theta#)
            const Tensor n_thphi2 = covariant_derivative(th_phi2, lc);  // (x, y)
            const Tensor n_thphi = covariant_derivative(th_phi, lc);
            Tensor S1(d, 0, 2), S2(d, 0, 2);
            const Rational c(1, 4 * n);
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y) {
                    S1(x, y) = n_thphi2(x, y) +
                               c * (th_phi(x) * th_phi2(y) + th_phi2(x) * th_phi(y));
                    S2(x, y) = n_thphi(x, y) +
                               c * (th_phi2(x) * th_phi2(y) + th_phi(x) * th_phi(y));
                }
            Tensor corr = kulkarni_nomizu(dm.g_star, S1) - kulkarni_nomizu(dm.g_double_star, S2);
            corr -= th_phi_sharp * kulkarni_nomizu(dm.g_star, dm.g_double_star);
            corr -= th_phi2_sharp *
                    (kulkarni_nomizu(g, dm.g_double_star) + kulkarni_nomizu(dm.g_star, dm.g_tilde) -
                     kulkarni_nomizu(dm.g_tilde, g));
            cf.value += c * corr;
            cf.auxiliary.push_back({"S1", std::move(S1)});
            cf.auxiliary.push_back({"S2", std::move(S2)});
            break;
        }
        case ClassLabel::F4: {
            // x(theta(xi)) terms: frame derivatives of a constant scalar.
            const Tensor dth = scalar_frame_derivative(d);
            const Tensor kn = kulkarni_nomizu(ee, dm.g_star);
            const Tensor kn_xi = plug_vector(kn, xi, 0);  // (y, z, w)
            const Rational c(1, 2 * n);
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y)
                    for (int z = 0; z < d; ++z)
                        for (int w = 0; w < d; ++w)
                            cf.value(x, y, z, w) +=
                                c * (dth(x) * kn_xi(y, z, w) - dth(y) * kn_xi(x, z, w));
            cf.value -= Rational(1, 8 * n * n) * th_xi * th_xi *
                        (2 * kulkarni_nomizu(ee, g) - kulkarni_nomizu(dm.g_star, dm.g_star));
            break;
        }
        case ClassLabel::F5: {
            const Tensor dths = scalar_frame_derivative(d);
            const Tensor gg = kulkarni_nomizu(g, g);
            const Tensor gg_xi = plug_vector(gg, xi, 0);
            const Rational c(1, 4 * n);
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y)
                    for (int z = 0; z < d; ++z)
                        for (int w = 0; w < d; ++w)
                            cf.value(x, y, z, w) +=
                                c * (dths(x) * gg_xi(y, z, w) - dths(y) * gg_xi(x, z, w));
            cf.value += Rational(1, 8 * n * n) * ths_xi * ths_xi * gg;
            break;
        }
        default: {  // F11
            const Tensor om_phi = compose_phi(lee.omega, phi);
            const Tensor n_om = covariant_derivative(lee.omega, lc);  // (x, y)
            const Tensor n_om_phi = phi_into_slot(n_om, phi, 1);      // (nabla_x omega)(phi y)
            Tensor S3(d, 0, 2);
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y)
                    S3(x, y) = n_om_phi(x, y) + om_phi(x) * om_phi(y);
            cf.value -= kulkarni_nomizu(ee, S3);
            cf.auxiliary.push_back({"S3", std::move(S3)});
            break;
        }
    }
    return cf;
}

RicciClosedForm closed_form_ricci(const PiManifoldInstance& inst, ClassLabel label,
                                  const LeeForms& lee, const Connection& lc,
                                  const CurvatureBundle& lc_bundle,
                                  const CurvatureBundle& fnc_bundle) {
    require_main_class(label);
    const int d = inst.dim();
    const int n = inst.structure.n;
    const auto& phi = inst.structure.phi;
    const auto& xi = inst.structure.xi;
    const auto& eta = inst.structure.eta;
    const auto& g = inst.structure.metric.g;
    const DerivedMetrics dm = derived_metrics(inst);
    const Tensor th_phi = compose_phi(lee.theta, phi);
    const Tensor th_phi2 = compose_phi(th_phi, phi);
    const Rational th_xi = form_at(lee.theta, xi);
    const Rational ths_xi = form_at(lee.theta_star, xi);

    RicciClosedForm r;
    r.rho_formula = lc_bundle.ricci;
    r.rho_star_formula = lc_bundle.ricci_star;
    r.tau_formula = lc_bundle.tau;
    r.tau_star_formula = lc_bundle.tau_star;

    switch (label) {
        case ClassLabel::F1: {
            const Rational th_phi_sharp = form_at(th_phi, lee.theta_sharp);
            const Rational th_phi2_sharp = form_at(th_phi2, lee.theta_sharp);
            const Tensor n_thphi = covariant_derivative(th_phi, lc);
            const Tensor n_thphi2 = covariant_derivative(th_phi2, lc);
            const Divergences div_thphi = divergences(inst, th_phi, lc);
            const Divergences div_thphi2 = divergences(inst, th_phi2, lc);
            const Rational c4n(1, 4 * n);
            const Rational half(1, 2);
            const Rational coefA = div_thphi2.div -
                                   Rational(4 * n * n - 4 * n - 1, 2 * n) * th_phi_sharp +
                                   2 * (n - 1) * th_phi2_sharp;
            const Rational coefB =
                div_thphi.div + Rational(8 * n * n - 8 * n + 1, 2 * n) * th_phi2_sharp;
            const Rational coefC = div_thphi.div_star +
                                   Rational((2 * n - 1) * (2 * n - 1), 2 * n) * th_phi_sharp -
                                   2 * (n - 1) * th_phi2_sharp;
            const Rational coefD =
                div_thphi2.div_star - Rational(8 * n * n - 8 * n - 1, 2 * n) * th_phi2_sharp;
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) {
                    r.rho_formula(y, z) +=
                        half * (n_thphi(y, z) +
                                c4n * (th_phi2(y) * th_phi2(z) + th_phi(y) * th_phi(z))) -
                        c4n * (coefA * dm.g_star(y, z) - coefB * dm.g_double_star(y, z));
                    r.rho_star_formula(y, z) +=
                        -half * (n_thphi2(y, z) +
                                 c4n * (th_phi(y) * th_phi2(z) + th_phi2(y) * th_phi(z))) +
                        c4n * (coefC * dm.g_double_star(y, z) - coefD * dm.g_star(y, z));
                }
            r.tau_formula +=
                div_thphi.div + Rational((2 * n - 1) * (2 * n - 1), 2 * n) * th_phi2_sharp;
            r.tau_star_formula +=
                (n - 1) * th_phi_sharp - Rational(2 * n - 3, 2) * th_phi2_sharp;
            break;
        }
        case ClassLabel::F4: {
            // All frame derivatives of theta(xi) vanish; the terms stay in
            // the expression with their zero (0,1)-tensor.
            const Tensor dth = scalar_frame_derivative(d);
            const Tensor dth_phi = compose_phi(dth, phi);   // (phi y)(theta(xi))
            const Tensor dth_phi2 = compose_phi(dth_phi, phi);
            const Rational dth_xi = form_at(dth, xi);       // xi(theta(xi))
            const Rational c2n(1, 2 * n);
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) {
                    r.rho_formula(y, z) +=
                        -c2n * (dth_xi * dm.g_star(y, z) - dth_phi(y) * eta(z)) +
                        Rational(1, 2 * n * n) * th_xi * th_xi *
                            (g(y, z) + (n - 1) * eta(y) * eta(z));
                    r.rho_star_formula(y, z) +=
                        c2n * (dth_phi2(y) - 2 * n * dth(y)) * eta(z) -
                        Rational(2 * n - 1, 4 * n * n) * th_xi * th_xi * dm.g_star(y, z);
                }
            r.tau_formula += c2n * th_xi * th_xi;
            r.tau_star_formula -= dth_xi;
            break;
        }
        case ClassLabel::F5: {
            const Tensor dths = scalar_frame_derivative(d);
            const Tensor dths_phi = compose_phi(dths, phi);
            const Rational dths_xi = form_at(dths, xi);
            const Rational c2n(1, 2 * n);
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) {
                    r.rho_formula(y, z) +=
                        -c2n * (dths_xi * g(y, z) + (2 * n - 1) * dths(y) * eta(z)) -
                        c2n * ths_xi * ths_xi * g(y, z);
                    r.rho_star_formula(y, z) += -c2n * dths_phi(y) * eta(z) +
                                                Rational(1, 4 * n * n) * ths_xi * ths_xi *
                                                    dm.g_star(y, z);
                }
            r.tau_formula += -2 * dths_xi - Rational(2 * n + 1, 2 * n) * ths_xi * ths_xi;
            break;
        }
        default: {  // F11
            const Tensor om_phi = compose_phi(lee.omega, phi);
            const Tensor n_om = covariant_derivative(lee.omega, lc);
            const Tensor n_om_phi = phi_into_slot(n_om, phi, 1);
            const Divergences div_om = divergences(inst, lee.omega, lc);
            const Rational om_phi_sharp = form_at(om_phi, lee.omega_sharp);  // omega(phi omega#)
            const Tensor om_phi2 = compose_phi(om_phi, phi);
            const Rational om_phi2_sharp = form_at(om_phi2, lee.omega_sharp);
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) {
                    r.rho_formula(y, z) += n_om_phi(y, z) + om_phi(y) * om_phi(z) +
                                           (div_om.div_star + om_phi2_sharp) * eta(y) * eta(z);
                    r.rho_star_formula(y, z) +=
                        (div_om.div + om_phi_sharp) * eta(y) * eta(z);
                }
            r.tau_formula += 2 * (div_om.div_star + om_phi2_sharp);
            r.tau_star_formula += div_om.div + om_phi_sharp;
            break;
        }
    }

    r.rho_residual = r.rho_formula - fnc_bundle.ricci;
    r.rho_star_residual = r.rho_star_formula - fnc_bundle.ricci_star;
    r.tau_residual = r.tau_formula - fnc_bundle.tau;
    r.tau_star_residual = r.tau_star_formula - fnc_bundle.tau_star;
    return r;
}

Divergences divergences(const PiManifoldInstance& inst, const Tensor& form,
                        const Connection& lc) {
    if (form.con_rank() != 0 || form.cov_rank() != 1)
        throw SlotMismatch("divergences expects a (0,1)-form");
    const auto& mp = inst.structure.metric;
    const Tensor nf = covariant_derivative(form, lc);  // (i, j)
    Divergences out;
    out.div = contract(nf, 0, 1, mp).scalar();
    out.div_star = contract(phi_into_slot(nf, inst.structure.phi, 1), 0, 1, mp).scalar();
    return out;
}

}  // namespace pim
