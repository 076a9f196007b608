#include "pim/classifier.hpp"

namespace pim {

std::string to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::F0: return "F0";
        case ClassLabel::F1: return "F1";
        case ClassLabel::F4: return "F4";
        case ClassLabel::F5: return "F5";
        case ClassLabel::F11: return "F11";
        case ClassLabel::Unresolved: return "UNRESOLVED";
    }
    return "?";
}

namespace {

Rational form_at_vector(const Tensor& form, const Tensor& v) {
    Rational s = 0;
    for (int m = 0; m < form.dim(); ++m) s += form(m) * v(m);
    return s;
}

// (form o phi)(b_j)
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

}  // namespace

std::map<ClassLabel, NamedResidual> class_residuals(const PiManifoldInstance& inst,
                                                    const Tensor& F, const LeeForms& lee) {
    const int d = inst.dim();
    const int n = inst.structure.n;
    const auto& phi = inst.structure.phi;
    const auto& eta = inst.structure.eta;
    const DerivedMetrics dm = derived_metrics(inst);
    const Tensor& gs = dm.g_star;         // g(x, phi y)
    const Tensor& gss = dm.g_double_star; // g(phi x, phi y)

    const Tensor th_phi = compose_phi(lee.theta, phi);
    const Tensor th_phi2 = compose_phi(th_phi, phi);
    const Rational th_xi = form_at_vector(lee.theta, inst.structure.xi);
    const Rational ths_xi = form_at_vector(lee.theta_star, inst.structure.xi);
    const Rational inv2n(1, 2 * n);

    std::map<ClassLabel, NamedResidual> out;
    out.emplace(ClassLabel::F0, NamedResidual{"F0", F});

    Tensor r1(d, 0, 3), r4(d, 0, 3), r5(d, 0, 3), r11(d, 0, 3);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                const Rational f1 = inv2n *
                                    (gss(x, y) * th_phi2(z) + gss(x, z) * th_phi2(y) -
                                     gs(x, y) * th_phi(z) - gs(x, z) * th_phi(y));
                r1(x, y, z) = F(x, y, z) - f1;
                const Rational f4 =
                    th_xi * inv2n * (gss(x, y) * eta(z) + gss(x, z) * eta(y));
                r4(x, y, z) = F(x, y, z) - f4;
                const Rational f5 =
                    ths_xi * inv2n * (gs(x, y) * eta(z) + gs(x, z) * eta(y));
                r5(x, y, z) = F(x, y, z) - f5;
                const Rational f11 =
                    eta(x) * (eta(y) * lee.omega(z) + eta(z) * lee.omega(y));
                r11(x, y, z) = F(x, y, z) - f11;
            }
    out.emplace(ClassLabel::F1, NamedResidual{"F1", std::move(r1)});
    out.emplace(ClassLabel::F4, NamedResidual{"F4", std::move(r4)});
    out.emplace(ClassLabel::F5, NamedResidual{"F5", std::move(r5)});
    out.emplace(ClassLabel::F11, NamedResidual{"F11", std::move(r11)});
    return out;
}

SpecialFlags special_flags(const PiManifoldInstance& inst, const Connection& lc) {
    const int d = inst.dim();
    const auto& phi = inst.structure.phi;
    const auto& g = inst.structure.metric.g;
    const NablaXiEta ne = nabla_xi_eta(inst, lc);

    SpecialFlags flags{true, true};
    for (int x = 0; x < d && flags.paracontact; ++x)
        for (int y = 0; y < d; ++y) {
            Rational gphi = 0;
            for (int a = 0; a < d; ++a) gphi += g(x, a) * phi(a, y);
            if (2 * gphi != ne.nabla_eta(x, y) + ne.nabla_eta(y, x)) {
                flags.paracontact = false;
                break;
            }
        }
    for (int i = 0; i < d && flags.para_sasaki; ++i)
        for (int l = 0; l < d; ++l)
            if (phi(l, i) != ne.nabla_xi(l, i)) {
                flags.para_sasaki = false;
                break;
            }
    return flags;
}

ClassificationReport classify(const PiManifoldInstance& inst) {
    const Connection lc = koszul_levi_civita(inst);
    const Tensor F = fundamental_tensor(inst, lc);
    const LeeForms lee = lee_forms(inst, F);

    ClassificationReport rep;
    rep.residuals = class_residuals(inst, F, lee);
    rep.theta_xi = form_at_vector(lee.theta, inst.structure.xi);
    rep.theta_star_xi = form_at_vector(lee.theta_star, inst.structure.xi);

    if (F.is_zero()) {
        rep.label = ClassLabel::F0;
    } else {
        for (ClassLabel l : {ClassLabel::F1, ClassLabel::F4, ClassLabel::F5, ClassLabel::F11})
            if (rep.residuals.at(l).residual.is_zero()) rep.zero_residual_labels.push_back(l);
        rep.label = rep.zero_residual_labels.size() == 1 ? rep.zero_residual_labels.front()
                                                         : ClassLabel::Unresolved;
    }

    const SpecialFlags flags = special_flags(inst, lc);
    rep.paracontact = flags.paracontact;
    rep.para_sasaki = flags.para_sasaki;
    rep.f4_prime =
        rep.label == ClassLabel::F4 && rep.theta_xi == Rational(-2 * inst.structure.n);
    return rep;
}

}  // namespace pim
