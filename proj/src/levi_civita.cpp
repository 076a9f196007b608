#include "pim/levi_civita.hpp"

#include "pim/errors.hpp"

namespace pim {

namespace {

// g([b_i, b_j], b_k)
Rational bracket_lowered(const PiManifoldInstance& inst, int i, int j, int k) {
    const int d = inst.dim();
    Rational s = 0;
    for (int m = 0; m < d; ++m) s += inst.algebra.bracket(i, j, m) * inst.structure.metric.g(m, k);
    return s;
}

}  // namespace

Connection koszul_levi_civita(const PiManifoldInstance& inst) {
    const int d = inst.dim();
    const auto& mp = inst.structure.metric;
    Connection lc(d, "levi-civita");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // 2 g(nabla_i b_j, b_k) = g([i,j],k) - g([j,k],i) + g([k,i],j)
            std::vector<Rational> rhs(static_cast<std::size_t>(d));
            for (int k = 0; k < d; ++k)
                rhs[static_cast<std::size_t>(k)] =
                    (bracket_lowered(inst, i, j, k) - bracket_lowered(inst, j, k, i) +
                     bracket_lowered(inst, k, i, j)) /
                    2;
            for (int l = 0; l < d; ++l) {
                Rational s = 0;
                for (int k = 0; k < d; ++k) s += rhs[static_cast<std::size_t>(k)] * mp.g_inv(k, l);
                lc.coef(i, j, l) = s;
            }
        }

    // Torsion-free and metric compatible by construction; a failure here is
    // an engine bug.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l)
                if (lc.coef(i, j, l) - lc.coef(j, i, l) != inst.algebra.bracket(i, j, l))
                    throw IdentityViolation("Levi-Civita connection is not torsion-free");
    if (!covariant_derivative(mp.g, lc).is_zero())
        throw IdentityViolation("Levi-Civita connection is not metric compatible");
    return lc;
}

Tensor fundamental_tensor(const PiManifoldInstance& inst, const Connection& lc) {
    const Tensor nphi = covariant_derivative(inst.structure.phi, lc);  // (1,2): (l; i, j)
    return lower_upper(nphi, inst.structure.metric);                   // (0,3): (i, j, k)
}

LeeForms lee_forms(const PiManifoldInstance& inst, const Tensor& F) {
    const auto& mp = inst.structure.metric;
    const auto& phi = inst.structure.phi;
    const auto& xi = inst.structure.xi;
    LeeForms lf;
    lf.theta = contract(F, 0, 1, mp);
    lf.theta_star = contract(phi_into_slot(F, phi, 1), 0, 1, mp);
    lf.omega = plug_vector(plug_vector(F, xi, 0), xi, 0);
    lf.theta_sharp = sharp(lf.theta, mp);
    lf.omega_sharp = sharp(lf.omega, mp);
    return lf;
}

NablaXiEta nabla_xi_eta(const PiManifoldInstance& inst, const Connection& lc) {
    const int d = inst.dim();
    NablaXiEta r{covariant_derivative(inst.structure.xi, lc),
                 covariant_derivative(inst.structure.eta, lc)};
    const auto& g = inst.structure.metric.g;
    const auto& eta = inst.structure.eta;
    for (int i = 0; i < d; ++i) {
        Rational etan = 0;
        for (int l = 0; l < d; ++l) etan += eta(l) * r.nabla_xi(l, i);
        if (etan != 0) throw LemmaViolation("eta(nabla_x xi) != 0");
        for (int j = 0; j < d; ++j) {
            Rational s = 0;
            for (int l = 0; l < d; ++l) s += r.nabla_xi(l, i) * g(l, j);
            if (s != r.nabla_eta(i, j))
                throw LemmaViolation("(nabla_x eta)(y) != g(nabla_x xi, y)");
        }
    }
    const Tensor F = fundamental_tensor(inst, lc);
    const Tensor Fphi_xi =
        plug_vector(phi_into_slot(F, inst.structure.phi, 1), inst.structure.xi, 2);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (Fphi_xi(i, j) != -r.nabla_eta(i, j))
                throw LemmaViolation("F(x, phi y, xi) != -(nabla_x eta)(y)");
    return r;
}

NijenhuisPair nijenhuis_pair(const PiManifoldInstance& inst, const Connection& lc) {
    const int d = inst.dim();
    const auto& phi = inst.structure.phi;
    const auto& xi = inst.structure.xi;
    const Tensor nphi = covariant_derivative(phi, lc);  // (l; i, j)
    const Tensor neta = covariant_derivative(inst.structure.eta, lc);

    // half(l; x, y) = (nabla_{phi x} phi)y - phi (nabla_x phi)y - (nabla_x eta)(y) xi
    Tensor half(d, 1, 2);
    for (int l = 0; l < d; ++l)
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                Rational s = 0;
                for (int i = 0; i < d; ++i) s += phi(i, x) * nphi(l, i, y);
                for (int m = 0; m < d; ++m) s -= phi(l, m) * nphi(m, x, y);
                s -= neta(x, y) * xi(l);
                half(l, x, y) = s;
            }

    Tensor N(d, 1, 2), Na(d, 1, 2);
    for (int l = 0; l < d; ++l)
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                N(l, x, y) = half(l, x, y) - half(l, y, x);
                Na(l, x, y) = half(l, x, y) + half(l, y, x);
            }
    return {lower_upper(N, inst.structure.metric), lower_upper(Na, inst.structure.metric)};
}

Tensor reconstruct_F(const Tensor& N, const Tensor& N_assoc, const PiManifoldInstance& inst) {
    const int d = inst.dim();
    const auto& phi = inst.structure.phi;
    const auto& xi = inst.structure.xi;
    const auto& eta = inst.structure.eta;

    const Tensor Nph0 = phi_into_slot(N, phi, 0);    // N(phi x, y, z)
    const Tensor Naph0 = phi_into_slot(N_assoc, phi, 0);
    const Tensor Nxi = plug_vector(N, xi, 0);        // N(xi, y, z) as (0,2)
    const Tensor Naxi = plug_vector(N_assoc, xi, 0);
    const Tensor Nxi_ph = phi_into_slot(Nxi, phi, 1);    // N(xi, y, phi z)
    const Tensor Naxi_ph = phi_into_slot(Naxi, phi, 1);  // Ntilde(xi, y, phi z)
    const Tensor Naxixi = plug_vector(Naxi, xi, 0);      // Ntilde(xi, xi, .) as (0,1)
    const Tensor Naxixi_ph = phi_into_slot(Naxixi, phi, 0);  // Ntilde(xi, xi, phi y)

    Tensor F(d, 0, 3);
    const Rational quarter(1, 4), half(1, 2);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                Rational s = quarter * (Nph0(x, y, z) + Nph0(x, z, y) + Naph0(x, y, z) +
                                        Naph0(x, z, y));
                s -= half * eta(x) *
                     (Nxi_ph(y, z) + Naxi_ph(y, z) + eta(z) * Naxixi_ph(y));
                F(x, y, z) = s;
            }
    return F;
}

CurvatureBundle curvature_bundle(const PiManifoldInstance& inst, const Connection& conn) {
    const int d = inst.dim();
    const auto& mp = inst.structure.metric;
    const auto& C = inst.algebra;

    // R(b_i, b_j) b_k = D_i D_j b_k - D_j D_i b_k - D_{[b_i,b_j]} b_k
    Tensor Rup(d, 1, 3);  // (l; i, j, k)
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    Rational s = 0;
                    for (int m = 0; m < d; ++m)
                        s += conn.coef(i, m, l) * conn.coef(j, k, m) -
                             conn.coef(j, m, l) * conn.coef(i, k, m) -
                             C.bracket(i, j, m) * conn.coef(m, k, l);
                    Rup(l, i, j, k) = s;
                }

    CurvatureBundle b;
    b.connection_label = conn.label();
    b.R = lower_upper(Rup, mp);  // (i, j, k, w)
    b.ricci = contract(b.R, 0, 3, mp);
    b.tau = contract(b.ricci, 0, 1, mp).scalar();
    b.ricci_star = contract(phi_into_slot(b.R, inst.structure.phi, 3), 0, 3, mp);
    b.tau_star = contract(b.ricci_star, 0, 1, mp).scalar();
    return b;
}

FundamentalData compute_fundamental(const PiManifoldInstance& inst, const Connection& lc) {
    FundamentalData fd;
    fd.F = fundamental_tensor(inst, lc);
    fd.lee = lee_forms(inst, fd.F);
    auto nij = nijenhuis_pair(inst, lc);
    fd.N = std::move(nij.N);
    fd.N_assoc = std::move(nij.N_assoc);
    return fd;
}

}  // namespace pim
