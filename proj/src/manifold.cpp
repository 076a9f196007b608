#include "pim/manifold.hpp"

#include "pim/errors.hpp"

namespace pim {

Tensor phi_into_slot(const Tensor& t, const Tensor& phi, int cov_slot) {
    const int d = t.dim();
    const int pos = t.con_rank() + cov_slot;
    if (cov_slot < 0 || cov_slot >= t.cov_rank()) throw SlotMismatch("phi_into_slot: bad slot");
    Tensor out(d, t.con_rank(), t.cov_rank());
    std::vector<int> oidx(static_cast<std::size_t>(t.rank()), 0);
    std::vector<int> tidx = oidx;
    do {
        Rational s = 0;
        tidx = oidx;
        const int j = oidx[static_cast<std::size_t>(pos)];
        for (int m = 0; m < d; ++m) {
            if (phi(m, j) == 0) continue;
            tidx[static_cast<std::size_t>(pos)] = m;
            s += t.at(tidx) * phi(m, j);
        }
        out.at(oidx) = s;
    } while (Tensor::next_index(oidx, d));
    return out;
}

Tensor phi_apply(const Tensor& phi, const Tensor& v) {
    const int d = v.dim();
    if (v.con_rank() != 1 || v.cov_rank() != 0) throw SlotMismatch("phi_apply expects a vector");
    Tensor out(d, 1, 0);
    for (int l = 0; l < d; ++l) {
        Rational s = 0;
        for (int m = 0; m < d; ++m) s += phi(l, m) * v(m);
        out(l) = s;
    }
    return out;
}

Tensor plug_vector(const Tensor& t, const Tensor& v, int cov_slot) {
    const int d = t.dim();
    if (cov_slot < 0 || cov_slot >= t.cov_rank()) throw SlotMismatch("plug_vector: bad slot");
    const int pos = t.con_rank() + cov_slot;
    Tensor out(d, t.con_rank(), t.cov_rank() - 1);
    std::vector<int> oidx(static_cast<std::size_t>(out.rank()), 0);
    std::vector<int> tidx(static_cast<std::size_t>(t.rank()), 0);
    do {
        for (int p = 0, q = 0; p < t.rank(); ++p)
            if (p != pos) tidx[static_cast<std::size_t>(p)] = oidx[static_cast<std::size_t>(q++)];
        Rational s = 0;
        for (int m = 0; m < d; ++m) {
            if (v(m) == 0) continue;
            tidx[static_cast<std::size_t>(pos)] = m;
            s += v(m) * t.at(tidx);
        }
        out.at(oidx) = s;
    } while (Tensor::next_index(oidx, d));
    return out;
}

namespace {

void check_shapes(const PiManifoldInstance& inst) {
    const int d = inst.algebra.dim();
    const PiStructure& s = inst.structure;
    if (s.phi.dim() != d || s.xi.dim() != d || s.eta.dim() != d || s.metric.g.dim() != d)
        throw DimMismatch("structure dimension does not match algebra dimension");
    if (s.phi.con_rank() != 1 || s.phi.cov_rank() != 1 || s.xi.con_rank() != 1 ||
        s.xi.cov_rank() != 0 || s.eta.con_rank() != 0 || s.eta.cov_rank() != 1)
        throw DimMismatch("structure tensor ranks are malformed");
    if (d != 2 * s.n + 1) throw DimMismatch("dim must equal 2n+1");
}

}  // namespace

ValidationOutcome validate(const PiManifoldInstance& inst) {
    check_shapes(inst);
    const int d = inst.dim();
    const auto& C = inst.algebra;
    const auto& phi = inst.structure.phi;
    const auto& xi = inst.structure.xi;
    const auto& eta = inst.structure.eta;
    const auto& g = inst.structure.metric.g;

    ValidationOutcome out;
    auto add = [&out](std::string name, Tensor r) {
        out.residuals.push_back({std::move(name), std::move(r)});
    };

    {
        Tensor r(d, 0, 3);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) r(i, j, k) = C.bracket(i, j, k) + C.bracket(j, i, k);
        add("bracket-antisymmetry", r);
    }
    {
        Tensor r(d, 0, 4);  // indexed (i, j, l, k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int l = 0; l < d; ++l)
                    for (int k = 0; k < d; ++k) {
                        Rational s = 0;
                        for (int m = 0; m < d; ++m)
                            s += C.bracket(j, l, m) * C.bracket(i, m, k) +
                                 C.bracket(l, i, m) * C.bracket(j, m, k) +
                                 C.bracket(i, j, m) * C.bracket(l, m, k);
                        r(i, j, l, k) = s;
                    }
        add("jacobi", r);
    }
    add("phi-xi", phi_apply(phi, xi));
    {
        Tensor r(d, 1, 1);
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < d; ++j) {
                Rational s = 0;
                for (int m = 0; m < d; ++m) s += phi(k, m) * phi(m, j);
                r(k, j) = s - (k == j ? Rational(1) : Rational(0)) + eta(j) * xi(k);
            }
        add("phi-squared", r);
    }
    {
        Tensor r(d, 0, 1);
        for (int j = 0; j < d; ++j) {
            Rational s = 0;
            for (int m = 0; m < d; ++m) s += eta(m) * phi(m, j);
            r(j) = s;
        }
        add("eta-phi", r);
    }
    {
        Tensor r(d, 0, 0);
        Rational s = 0;
        for (int m = 0; m < d; ++m) s += eta(m) * xi(m);
        r.scalar() = s - 1;
        add("eta-xi", r);
    }
    {
        Tensor r(d, 0, 0);
        Rational tr = 0;
        for (int m = 0; m < d; ++m) tr += phi(m, m);
        r.scalar() = tr;
        add("trace-phi", r);
    }
    {
        Tensor r(d, 0, 2);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                Rational gphph = 0;
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b) gphph += g(a, b) * phi(a, x) * phi(b, y);
                r(x, y) = gphph - g(x, y) + eta(x) * eta(y);
            }
        add("phi-compatibility", r);
    }
    {
        Tensor r(d, 0, 2);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                Rational lhs = 0, rhs = 0;
                for (int a = 0; a < d; ++a) {
                    lhs += g(a, y) * phi(a, x);
                    rhs += g(x, a) * phi(a, y);
                }
                r(x, y) = lhs - rhs;
            }
        add("phi-self-adjoint", r);
    }
    {
        Tensor r(d, 0, 1);
        for (int x = 0; x < d; ++x) {
            Rational s = 0;
            for (int a = 0; a < d; ++a) s += g(x, a) * xi(a);
            r(x) = s - eta(x);
        }
        add("xi-metric-dual", r);
    }
    {
        Tensor r(d, 0, 0);
        Rational s = 0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) s += g(a, b) * xi(a) * xi(b);
        r.scalar() = s - 1;
        add("xi-unit", r);
    }
    {
        Tensor r(d, 0, 2);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) r(i, j) = g(i, j) - g(j, i);
        add("metric-symmetry", r);
    }

    out.all_zero = true;
    for (const auto& nr : out.residuals)
        if (!nr.residual.is_zero()) out.all_zero = false;
    return out;
}

DerivedMetrics derived_metrics(const PiManifoldInstance& inst) {
    const int d = inst.dim();
    const auto& phi = inst.structure.phi;
    const auto& eta = inst.structure.eta;
    const auto& g = inst.structure.metric.g;
    DerivedMetrics m{Tensor(d, 0, 2), Tensor(d, 0, 2), Tensor(d, 0, 2)};
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            Rational gstar = 0, gss = 0;
            for (int a = 0; a < d; ++a) gstar += g(x, a) * phi(a, y);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) gss += g(a, b) * phi(a, x) * phi(b, y);
            m.g_star(x, y) = gstar;
            m.g_tilde(x, y) = gstar + eta(x) * eta(y);
            m.g_double_star(x, y) = gss;
        }
    return m;
}

Projection project(const PiManifoldInstance& inst, const Tensor& x) {
    const int d = inst.dim();
    if (x.dim() != d || x.con_rank() != 1 || x.cov_rank() != 0)
        throw SlotMismatch("project expects a vector of matching dimension");
    const auto& phi = inst.structure.phi;
    const auto& xi = inst.structure.xi;
    const auto& eta = inst.structure.eta;
    Projection p{phi_apply(phi, phi_apply(phi, x)), Tensor(d, 1, 0)};
    Rational ex = 0;
    for (int m = 0; m < d; ++m) ex += eta(m) * x(m);
    for (int l = 0; l < d; ++l) p.vertical(l) = ex * xi(l);
    return p;
}

}  // namespace pim
