#pragma once

#include "pim/tensor.hpp"

#include <string>
#include <vector>

namespace pim {

// Lie algebra by structure constants: [b_i, b_j] = C[i][j][k] b_k.
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(int dim)
        : dim_(dim), c_(static_cast<std::size_t>(dim) * dim * dim) {}

    int dim() const { return dim_; }
    Rational& bracket(int i, int j, int k) { return c_[flat(i, j, k)]; }
    const Rational& bracket(int i, int j, int k) const { return c_[flat(i, j, k)]; }

    bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

private:
    std::size_t flat(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
    }
    int dim_ = 0;
    std::vector<Rational> c_;
};

// Invariant (phi, xi, eta, g) in the fixed frame. phi is stored as a (1,1)
// tensor with phi(k, j) = (phi b_j)^k.
struct PiStructure {
    Tensor phi;  // (1,1)
    Tensor xi;   // (1,0)
    Tensor eta;  // (0,1)
    MetricPair metric;
    int n = 0;  // dim = 2n+1
};

struct PiManifoldInstance {
    LieAlgebra algebra;
    PiStructure structure;
    std::string name;

    int dim() const { return algebra.dim(); }

    bool operator==(const PiManifoldInstance& o) const {
        return algebra == o.algebra && structure.phi == o.structure.phi &&
               structure.xi == o.structure.xi && structure.eta == o.structure.eta &&
               structure.metric.g == o.structure.metric.g &&
               structure.n == o.structure.n && name == o.name;
    }
};

struct NamedResidual {
    std::string name;
    Tensor residual;
};

struct ValidationOutcome {
    std::vector<NamedResidual> residuals;
    bool all_zero = false;
};

// One residual per structure identity plus bracket antisymmetry and Jacobi.
ValidationOutcome validate(const PiManifoldInstance& instance);

struct DerivedMetrics {
    Tensor g_tilde;        // g(x, phi y) + eta(x) eta(y)
    Tensor g_star;         // g(x, phi y)
    Tensor g_double_star;  // g(phi x, phi y)
};
DerivedMetrics derived_metrics(const PiManifoldInstance& instance);

struct Projection {
    Tensor horizontal;  // phi^2 x
    Tensor vertical;    // eta(x) xi
};
Projection project(const PiManifoldInstance& instance, const Tensor& x);

// phi applied to a covariant slot: out(.., j, ..) = sum_m t(.., m, ..) phi(m, j).
Tensor phi_into_slot(const Tensor& t, const Tensor& phi, int cov_slot);

// phi applied to a vector: (phi v)^l = phi(l, m) v^m.
Tensor phi_apply(const Tensor& phi, const Tensor& v);

// eta-contraction of a covariant slot with a vector v: plugs v into cov_slot.
Tensor plug_vector(const Tensor& t, const Tensor& v, int cov_slot);

}  // namespace pim
