#pragma once

#include "pim/connection.hpp"
#include "pim/manifold.hpp"

namespace pim {

struct LeeForms {
    Tensor theta;        // (0,1)
    Tensor theta_star;   // (0,1)
    Tensor omega;        // (0,1)
    Tensor theta_sharp;  // (1,0)
    Tensor omega_sharp;  // (1,0)
};

struct FundamentalData {
    Tensor F;  // (0,3)
    LeeForms lee;
    Tensor N;        // (0,3), antisymmetric in the first two slots
    Tensor N_assoc;  // (0,3), symmetric in the first two slots
};

struct CurvatureBundle {
    Tensor R;      // (0,4), slot order R(x,y,z,w) = g(R(x,y)z, w)
    Tensor ricci;  // (0,2)
    Rational tau;
    Tensor ricci_star;  // (0,2)
    Rational tau_star;
    std::string connection_label;
};

// Koszul formula for left-invariant fields; asserts torsion-freeness and
// metric compatibility on the result.
Connection koszul_levi_civita(const PiManifoldInstance& instance);

// F(x,y,z) = g((nabla_x phi) y, z).
Tensor fundamental_tensor(const PiManifoldInstance& instance, const Connection& lc);

// Full-frame g^{ij} traces of F plus the metric sharps.
LeeForms lee_forms(const PiManifoldInstance& instance, const Tensor& F);

struct NablaXiEta {
    Tensor nabla_xi;   // (1,1): (nabla_{b_i} xi)^l at (l, i)
    Tensor nabla_eta;  // (0,2): (nabla_{b_i} eta)(b_j) at (i, j)
};
// Asserts the three Lemma 2.1 identities; LemmaViolation on failure.
NablaXiEta nabla_xi_eta(const PiManifoldInstance& instance, const Connection& lc);

struct NijenhuisPair {
    Tensor N;        // (0,3)
    Tensor N_assoc;  // (0,3)
};
NijenhuisPair nijenhuis_pair(const PiManifoldInstance& instance, const Connection& lc);

// F rebuilt from the (N, N_assoc) pair; equals fundamental_tensor on every
// valid instance, the comparison is reported by the verify module.
Tensor reconstruct_F(const Tensor& N, const Tensor& N_assoc,
                     const PiManifoldInstance& instance);

CurvatureBundle curvature_bundle(const PiManifoldInstance& instance, const Connection& conn);

FundamentalData compute_fundamental(const PiManifoldInstance& instance, const Connection& lc);

}  // namespace pim
