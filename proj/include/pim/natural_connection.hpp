#pragma once

#include "pim/classifier.hpp"
#include "pim/connection.hpp"
#include "pim/levi_civita.hpp"
#include "pim/manifold.hpp"

#include <vector>

namespace pim {

struct Potential {
    Tensor Q;   // (1,2): Q(x,y) = D1_x y - nabla_x y, layout (l; i, j)
    Tensor Q3;  // (0,3): g(Q(x,y), z)
};

struct TorsionData {
    Tensor T;       // (1,2), antisymmetric in the covariant pair
    Tensor T3;      // (0,3)
    Tensor t;       // (0,1)
    Tensor t_star;  // (0,1)
    Tensor t_hat;   // (0,1)
};

// Q(x,y) = -1/2 {(nabla_x phi) phi y - (nabla_x eta)(y) xi} - eta(y) nabla_x xi.
// Both Proposition-3.2 conditions are asserted on the result.
Potential first_natural_potential(const PiManifoldInstance& instance, const Connection& lc,
                                  const Tensor& F);

// Gamma-dot = Gamma + Q; parallelism of phi, g, xi, eta, g-tilde is asserted.
Connection first_natural_connection(const PiManifoldInstance& instance, const Connection& lc,
                                    const Potential& potential);

// Residuals of D phi, D g, D xi, D eta, D g-tilde for an arbitrary connection.
std::vector<NamedResidual> naturality_residuals(const PiManifoldInstance& instance,
                                                const Connection& conn);

// T(x,y) = D_x y - D_y x - [x,y] plus the full-frame torsion forms.
TorsionData torsion(const PiManifoldInstance& instance, const Connection& conn);

// Alternative evaluations of the D1 torsion, each subtracted from the direct
// tensor: the F-expression, the (N, N_assoc)-expression, and the per-class
// torsion-form expression when label names a main class.
std::vector<NamedResidual> torsion_crosschecks(const PiManifoldInstance& instance,
                                               const TorsionData& torsion, const Tensor& F,
                                               const NijenhuisPair& nijenhuis,
                                               const LeeForms& lee_forms, ClassLabel label);

// The eight relations between the D1 torsion forms and the Lee forms.
std::vector<NamedResidual> torsion_form_relations(const PiManifoldInstance& instance,
                                                  const LeeForms& lee_forms,
                                                  const TorsionData& torsion);

// R-dot = R + antisymmetrized nabla-Q + Q-quadratic terms; equality with the
// direct D1 curvature is asserted (it is an expansion identity).
Tensor curvature_via_potential(const PiManifoldInstance& instance,
                               const CurvatureBundle& lc_bundle, const Potential& potential,
                               const Connection& lc);

// Per-class closed forms. UnsupportedClass unless label is a main class.
Connection closed_form_connection(const PiManifoldInstance& instance, ClassLabel label,
                                  const LeeForms& lee_forms);
Tensor closed_form_torsion(const PiManifoldInstance& instance, ClassLabel label,
                           const LeeForms& lee_forms);

struct ClosedFormCurvature {
    Tensor value;  // (0,4) theorem-row evaluation
    std::vector<NamedResidual> auxiliary;  // materialized S-tensors, when the row has them
};
ClosedFormCurvature closed_form_curvature(const PiManifoldInstance& instance, ClassLabel label,
                                          const LeeForms& lee_forms, const Connection& lc,
                                          const CurvatureBundle& lc_bundle);

struct RicciClosedForm {
    Tensor rho_formula;       // (0,2)
    Tensor rho_star_formula;  // (0,2)
    Rational tau_formula;
    Rational tau_star_formula;
    Tensor rho_residual;       // formula minus direct
    Tensor rho_star_residual;  // formula minus direct
    Rational tau_residual;
    Rational tau_star_residual;
};
RicciClosedForm closed_form_ricci(const PiManifoldInstance& instance, ClassLabel label,
                                  const LeeForms& lee_forms, const Connection& lc,
                                  const CurvatureBundle& lc_bundle,
                                  const CurvatureBundle& fnc_bundle);

struct Divergences {
    Rational div;
    Rational div_star;
};
// Div(a) = g^{ij} (nabla_{b_i} a)(b_j), Div*(a) = g^{ij} (nabla_{b_i} a)(phi b_j).
Divergences divergences(const PiManifoldInstance& instance, const Tensor& form,
                        const Connection& lc);

}  // namespace pim
