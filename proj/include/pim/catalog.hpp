#pragma once

#include "pim/manifold.hpp"

#include <vector>

namespace pim {

struct ExampleParams {
    Rational lambda;
    Rational mu;
};

// The 5-dimensional Lie group with the invariant Pi-structure: brackets
// [e_0,e_1] = lambda e_2 - e_3 + mu e_4 and companions, phi swapping
// e_1<->e_3 and e_2<->e_4, xi = e_0, orthonormal g.
PiManifoldInstance build_section5(const ExampleParams& params);

// Abelian d=5 and d=3 instances plus the parametric family at the default
// sample set.
std::vector<PiManifoldInstance> build_catalog();

}  // namespace pim
