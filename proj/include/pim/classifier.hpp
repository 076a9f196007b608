#pragma once

#include "pim/levi_civita.hpp"
#include "pim/manifold.hpp"

#include <map>
#include <string>
#include <vector>

namespace pim {

enum class ClassLabel { F0, F1, F4, F5, F11, Unresolved };

std::string to_string(ClassLabel label);

struct ClassificationReport {
    std::map<ClassLabel, NamedResidual> residuals;
    std::vector<ClassLabel> zero_residual_labels;  // main classes only
    ClassLabel label = ClassLabel::Unresolved;
    Rational theta_xi;
    Rational theta_star_xi;
    bool f4_prime = false;
    bool para_sasaki = false;
    bool paracontact = false;
};

// The closed-form RHS of a main class evaluated from the instance's own Lee
// forms, subtracted from F. The F0 residual is F itself.
std::map<ClassLabel, NamedResidual> class_residuals(const PiManifoldInstance& instance,
                                                    const Tensor& F, const LeeForms& lee);

struct SpecialFlags {
    bool paracontact = false;  // 2 g(x, phi y) = (nabla_x eta)(y) + (nabla_y eta)(x)
    bool para_sasaki = false;  // phi b_i = nabla_{b_i} xi
};
SpecialFlags special_flags(const PiManifoldInstance& instance, const Connection& lc);

ClassificationReport classify(const PiManifoldInstance& instance);

}  // namespace pim
