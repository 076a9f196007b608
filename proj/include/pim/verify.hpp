#pragma once

#include "pim/classifier.hpp"
#include "pim/levi_civita.hpp"
#include "pim/natural_connection.hpp"

#include <string>
#include <vector>

namespace pim {

enum class Category { HardInvariant, PaperCrosscheck };
enum class Status { Holds, Residual, Skipped };

std::string to_string(Category c);
std::string to_string(Status s);

struct IdentityReport {
    std::string id;
    Category category;
    Status status = Status::Holds;
    Rational max_abs_residual;
    std::vector<int> witness;  // worst offending index tuple when status = residual
};

// Everything the suites need, computed once per instance.
struct Analysis {
    PiManifoldInstance instance;
    ValidationOutcome validation;
    Connection lc;
    FundamentalData fd;
    NablaXiEta nabla;
    CurvatureBundle lc_bundle;
    Potential potential;
    Connection fnc;
    TorsionData fnc_torsion;
    CurvatureBundle fnc_bundle;
    Tensor r_via_potential;
    ClassificationReport classification;
};

Analysis analyze(const PiManifoldInstance& instance);

// Provable identities; a residual here is an engine bug.
std::vector<IdentityReport> run_identity_suite(const Analysis& a);
std::vector<IdentityReport> run_crosscheck_suite(const Analysis& a);

inline std::vector<IdentityReport> run_identity_suite(const PiManifoldInstance& inst) {
    return run_identity_suite(analyze(inst));
}
inline std::vector<IdentityReport> run_crosscheck_suite(const PiManifoldInstance& inst) {
    return run_crosscheck_suite(analyze(inst));
}

bool any_hard_residual(const std::vector<IdentityReport>& reports);

}  // namespace pim
