#pragma once

#include <stdexcept>

namespace pim {

struct DimMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SlotMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingMetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularMetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSymmetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A proven identity failed: signals an engine bug, never a finding.
struct LemmaViolation : std::logic_error {
    using std::logic_error::logic_error;
};
struct NaturalityViolation : std::logic_error {
    using std::logic_error::logic_error;
};
struct IdentityViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct UnsupportedClass : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pim
