#pragma once

#include "pim/classifier.hpp"
#include "pim/verify.hpp"

#include <map>
#include <string>
#include <vector>

namespace pim {

// { "instance", "params", "classification", "reports" } with fixed key order;
// rationals serialize as "p" or "p/q" strings so reruns are byte-identical.
std::string render_report(const std::string& instance_name,
                          const std::map<std::string, Rational>& params,
                          const ClassificationReport& classification,
                          const std::vector<IdentityReport>& reports);

}  // namespace pim
