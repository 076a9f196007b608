#include "pim/report_json.hpp"

#include <json.hpp>

namespace pim {

std::string render_report(const std::string& instance_name,
                          const std::map<std::string, Rational>& params,
                          const ClassificationReport& cls,
                          const std::vector<IdentityReport>& reports) {
    nlohmann::ordered_json j;
    j["instance"] = instance_name;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) j["params"][k] = to_string(v);

    nlohmann::ordered_json c;
    c["label"] = to_string(cls.label);
    c["theta_xi"] = to_string(cls.theta_xi);
    c["theta_star_xi"] = to_string(cls.theta_star_xi);
    c["zero_residual_labels"] = nlohmann::ordered_json::array();
    for (ClassLabel l : cls.zero_residual_labels)
        c["zero_residual_labels"].push_back(to_string(l));
    c["f4_prime"] = cls.f4_prime;
    c["para_sasaki"] = cls.para_sasaki;
    c["paracontact"] = cls.paracontact;
    j["classification"] = std::move(c);

    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json e;
        e["id"] = r.id;
        e["category"] = to_string(r.category);
        e["status"] = to_string(r.status);
        e["max_abs_residual"] = to_string(r.max_abs_residual);
        e["witness"] = r.witness;
        j["reports"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

}  // namespace pim
