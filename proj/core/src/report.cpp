#include "mixnorm/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace mixnorm {

std::string render_report_json(const std::string& version,
                               const std::map<std::string, std::string>& config_echo,
                               std::vector<CheckResult> checks) {
    std::sort(checks.begin(), checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    nlohmann::ordered_json root;
    root["version"] = version;
    nlohmann::ordered_json echo = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config_echo) echo[k] = v;
    root["config_echo"] = echo;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["paper_ref"] = c.reference;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.params) params[k] = v;
        for (const auto& [k, v] : c.notes) params[k] = v;
        jc["params"] = params;
        jc["observed"] = c.observed;
        jc["bound_or_reference"] = c.bound;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        arr.push_back(jc);
    }
    root["checks"] = arr;
    return root.dump(2) + "\n";
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace mixnorm
