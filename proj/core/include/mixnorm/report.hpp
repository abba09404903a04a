#pragma once

// Structured check results and their deterministic JSON rendering.
// Identical inputs produce byte-identical report text.

#include <map>
#include <string>
#include <vector>

namespace mixnorm {

struct CheckResult {
    std::string id;
    std::string reference;  // slug of the identity or estimate being checked
    std::map<std::string, double> params;
    std::map<std::string, std::string> notes;
    double observed = 0.0;
    double bound = 0.0;  // reference value or tolerance target
    double tolerance = 0.0;
    bool pass = false;
};

// Report schema:
// {version, config_echo, checks:[{id, paper_ref, params, observed,
//  bound_or_reference, tolerance, pass}]} with checks sorted by id.
std::string render_report_json(const std::string& version,
                               const std::map<std::string, std::string>& config_echo,
                               std::vector<CheckResult> checks);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace mixnorm
