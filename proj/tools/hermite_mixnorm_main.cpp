// Command-line driver: verification suites, the Riesz-means scan,
// multiplier experiments and g-function reports.  Emits JSON reports and
// RFC 4180 CSV tables; identical seed and configuration give byte-identical
// artifacts.  Exit codes: 0 pass, 1 check failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mixnorm/analysis.hpp"
#include "mixnorm/report.hpp"
#include "mixnorm/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::map<std::string, std::string> config_echo(const mixnorm::RunConfig& cfg,
                                               const std::string& extra_key = "",
                                               const std::string& extra_val = "") {
    std::map<std::string, std::string> echo;
    echo["n"] = std::to_string(cfg.n);
    echo["seed"] = std::to_string(cfg.seed);
    echo["radial_nodes"] = std::to_string(cfg.radial_nodes);
    echo["r_max"] = format_double(cfg.r_max);
    echo["m_max"] = std::to_string(cfg.m_max);
    echo["level_max"] = std::to_string(cfg.level_max);
    echo["tol_scale"] = format_double(cfg.tol_scale);
    if (!extra_key.empty()) echo[extra_key] = extra_val;
    return echo;
}

void write_text_file(const std::string& dir, const std::string& name,
                     const std::string& content) {
    std::filesystem::create_directories(dir);
    std::ofstream os(std::filesystem::path(dir) / name, std::ios::binary);
    os << content;
}

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t next = csv.find(',', pos);
        if (next == std::string::npos) next = csv.size();
        out.push_back(std::stod(csv.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

mixnorm::MultiplierSpec load_multiplier_spec(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw CLI::ValidationError("--spec-file", "cannot open " + path);
    nlohmann::json j;
    is >> j;
    const std::string family = j.at("family").get<std::string>();
    if (family == "imaginary-power")
        return mixnorm::multiplier_imaginary_power(j.value("tau", 1.0));
    if (family == "riesz-mean")
        return mixnorm::multiplier_riesz_mean(j.at("R").get<double>(),
                                              j.value("delta", 1.0));
    if (family == "semigroup") return mixnorm::multiplier_semigroup(j.value("t", 0.5));
    if (family == "tabulated")
        return mixnorm::multiplier_tabulated(j.at("values").get<std::vector<double>>());
    throw CLI::ValidationError("--spec-file", "unknown multiplier family: " + family);
}

int cmd_verify(const std::string& suite, const mixnorm::RunConfig& cfg,
               const std::string& out_dir) {
    const auto checks = mixnorm::run_suite(suite, cfg);
    for (const auto& c : checks)
        std::printf("[%s] %-42s observed=%.6g tol=%.3g\n", c.pass ? "PASS" : "FAIL",
                    c.id.c_str(), c.observed, c.bound);
    const std::string report =
        mixnorm::render_report_json(kVersion, config_echo(cfg, "suite", suite), checks);
    write_text_file(out_dir, "verify-" + suite + ".json", report);
    const bool ok = mixnorm::all_pass(checks);
    std::printf("%s: %zu checks, %s\n", suite.c_str(), checks.size(),
                ok ? "all passed" : "FAILURES present");
    return ok ? 0 : 1;
}

int cmd_riesz_scan(int n, const std::vector<double>& deltas, const std::vector<double>& ps,
                   const std::vector<double>& Rs, const mixnorm::RunConfig& cfg,
                   const std::string& out_dir) {
    const auto result = mixnorm::riesz_scan(n, deltas, ps, Rs, cfg);
    std::string csv = "kind,n,delta,p,R,norm_lower_bound,trial_id_of_max\r\n";
    char buf[256];
    for (const auto& w : result.windows) {
        std::snprintf(buf, sizeof(buf), "window,%d,%.12g,%.12g,,,\r\n", n, w.delta, w.p_lo);
        csv += buf;
        if (w.bounded_above) {
            std::snprintf(buf, sizeof(buf), "window,%d,%.12g,%.12g,,,\r\n", n, w.delta, w.p_hi);
            csv += buf;
        }
    }
    for (const auto& row : result.rows) {
        std::snprintf(buf, sizeof(buf), "probe,%d,%.12g,%.12g,%.12g,%.12g,%s\r\n", row.n,
                      row.delta, row.p, row.R, row.norm_lower_bound, row.trial_id.c_str());
        csv += buf;
    }
    write_text_file(out_dir, "riesz-scan.csv", csv);
    std::printf("riesz-scan: %zu probe rows, %zu window rows -> %s/riesz-scan.csv\n",
                result.rows.size(), result.windows.size(), out_dir.c_str());
    return 0;
}

int cmd_multiplier(const std::string& spec_file, const std::vector<double>& ps,
                   bool require_condition, const mixnorm::RunConfig& cfg,
                   const std::string& out_dir) {
    const mixnorm::MultiplierSpec spec = load_multiplier_spec(spec_file);
    const auto result = mixnorm::run_multiplier(spec, ps, 10000, 4, cfg);
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    nlohmann::ordered_json echo;
    for (const auto& [k, v] : config_echo(cfg, "multiplier", spec.name)) echo[k] = v;
    j["config_echo"] = echo;
    j["condition_constants"] = result.condition.constants;
    j["condition_constants_short_scan"] = result.constants_short_scan;
    j["condition_noise_floor"] = result.noise_floor;
    j["condition_stable"] = result.condition_stable;
    nlohmann::ordered_json probes = nlohmann::ordered_json::array();
    std::string csv = "p,max_ratio,trial_id_of_max\r\n";
    char buf[160];
    for (const auto& row : result.probes) {
        nlohmann::ordered_json pr;
        pr["p"] = row.p;
        pr["max_ratio"] = row.max_ratio;
        pr["trial_id_of_max"] = row.trial_id;
        probes.push_back(pr);
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%s\r\n", row.p, row.max_ratio,
                      row.trial_id.c_str());
        csv += buf;
    }
    j["probes"] = probes;
    write_text_file(out_dir, "multiplier.json", j.dump(2) + "\n");
    write_text_file(out_dir, "multiplier.csv", csv);
    std::printf("multiplier %s: condition %s", spec.name.c_str(),
                result.condition_stable ? "stable" : "NOT stable");
    for (std::size_t i = 0; i < result.condition.constants.size(); ++i)
        std::printf("  C_%zu=%.4g", i, result.condition.constants[i]);
    std::printf("\n");
    if (require_condition && !result.condition_stable) return 1;
    return 0;
}

int cmd_gfun(int k, const std::vector<double>& ps, const mixnorm::RunConfig& cfg,
             const std::string& out_dir) {
    const auto result = mixnorm::run_gfun(k, ps, cfg);
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    nlohmann::ordered_json echo;
    for (const auto& [kk, v] : config_echo(cfg, "k", std::to_string(k))) echo[kk] = v;
    j["config_echo"] = echo;
    j["l2_ratio_reference"] = result.l2_ratio_reference;
    j["l2_ratio_max_err"] = result.l2_ratio_max_err;
    j["methods_max_rel_err"] = result.methods_max_rel_err;
    nlohmann::ordered_json brackets = nlohmann::ordered_json::array();
    for (const auto& b : result.brackets) {
        nlohmann::ordered_json jb;
        jb["p"] = b.p;
        jb["ratio_lo"] = b.lo;
        jb["ratio_hi"] = b.hi;
        brackets.push_back(jb);
    }
    j["p_brackets"] = brackets;
    write_text_file(out_dir, "gfun-k" + std::to_string(k) + ".json", j.dump(2) + "\n");
    std::printf("gfun k=%d: l2 ratio err=%.3g (ref %.8g), methods err=%.3g\n", k,
                result.l2_ratio_max_err, result.l2_ratio_reference,
                result.methods_max_rel_err);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hermite-mixnorm: mixed-norm verification toolkit for Hermite expansions"};
    app.set_config("--config");
    app.require_subcommand(1);
    app.fallthrough();

    mixnorm::RunConfig cfg;
    std::string out_dir = ".";
    app.add_option("--n", cfg.n, "ambient dimension (0 = suite defaults)");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--tol", cfg.tol_scale, "tolerance scale factor");
    app.add_option("--radial-nodes", cfg.radial_nodes, "radial quadrature order");
    app.add_option("--r-max", cfg.r_max, "radial cutoff");
    app.add_option("--level-max", cfg.level_max, "spectral truncation (0 = default)");
    app.add_option("--jobs", cfg.jobs, "concurrent checks per suite");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    int suite_m_max = -1;
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--m-max", suite_m_max, "suite-specific degree cap");

    auto* scan = app.add_subcommand("riesz-scan", "Riesz-means mixed-norm scan");
    std::string delta_list = "0,1", p_list = "1.5,2,4", r_list = "4,8,16,32,64,128";
    scan->add_option("--deltas", delta_list, "comma-separated delta values");
    scan->add_option("--ps", p_list, "comma-separated p values");
    scan->add_option("--Rs", r_list, "comma-separated R values");

    auto* mult = app.add_subcommand("multiplier", "multiplier condition check and probes");
    std::string spec_file;
    std::string mult_ps = "1.5,2,3";
    bool require_condition = false;
    mult->add_option("--spec-file", spec_file, "JSON multiplier description")->required();
    mult->add_option("--ps", mult_ps, "comma-separated p values");
    mult->add_flag("--require-condition", require_condition,
                   "exit 1 if the difference condition fails");

    auto* gfun = app.add_subcommand("gfun", "g-function identity and bracket report");
    int gfun_k = 1;
    std::string gfun_ps = "1.5,3";
    gfun->add_option("--k", gfun_k, "g-function index (>= 1)");
    gfun->add_option("--ps", gfun_ps, "comma-separated p values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cfg.jobs <= 0)
        cfg.jobs = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));

    try {
        if (verify->parsed()) {
            cfg.suite_m_max = suite_m_max;
            bool known = suite == "all";
            for (const auto& s : mixnorm::suite_names()) known = known || s == suite;
            if (!known) {
                std::fprintf(stderr, "unknown suite: %s\n", suite.c_str());
                return 2;
            }
            return cmd_verify(suite, cfg, out_dir);
        }
        if (scan->parsed()) {
            const int n = cfg.n > 0 ? cfg.n : 2;
            const auto deltas = parse_list(delta_list);
            const auto ps = parse_list(p_list);
            const auto Rs = parse_list(r_list);
            if (deltas.empty() || ps.empty() || Rs.empty()) {
                std::fprintf(stderr, "riesz-scan: empty parameter list\n");
                return 2;
            }
            for (double p : ps)
                if (p < 1.0) {
                    std::fprintf(stderr, "riesz-scan: p must be >= 1\n");
                    return 2;
                }
            return cmd_riesz_scan(n, deltas, ps, Rs, cfg, out_dir);
        }
        if (mult->parsed()) return cmd_multiplier(spec_file, parse_list(mult_ps),
                                                  require_condition, cfg, out_dir);
        if (gfun->parsed()) {
            if (gfun_k < 1) {
                std::fprintf(stderr, "gfun: k must be >= 1\n");
                return 2;
            }
            return cmd_gfun(gfun_k, parse_list(gfun_ps), cfg, out_dir);
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
