#pragma once

// Named verification suites over the kernel/operator/analysis stack, plus
// the Riesz-means scan, multiplier runs and g-function reports they share
// with the command-line driver and the acceptance tests.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixnorm/analysis.hpp"
#include "mixnorm/operators.hpp"
#include "mixnorm/report.hpp"

namespace mixnorm {

struct RunConfig {
    int n = 0;               // 0 = suite-default dimensions (usually {2,3})
    std::uint64_t seed = 7;
    int radial_nodes = 200;
    double r_max = 14.0;
    int m_max = 24;          // angular truncation for decompositions
    int level_max = 0;       // 0 = per-dimension default (40 for n=2, 24 for n=3)
    int suite_m_max = -1;    // suite-specific degree cap (-1 = suite default)
    double tol_scale = 1.0;  // multiplies every check tolerance
    int jobs = 1;            // concurrent checks per suite
};

int default_level_max(int n);

const std::vector<std::string>& suite_names();  // excludes "all"

// Runs one suite ("all" concatenates every suite, ids already prefixed).
std::vector<CheckResult> run_suite(const std::string& name, const RunConfig& cfg);

// --- Riesz means scan -------------------------------------------------------

struct RieszScanRow {
    int n = 2;
    double delta = 0.0, p = 2.0, R = 0.0;
    double norm_lower_bound = 0.0;
    std::string trial_id;
};

struct ConjectureWindow {
    double delta = 0.0;
    double p_lo = 0.0, p_hi = 0.0;  // 2n/(n+1+2 delta) < p < 2n/(n-1-2 delta)
    bool bounded_above = true;      // false when delta >= (n-1)/2
};

struct RieszScanResult {
    std::vector<RieszScanRow> rows;
    std::vector<ConjectureWindow> windows;
};

RieszScanResult riesz_scan(int n, const std::vector<double>& deltas,
                           const std::vector<double>& ps, const std::vector<double>& Rs,
                           const RunConfig& cfg);

// --- Hermite multiplier runs ------------------------------------------------

struct MultiplierProbeRow {
    double p = 2.0;
    double max_ratio = 0.0;
    std::string trial_id;
};

struct MultiplierRunResult {
    MultiplierConditionReport condition;        // constants at the full scan
    std::vector<double> constants_short_scan;   // constants at K_scan/100
    std::vector<double> noise_floor;            // 2^{j+2} eps (2K+n)^j measurement limit
    bool condition_stable = true;               // sup stabilized under scan growth
    std::vector<MultiplierProbeRow> probes;
};

MultiplierRunResult run_multiplier(const MultiplierSpec& spec, const std::vector<double>& ps,
                                   int k_scan, int j_max, const RunConfig& cfg);

// --- g-function runs --------------------------------------------------------

struct GfunBracket {
    double p = 2.0;
    double lo = 0.0, hi = 0.0;  // observed ratio bracket over the trial set
};

struct GfunRunResult {
    int k = 1;
    double l2_ratio_reference = 0.0;  // 2^{-k} Gamma(2k)^{1/2}
    double l2_ratio_max_err = 0.0;    // worst |ratio/reference - 1| over trials
    double methods_max_rel_err = 0.0; // spectral vs temporal paths
    std::vector<GfunBracket> brackets;
};

GfunRunResult run_gfun(int k, const std::vector<double>& ps, const RunConfig& cfg);

// --- maximal-function domination battery ------------------------------------

struct MaxDominationResult {
    std::vector<int> m_list;
    std::vector<double> per_m_constant;  // sup over the (f,h) battery per degree
    double global_constant = 0.0;
};

MaxDominationResult maximal_domination_battery(int n, int k, int m_max, std::uint64_t seed);

// --- shared helpers ---------------------------------------------------------

int default_sphere_order(int m_max, int level_max);

// Hecke-Bochner reduction audit: fits the constant in
//   e^{-tH}(g Y_{m,j}) = c r^m Y_{m,j} T_t^{n/2+m-1}(r^{-m} g)
// against independent kernel quadratures of both sides.
struct HeckeBochnerAudit {
    double max_identity_rel_err = 0.0;
    double fitted_constant_mean = 0.0;
    double fitted_constant_spread = 0.0;  // (max-min)/mean over the case grid
    double reference_constant = 0.0;      // Gamma(1/2) Gamma((n-1)/2) 2^{n/2-1}
};

HeckeBochnerAudit hecke_bochner_audit(int n, int m_max, const std::vector<double>& t_list,
                                      const RunConfig& cfg);

// Max relative error of the Funk-Hecke exponential-integral identity over a
// (z, m) grid, computed in quad precision to keep the small-z, large-m
// corners meaningful.
double lemma31_max_rel_err(int n, int m_max, const std::vector<double>& z_list,
                           int quad_nodes = 96);

// Truncated Laguerre-kernel spectral sums against the closed form: pointwise
// relative error on the near-diagonal band |r-s| <= 1 and sup-normalized
// error over the full (r,s) grid (off the diagonal the truncation tail
// exceeds the kernel's own magnitude at small t, so a pointwise quotient
// there measures the truncation, not the identity).
double laguerre_spectral_consistency(int terms, const std::vector<double>& alphas,
                                     const std::vector<double>& t_list);

}  // namespace mixnorm
