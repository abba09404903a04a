#pragma once

// Mixed L^{p,2} norms and weighted variants, Muckenhoupt A_p^alpha
// constants, the Hardy-Littlewood maximal function on (R^+, mu_alpha),
// Littlewood-Paley g-functions (global and componentwise), g* functions,
// Calderon-Zygmund kernel-estimate verification and randomized operator
// norm probes.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mixnorm/grids.hpp"
#include "mixnorm/harmonics.hpp"
#include "mixnorm/operators.hpp"
#include "mixnorm/quadrature.hpp"

namespace mixnorm {

// Shell L^2 norms (int_{S^{n-1}} |f(r w)|^2 dw)^{1/2} at every radial node.
std::vector<double> shell_l2(const PolarField& f);

// || f ||_{L^{p,2}}: inner sphere L^2, outer L^p against r^{n-1} dr.
double mixed_norm(const PolarField& f, double p);

// Mixed norm of the complex field re + i im sampled on a shared grid.
double mixed_norm_pair(const PolarField& re, const PolarField& im, double p);

// Outer measure w(r) r^{n-1} dr.
double weighted_mixed_norm(const PolarField& f, double p,
                           const std::function<double(double)>& w);

// Positive weight on R^+ paired with the measure exponent of mu_alpha.
struct Weight {
    std::function<double(double)> w;
    double alpha = 0.5;
};

enum class IntervalFamily { Dyadic, DyadicUnit };

// sup over the interval family of (avg_Q w)(avg_Q w^{-1/(p-1)})^{p-1},
// averages against mu_alpha.  The family consists of all intervals with
// endpoints on the 2^{-max_level} dyadic grid of [0, r_max]; DyadicUnit
// restricts to |Q| <= 1.
double ap_constant(const Weight& weight, double p, IntervalFamily family,
                   double r_max = 14.0, int max_level = 7, int cell_nodes = 24);

// Centered Hardy-Littlewood maximal function of |h| on (R^+, mu_alpha),
// discretized over the geometric radius grid {2^-10, ..., 2^4}.
RadialProfile maximal_fn(const RadialProfile& h, double alpha);

struct GFunctionResult {
    int k = 1;
    std::string method;
    std::vector<double> values;  // g_k(f, .) at the evaluation points
    double truncation_mass = 0.0;
};

// g_k(f,x)^2 = int_0^inf |d_t^k T_t f(x)|^2 t^{2k-1} dt, with the time
// derivative applied diagonally on the Hermite spectrum.  The spectral
// method evaluates the t-integral in closed form through
// int t^{2k-1} e^{-(a+b)t} dt = Gamma(2k) (a+b)^{-2k}; the temporal method
// uses the supplied quadrature rule.
GFunctionResult g_function_spectral(const HermiteCoefficients& c, int k,
                                    const std::vector<std::array<double, 3>>& points);
GFunctionResult g_function_temporal(const HermiteCoefficients& c, int k,
                                    const std::vector<std::array<double, 3>>& points,
                                    const QuadratureRule& temporal);

// Componentwise g-function through the Laguerre reduction
// T_{t,m} g = r^m T_t^{n/2+m-1}(s^{-m} g); closed-form t-integral on the
// Laguerre spectrum.  g carries the measure exponent n-1.
RadialProfile g_component(const RadialProfile& g, int n, int m, int k, int j_max = 48);

// g_k^*(f,x)^2 = int int t^{-n/2} (1+t^{-1}|x-y|^2)^{-k} |d_t T_t f(y)|^2 dy t dt,
// requires k > n/2.  y runs over the product grid of `f_grid`; the temporal
// rule must carry the weight t (k = 1).
std::vector<double> g_star_at(const HermiteCoefficients& c, int k, const PolarField& f_grid,
                              const QuadratureRule& temporal,
                              const std::vector<std::array<double, 3>>& x_points);

// Radial g_{k,m}^* of a radial component through the same reduction;
// the angular average of the Poisson-type factor is evaluated by
// Gauss-Jacobi quadrature.
RadialProfile g_star_component(const RadialProfile& g, int n, int m, int k,
                               const QuadratureRule& temporal, int j_max = 48,
                               int angular_nodes = 32);

struct CzEstimateReport {
    int n = 2;
    int k = 1;
    std::vector<int> m_list;
    std::vector<double> sup_i;   // sup over grid of LHS_i |r-s| (r+s)^{n-1}
    std::vector<double> sup_ii;  // sup over grid of LHS_ii |r-s|^2 (r+s)^{n-1}
};

// Uniform Calderon-Zygmund bounds of the component kernels K_m(r,s;t):
//   (i)  (int |d_t^k K_m|^2 t^{2k-1} dt)^{1/2}            vs  1/(|r-s| (r+s)^{n-1})
//   (ii) (int |d_t^k d_r K_m|^2 t^{2k-1} dt)^{1/2}        vs  1/(|r-s|^2 (r+s)^{n-1})
// d_t^k is exact (closed form); d_r uses central differences with h = 1e-4.
// Pairs closer than min_gap are excluded.
CzEstimateReport verify_cz_estimates(const std::vector<int>& m_list, int k, int n,
                                     const std::vector<double>& r_grid,
                                     double min_gap = 0.05, int temporal_nodes = 240);

// int_0^1 (1-u)^{c-1/2} (A-Bu)^{-(c+lambda+1/2)} du divided by
// A^{-(c+1/2)} (A-B)^{-lambda}.
double lemma_abc_ratio(double A, double B, double c, double lambda, int nodes = 200);

// sup of |x-y|^n (int |d_t^k K_t(x,y)|^2 t^{2k-1} dt)^{1/2} over random pairs.
double mehler_cz_sup(int n, int k, int samples, std::uint64_t seed,
                     int temporal_nodes = 240);

struct NormProbeResult {
    double max_ratio = 0.0;
    int argmax_trial = -1;
    std::vector<double> ratios;
};

// Lower-bound estimate of the L^{p,2} operator norm over a trial set.
NormProbeResult operator_norm_probe(const std::function<PolarField(const PolarField&)>& apply,
                                    double p, const std::vector<PolarField>& trials);

// Spectral variant: the operator acts on Hermite coefficients, trials are
// coefficient vectors synthesized on the given grid.
NormProbeResult operator_norm_probe_spectral(
    const std::function<HermiteCoefficients(const HermiteCoefficients&)>& apply, double p,
    const std::vector<HermiteCoefficients>& trials, const RadialRulePtr& radial,
    const SphereRulePtr& sphere);

// Same, for a (possibly complex) multiplier.
NormProbeResult operator_norm_probe_multiplier(const MultiplierSpec& spec, double p,
                                               const std::vector<HermiteCoefficients>& trials,
                                               const RadialRulePtr& radial,
                                               const SphereRulePtr& sphere);

// Deterministic probe trials: random coefficient vectors, radial x harmonic
// products and concentrated radial bumps (analyzed onto the Hermite basis).
std::vector<HermiteCoefficients> make_probe_trials(int n, int level_max,
                                                   const RadialRulePtr& radial,
                                                   const SphereRulePtr& sphere,
                                                   std::uint64_t seed,
                                                   const std::vector<double>& bump_centers,
                                                   int random_count = 8);

// Names matching make_probe_trials ordering, for scan reports.
std::vector<std::string> probe_trial_names(int level_max,
                                           const std::vector<double>& bump_centers,
                                           int random_count = 8);

}  // namespace mixnorm
