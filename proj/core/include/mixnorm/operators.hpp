#pragma once

// Operators acting on functions: Hermite coefficient analysis/synthesis,
// spectral multipliers phi(H), the Hermite and Laguerre heat semigroups
// (spectral and kernel paths), Bochner-Riesz means, Funk-Hecke component
// operators T_m and the full decompose -> T_m -> resynthesize pipeline.

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "mixnorm/grids.hpp"
#include "mixnorm/harmonics.hpp"
#include "mixnorm/kernels.hpp"

namespace mixnorm {

// Hermite expansion coefficients <f, Phi_alpha>, stored level-wise (spectral
// multipliers act per level).  Within level k the multi-indices are ordered
// lexicographically descending in the leading coordinates.
struct HermiteCoefficients {
    int n = 2;
    int level_max = 0;
    std::vector<std::vector<double>> levels;  // levels[k][intra-level index]
    double truncation_mass = 0.0;             // 1 - sum c^2 / ||f||_2^2 at analysis

    double plancherel_norm() const;
};

// Number of multi-indices with |alpha| = k in dimension n.
int hermite_level_dim(int n, int k);

// Multi-indices of level k (unused coordinates zero), deterministic order.
std::vector<std::array<int, 3>> hermite_level_indices(int n, int k);

// Phi_alpha(x) = prod_c h_{alpha_c}(x_c).
double hermite_eigenfunction(int n, const std::array<int, 3>& alpha,
                             const std::array<double, 3>& x);

// Tensor-quadrature inner products against Phi_alpha, |alpha| <= level_max.
// Throws if the reported truncation mass exceeds `truncation_limit`.
HermiteCoefficients hermite_analyze(const PolarField& f, int level_max,
                                    double truncation_limit = 0.1);

PolarField hermite_synthesize(const HermiteCoefficients& c, RadialRulePtr radial,
                              SphereRulePtr sphere);

std::vector<double> hermite_synthesize_at(const HermiteCoefficients& c,
                                          const std::vector<std::array<double, 3>>& points);

// Level functions u_k(x) = sum_{|alpha|=k} c_alpha Phi_alpha(x); returned as
// [level][point].  The workhorse of the g-function evaluations.
std::vector<std::vector<double>> hermite_level_functions_at(
    const HermiteCoefficients& c, const std::vector<std::array<double, 3>>& points);

// Flattened product-grid points of a polar field, i-major like its values.
std::vector<std::array<double, 3>> field_points(const PolarField& f);

// c_alpha -> phi(2|alpha|+n) c_alpha.
HermiteCoefficients apply_multiplier(const std::function<double(double)>& phi_of_eigenvalue,
                                     const HermiteCoefficients& c);

// Multiplier phi evaluated on the Hermite spectrum.  Complex-valued families
// (imaginary powers) are handled by applying real and imaginary parts
// separately.
struct MultiplierSpec {
    std::string name;
    std::function<std::complex<double>(double)> phi;  // argument is 2k+n
    bool is_complex = false;
};

MultiplierSpec multiplier_imaginary_power(double tau);
MultiplierSpec multiplier_riesz_mean(double R, double delta);
MultiplierSpec multiplier_semigroup(double t);
// Tabulated values phi(k) for k = 0..len-1, constant beyond the table.
MultiplierSpec multiplier_tabulated(std::vector<double> values);

struct MultiplierConditionReport {
    std::vector<double> constants;  // C_j = max_{k<=K_scan} |Delta^j phi(k)| (2k+n)^j
    std::vector<bool> within_bounds;
    bool all_within = true;
};

// Finite differences are taken in the integer level k with unit step,
// Delta phi(k) = phi(k+1) - phi(k), computed exactly from phi values.
MultiplierConditionReport check_multiplier_condition(const MultiplierSpec& spec, int n,
                                                     int k_scan, int j_max,
                                                     const std::vector<double>& bounds = {});

// Hermite semigroup e^{-tH}: spectral path.
HermiteCoefficients hermite_semigroup_spectral(double t, const HermiteCoefficients& c);

// Generic kernel application (T f)(x) = int K(x,y) f(y) dy evaluated at the
// given points via the field's product quadrature.
std::vector<double> kernel_apply_at(
    const std::function<double(const std::array<double, 3>&, const std::array<double, 3>&)>& K,
    const PolarField& f, const std::vector<std::array<double, 3>>& points);

// Hermite semigroup e^{-tH}: kernel path (quadrature against the Mehler kernel).
std::vector<double> hermite_semigroup_kernel_at(double t, const PolarField& f,
                                                const std::vector<std::array<double, 3>>& points);

// Laguerre semigroup T_t^alpha g(r) = int_0^inf K_t^alpha(r,s) g(s) dmu_alpha(s);
// g must carry the measure exponent 2*alpha+1.
RadialProfile laguerre_semigroup(double t, double alpha, const RadialProfile& g);

// Coefficients <g, psi_j^alpha> for j <= j_max.
std::vector<double> laguerre_expand(const RadialProfile& g, double alpha, int j_max);

RadialProfile laguerre_synthesize(const std::vector<double>& coeffs, double alpha,
                                  RadialRulePtr rule);

// Component operator from a sampled reduced kernel:
//   T_m g(r_i) = int_0^inf table(r_i, s) g(s) s^{n-1} ds,
// g on the exponent-(n-1) radial rule whose nodes match table.s_nodes.
RadialProfile component_operator(const ComponentKernelTable& table, const RadialProfile& g);

// Same operator through the Hecke-Bochner reduction:
//   T_{t,m} g(r) = r^m T_t^{n/2+m-1}(s^{-m} g)(r).
RadialProfile component_operator_laguerre(double t, int n, int m, const RadialProfile& g);

// Bochner-Riesz means on coefficients: level k scaled by (1-(2k+n)/R)_+^delta.
HermiteCoefficients bochner_riesz_spectral(double R, double delta,
                                           const HermiteCoefficients& c);

// decompose -> T_m per (m,j) -> resynthesize, with the component kernels
// reduced by Funk-Hecke quadrature.  On band-limited inputs this agrees with
// direct kernel quadrature.  If truncation_out is non-null it receives the
// relative L^2 mass lost to the angular truncation at M_max.
PolarField apply_via_components(const KernelK0& k0, const PolarField& f, const BasisPtr& basis,
                                const QuadratureRule& jacobi_rule,
                                double* truncation_out = nullptr);

}  // namespace mixnorm
