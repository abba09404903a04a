#pragma once

// Closed-form and spectral kernel evaluation: the Mehler heat kernel in both
// displayed forms, the Laguerre heat kernel, Hermite projection kernels
// Phi_k via contour integration or direct multi-index sums, Bochner-Riesz
// kernels, and Funk-Hecke component kernels K_m together with their exact
// time derivatives.

#include <array>
#include <complex>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "mixnorm/quadrature.hpp"

namespace mixnorm {

// Rotation-invariant kernel presented through K(x,y) = K0(|x-y|, |x+y|).
struct KernelK0 {
    std::function<double(double, double)> k0;  // arguments (|x-y|, |x+y|)
    std::string descriptor;

    double operator()(double chord, double anti_chord) const { return k0(chord, anti_chord); }
};

enum class MehlerForm { Direct, Factorized };

// Heat kernel of the Hermite semigroup e^{-tH} on R^n,
//   K_t(x,y) = (2 pi sinh 2t)^{-n/2}
//              exp(-1/2 coth(2t)(|x|^2+|y|^2) + csch(2t) x.y)          (Direct)
//            = (2 pi sinh 2t)^{-n/2}
//              exp(-1/4 coth(t)|x-y|^2) exp(-1/4 tanh(t)|x+y|^2)       (Factorized)
// The two forms agree identically; the prefactor is pinned by the semigroup
// identity and the spectral sum over Hermite eigenfunctions.
double mehler_kernel(int n, double t, const std::array<double, 3>& x,
                     const std::array<double, 3>& y, MehlerForm form);

// Same kernel in K0 form, arguments (|x-y|, |x+y|).
double mehler_kernel_k0(int n, double t, double chord, double anti_chord);

KernelK0 heat_kernel_k0(int n, double t);

// d^k/dt^k of the heat kernel in K0 form (exact symbolic derivative).
double mehler_kernel_dt(int order, int n, double t, double chord, double anti_chord);

// Laguerre heat kernel of type alpha,
//   K_t^alpha(r,s) = (sinh 2t)^{-1} e^{-1/2 coth(2t)(r^2+s^2)}
//                    (rs)^{-alpha} I_alpha(rs csch 2t),
// with the removable rs -> 0 singularity evaluated through the series limit.
double laguerre_kernel(double t, double alpha, double r, double s);

// d^k/dt^k of the Laguerre heat kernel (exact; Bessel recurrence algebra).
double laguerre_kernel_dt(int order, double t, double alpha, double r, double s);

// Generating kernel G_w(x,y) = sum_k w^k Phi_k(x,y) for complex w in the
// unit disc, in K0 form.  Used by the contour projection formula.
std::complex<double> disc_kernel_k0(int n, std::complex<double> w, double chord,
                                    double anti_chord);

enum class ProjectionMethod { Contour, Direct };

// Hermite projection kernel Phi_k(x,y) = sum_{|a|=k} Phi_a(x) Phi_a(y).
// Contour: t^k Phi_k = (2 pi)^{-1} int_0^{2pi} G_{t e^{i th}} e^{-ik th} dth,
// t in (0,1).  Direct: explicit multi-index sum (n <= 3).
double projection_kernel(int n, int k, const std::array<double, 3>& x,
                         const std::array<double, 3>& y, ProjectionMethod method,
                         double contour_radius = 0.5, int contour_nodes = 256);

// All of Phi_0..Phi_kmax at once from a single contour sweep, in K0 form.
std::vector<double> projection_kernels_k0(int n, int k_max, double chord, double anti_chord,
                                          double contour_radius = 0.5, int contour_nodes = 256);

// Bochner-Riesz kernel s_R^delta(x,y) = sum_k (1-(2k+n)/R)_+^delta Phi_k(x,y).
double bochner_riesz_kernel(int n, double R, double delta, const std::array<double, 3>& x,
                            const std::array<double, 3>& y, ProjectionMethod method,
                            double contour_radius = 0.5, int contour_nodes = 256);

KernelK0 bochner_riesz_k0(int n, double R, double delta, double contour_radius = 0.5,
                          int contour_nodes = 256);

// Bare Funk-Hecke reduction of a K0 kernel:
//   int_{-1}^1 K0(q_-^{1/2}, q_+^{1/2}) P_m^{n/2-1}(u) (1-u^2)^{(n-3)/2} du,
// q_{+-} = r^2+s^2 +- 2rsu.  The full sphere integral of K0 P_m over S^{n-1}
// is equatorial_sphere_measure(n) times this value.
double component_kernel(const KernelK0& k0, int m, int n, double r, double s,
                        const QuadratureRule& jacobi_rule);

// Sphere-integrated component kernel of the heat semigroup and its exact
// time derivatives:
//   d^k/dt^k  int_{S^{n-1}} K_t(r x', s y') P_m^{n/2-1}(x'.y') dy'
//     =  r^m s^m d^k/dt^k K_t^{n/2+m-1}(r,s).
// Evaluated through the Laguerre closed form for moderate Bessel arguments
// and through an exp-substituted Gauss-Laguerre quadrature of the angular
// integral when rs csch(2t) is large.
double heat_component_kernel_dt(int order, int n, int m, double t, double r, double s);

// The quadrature backend of the above, usable at any argument size; the two
// backends agree on their overlap and are cross-checked in the tests.
double heat_component_kernel_dt_quadrature(int order, int n, int m, double t, double r,
                                           double s);

// Sampled reduced component kernel: values[i*len(s)+j] approximates the full
// sphere integral of K0 P_m at (r_i, s_j) (sphere factor included), i.e. the
// radial kernel of the component operator T_m.
struct ComponentKernelTable {
    int m = 0;
    int n = 2;
    std::vector<double> r_nodes;
    std::vector<double> s_nodes;
    std::vector<double> values;  // r-major
    std::string provenance;

    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * s_nodes.size() + j]; }
};

ComponentKernelTable build_component_table(const KernelK0& k0, int m, int n,
                                           const std::vector<double>& r_nodes,
                                           const std::vector<double>& s_nodes,
                                           const QuadratureRule& jacobi_rule);

// Tables for all degrees m <= m_max in one pass over the kernel evaluations.
std::vector<ComponentKernelTable> build_component_tables(const KernelK0& k0, int m_max, int n,
                                                         const std::vector<double>& r_nodes,
                                                         const std::vector<double>& s_nodes,
                                                         const QuadratureRule& jacobi_rule);

// CSV export, columns m,r,s,value (RFC 4180, CRLF line endings).
void export_component_table_csv(const ComponentKernelTable& table, std::ostream& os);

}  // namespace mixnorm
