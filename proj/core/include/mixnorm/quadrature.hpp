#pragma once

// One-dimensional Gauss rules (Legendre, Chebyshev, Jacobi, generalised
// Laguerre, Hermite), mapped radial rules for integrals against r^p dr on
// [0, R_max], composite temporal rules for t^{2k-1} dt on (0, infinity),
// and product quadratures on S^1 and S^2.

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace mixnorm {

struct QuadratureRule {
    std::vector<double> nodes;    // strictly increasing
    std::vector<double> weights;  // positive; carry the declared weight fn
    std::string declared_weight;

    int order() const { return static_cast<int>(nodes.size()); }

    template <typename F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

// Gauss-Legendre on [-1, 1] (weight 1).
QuadratureRule gauss_legendre(int N);

// Gauss-Legendre mapped to [a, b].
QuadratureRule gauss_legendre_ab(int N, double a, double b);

// Gauss rule on [-1, 1] with weight (1-u^2)^{(n-3)/2}: Gauss-Chebyshev for
// n = 2 (closed-form nodes), Gauss-Legendre for n = 3, Golub-Welsch on the
// symmetric Jacobi recurrence otherwise.
QuadratureRule gauss_jacobi(int N, int n);

// Gauss rule on [-1, 1] with weight (1-u)^a (1+u)^b, a, b > -1.
QuadratureRule gauss_jacobi_general(int N, double a, double b);

// Generalised Gauss-Laguerre on [0, infinity) with weight v^gamma e^{-v}.
QuadratureRule gauss_laguerre(int N, double gamma);

// Gauss-Hermite on (-infinity, infinity) with weight e^{-x^2}.
QuadratureRule gauss_hermite(int N);

// Mapped Gauss-Legendre on [0, R_max] against the measure r^p dr
// (p = n-1 for the ambient radial measure, p = 2*alpha+1 for mu_alpha).
QuadratureRule radial_rule(int N, double exponent, double r_max = 14.0);

// Same nodes, re-measured for a different exponent.
QuadratureRule radial_rule_like(const QuadratureRule& rule, double old_exponent,
                                double new_exponent);

// Composite rule for integrals against t^{2k-1} dt on (0, infinity):
// Gauss-Legendre on [0, 1] plus a log-mapped Gauss-Legendre piece on
// [1, t_max].  Weights carry the t^{2k-1} factor.
QuadratureRule temporal_rule(int N, int k, double t_max = 20.0);

// Log-mapped rule for the same measure on [t_min, t_max]; resolves kernels
// whose temporal profile spans many scales.
QuadratureRule log_temporal_rule(int N, int k, double t_min, double t_max);

struct SphereRule {
    int n = 2;                                  // ambient dimension, 2 or 3
    int exactness = 0;                          // exact for harmonics of degree <= exactness
    std::vector<std::array<double, 3>> nodes;   // unit vectors (z = 0 for n = 2)
    std::vector<double> weights;                // sum to omega_{n-1}

    int size() const { return static_cast<int>(nodes.size()); }
};

// n = 2: equispaced trapezoid on the circle with 2*order+1 nodes.
// n = 3: Gauss-Legendre in cos(theta) times trapezoid in longitude.
SphereRule sphere_rule(int n, int order);

using SphereRulePtr = std::shared_ptr<const SphereRule>;
using RadialRulePtr = std::shared_ptr<const QuadratureRule>;

}  // namespace mixnorm
