#pragma once

// Sampled-function containers: radial profiles on a radial quadrature grid
// and polar fields on a (radial nodes) x (sphere nodes) product grid.

#include <array>
#include <functional>
#include <vector>

#include "mixnorm/quadrature.hpp"

namespace mixnorm {

// Function sampled on a radial rule, together with the exponent p of the
// measure r^p dr the profile is meant to be integrated against.
struct RadialProfile {
    RadialRulePtr rule;
    double measure_exponent = 1.0;
    std::vector<double> values;

    double l2_norm() const;                 // against r^p dr
    double inner(const RadialProfile& g) const;
};

RadialProfile make_profile(RadialRulePtr rule, double measure_exponent,
                           const std::function<double(double)>& f);

// Function sampled on the product grid {r_i} x {omega_q}.  values are stored
// row-major: values[i * sphere->size() + q] = f(r_i * omega_q).
struct PolarField {
    int n = 2;
    RadialRulePtr radial;     // measure exponent n-1 assumed
    SphereRulePtr sphere;
    std::vector<double> values;

    int radial_size() const { return radial ? static_cast<int>(radial->nodes.size()) : 0; }
    int sphere_size() const { return sphere ? sphere->size() : 0; }
    double& at(int i, int q) { return values[static_cast<std::size_t>(i) * sphere_size() + q]; }
    double at(int i, int q) const {
        return values[static_cast<std::size_t>(i) * sphere_size() + q];
    }
    std::array<double, 3> point(int i, int q) const;
    // Product weight for integration over R^n (radial weight carries r^{n-1}).
    double weight(int i, int q) const {
        return radial->weights[i] * sphere->weights[q];
    }

    double l2_norm() const;  // over R^n
};

PolarField make_field(int n, RadialRulePtr radial, SphereRulePtr sphere,
                      const std::function<double(const std::array<double, 3>&)>& f);

PolarField zero_field_like(const PolarField& f);

}  // namespace mixnorm
