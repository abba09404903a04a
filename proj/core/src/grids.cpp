#include "mixnorm/grids.hpp"

#include <cmath>
#include <stdexcept>

namespace mixnorm {

double RadialProfile::l2_norm() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        acc += rule->weights[i] * values[i] * values[i];
    return std::sqrt(acc);
}

double RadialProfile::inner(const RadialProfile& g) const {
    if (g.values.size() != values.size())
        throw std::invalid_argument("RadialProfile::inner: grid mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        acc += rule->weights[i] * values[i] * g.values[i];
    return acc;
}

RadialProfile make_profile(RadialRulePtr rule, double measure_exponent,
                           const std::function<double(double)>& f) {
    RadialProfile p;
    p.rule = std::move(rule);
    p.measure_exponent = measure_exponent;
    p.values.resize(p.rule->nodes.size());
    for (std::size_t i = 0; i < p.values.size(); ++i) p.values[i] = f(p.rule->nodes[i]);
    return p;
}

std::array<double, 3> PolarField::point(int i, int q) const {
    const double r = radial->nodes[i];
    const auto& w = sphere->nodes[q];
    return {r * w[0], r * w[1], r * w[2]};
}

double PolarField::l2_norm() const {
    double acc = 0.0;
    const int ns = sphere_size();
    for (int i = 0; i < radial_size(); ++i)
        for (int q = 0; q < ns; ++q) {
            const double v = at(i, q);
            acc += weight(i, q) * v * v;
        }
    return std::sqrt(acc);
}

PolarField make_field(int n, RadialRulePtr radial, SphereRulePtr sphere,
                      const std::function<double(const std::array<double, 3>&)>& f) {
    if (sphere->n != n) throw std::invalid_argument("make_field: sphere rule dimension mismatch");
    PolarField out;
    out.n = n;
    out.radial = std::move(radial);
    out.sphere = std::move(sphere);
    out.values.resize(static_cast<std::size_t>(out.radial_size()) * out.sphere_size());
    for (int i = 0; i < out.radial_size(); ++i)
        for (int q = 0; q < out.sphere_size(); ++q) out.at(i, q) = f(out.point(i, q));
    return out;
}

PolarField zero_field_like(const PolarField& f) {
    PolarField out = f;
    out.values.assign(f.values.size(), 0.0);
    return out;
}

}  // namespace mixnorm
