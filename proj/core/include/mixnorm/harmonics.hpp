#pragma once

// Real spherical-harmonic bases on S^1 and S^2, decomposition of a polar
// field into radial profiles {f_{m,j}}, resynthesis, and the Funk-Hecke
// transform of zonal kernels.

#include <functional>
#include <memory>
#include <vector>

#include "mixnorm/grids.hpp"
#include "mixnorm/quadrature.hpp"

namespace mixnorm {

// Orthonormal real basis Y_{m,j}, m <= M_max, tabulated on the nodes of a
// SphereRule.  Ordering is fixed: m ascending; within a degree, n = 2 uses
// [cos(m th), sin(m th)] and n = 3 runs the azimuthal order mu = -m..+m.
class SphericalHarmonicBasis {
  public:
    SphericalHarmonicBasis(int n, int m_max, SphereRulePtr rule);

    int n() const { return n_; }
    int m_max() const { return m_max_; }
    const SphereRulePtr& rule() const { return rule_; }

    // Dimension of the degree-m space: n=2 -> 1 or 2; n=3 -> 2m+1.
    int d(int m) const;
    // Total number of basis functions of degree <= m_max.
    int size() const { return total_; }
    // Flat index of (m, j), j in [1, d(m)].
    int index(int m, int j) const;

    // Tabulated value of Y_{m,j} at sphere node q.
    double value(int m, int j, int q) const {
        return table_[static_cast<std::size_t>(index(m, j)) * rule_->size() + q];
    }
    // Y_{m,j} at an arbitrary unit vector.
    double evaluate(int m, int j, const std::array<double, 3>& omega) const;

  private:
    int n_;
    int m_max_;
    int total_;
    SphereRulePtr rule_;
    std::vector<double> table_;  // [flat index * nodes + q]
};

using BasisPtr = std::shared_ptr<const SphericalHarmonicBasis>;

// Convenience constructor enforcing the rule-exactness precondition
// (rule exactness >= 2*M_max).
BasisPtr build_basis(int n, int m_max, SphereRulePtr rule);

// Collection {f_{m,j}} of radial profiles, f_{m,j}(s) = int f(s w) Y_{m,j}(w) dw.
struct HarmonicDecomposition {
    int n = 2;
    int m_max = 0;
    RadialRulePtr radial;
    BasisPtr basis;
    // profiles[m][j-1], each sampled on `radial`.
    std::vector<std::vector<std::vector<double>>> profiles;
};

HarmonicDecomposition decompose(const PolarField& f, const BasisPtr& basis);

PolarField resynthesize(const HarmonicDecomposition& d, const BasisPtr& basis);

// Surface measure of the equatorial sphere S^{n-2} (2 for n=2, 2 pi for n=3):
// the factor relating the bare 1-D Funk-Hecke integral to the sphere integral.
double equatorial_sphere_measure(int n);

// Bare Funk-Hecke eigenvalue integral
//   lambda_m(F) = int_{-1}^1 F(t) P_m^{n/2-1}(t) (1-t^2)^{(n-3)/2} dt
// computed against a matching gauss_jacobi rule.  The action of the zonal
// kernel F(w . w') on degree-m harmonics is equatorial_sphere_measure(n) *
// lambda_m(F).
double funk_hecke_coefficient(const std::function<double(double)>& F, int m, int n,
                              const QuadratureRule& jacobi_rule);

// Max over m <= M_max, j, and sample directions of
//   | int F(w.w') Y_{m,j}(w') dw'  -  Y_{m,j}(w) omega_{n-2} lambda_m(F) |,
// with the two sides computed by independent quadratures.
double verify_funk_hecke(const std::function<double(double)>& F, const BasisPtr& basis,
                         const QuadratureRule& jacobi_rule, int sample_count = 8);

}  // namespace mixnorm
