#include "mixnorm/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mixnorm/specfun.hpp"

namespace mixnorm {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// Fully normalised associated Legendre values Pbar_{l,m}(ct), l = m..l_max,
// such that Y_{l,0} = Pbar_{l,0} and Y_{l,+-m} = sqrt(2) Pbar_{l,m} {cos,sin}(m phi)
// are orthonormal on S^2.  Standard forward recurrences.
void normalized_legendre_column(int m, int l_max, double ct, double st,
                                std::vector<double>& out) {
    out.assign(l_max + 1, 0.0);
    double pmm = std::sqrt(1.0 / (4.0 * kPi));
    for (int mu = 1; mu <= m; ++mu)
        pmm *= st * std::sqrt((2.0 * mu + 1.0) / (2.0 * mu));
    if (m <= l_max) out[m] = pmm;
    if (m + 1 <= l_max) out[m + 1] = ct * std::sqrt(2.0 * m + 3.0) * pmm;
    for (int l = m + 2; l <= l_max; ++l) {
        const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - m * m));
        const double b = std::sqrt(((l - 1.0) * (l - 1.0) - m * m) / (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
        out[l] = a * (ct * out[l - 1] - b * out[l - 2]);
    }
}
}  // namespace

SphericalHarmonicBasis::SphericalHarmonicBasis(int n, int m_max, SphereRulePtr rule)
    : n_(n), m_max_(m_max), rule_(std::move(rule)) {
    if (n_ != 2 && n_ != 3)
        throw std::invalid_argument("SphericalHarmonicBasis: n must be 2 or 3");
    if (m_max_ < 0) throw std::invalid_argument("SphericalHarmonicBasis: M_max must be >= 0");
    if (!rule_ || rule_->n != n_)
        throw std::invalid_argument("SphericalHarmonicBasis: sphere rule dimension mismatch");
    total_ = 0;
    for (int m = 0; m <= m_max_; ++m) total_ += d(m);
    const int nodes = rule_->size();
    table_.resize(static_cast<std::size_t>(total_) * nodes);
    for (int q = 0; q < nodes; ++q) {
        const auto& w = rule_->nodes[q];
        if (n_ == 2) {
            const double th = std::atan2(w[1], w[0]);
            for (int m = 0; m <= m_max_; ++m)
                for (int j = 1; j <= d(m); ++j)
                    table_[static_cast<std::size_t>(index(m, j)) * nodes + q] =
                        (m == 0) ? 1.0 / std::sqrt(2.0 * kPi)
                                 : ((j == 1) ? std::cos(m * th) : std::sin(m * th)) / std::sqrt(kPi);
        } else {
            const double ct = w[2];
            const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
            const double ph = std::atan2(w[1], w[0]);
            std::vector<double> col;
            for (int mu = 0; mu <= m_max_; ++mu) {
                normalized_legendre_column(mu, m_max_, ct, st, col);
                for (int l = mu; l <= m_max_; ++l) {
                    // j ordering within degree l: mu = -l..+l mapped to j = 1..2l+1.
                    if (mu == 0) {
                        table_[static_cast<std::size_t>(index(l, l + 1)) * nodes + q] = col[l];
                    } else {
                        const double base = std::sqrt(2.0) * col[l];
                        table_[static_cast<std::size_t>(index(l, l + 1 - mu)) * nodes + q] =
                            base * std::sin(mu * ph);
                        table_[static_cast<std::size_t>(index(l, l + 1 + mu)) * nodes + q] =
                            base * std::cos(mu * ph);
                    }
                }
            }
        }
    }
}

int SphericalHarmonicBasis::d(int m) const {
    if (n_ == 2) return m == 0 ? 1 : 2;
    return 2 * m + 1;
}

int SphericalHarmonicBasis::index(int m, int j) const {
    if (m < 0 || m > m_max_ || j < 1 || j > d(m))
        throw std::out_of_range("SphericalHarmonicBasis::index");
    int base = 0;
    if (n_ == 2)
        base = (m == 0) ? 0 : 1 + 2 * (m - 1);
    else
        base = m * m;
    return base + j - 1;
}

double SphericalHarmonicBasis::evaluate(int m, int j, const std::array<double, 3>& omega) const {
    if (n_ == 2) {
        const double th = std::atan2(omega[1], omega[0]);
        if (m == 0) return 1.0 / std::sqrt(2.0 * kPi);
        return ((j == 1) ? std::cos(m * th) : std::sin(m * th)) / std::sqrt(kPi);
    }
    const double ct = omega[2];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    const double ph = std::atan2(omega[1], omega[0]);
    const int mu = j - (m + 1);
    std::vector<double> col;
    normalized_legendre_column(std::abs(mu), m, ct, st, col);
    if (mu == 0) return col[m];
    const double base = std::sqrt(2.0) * col[m];
    return (mu < 0) ? base * std::sin(-mu * ph) : base * std::cos(mu * ph);
}

BasisPtr build_basis(int n, int m_max, SphereRulePtr rule) {
    if (rule->exactness < 2 * m_max)
        throw std::invalid_argument("build_basis: sphere rule exactness must be >= 2*M_max");
    return std::make_shared<SphericalHarmonicBasis>(n, m_max, std::move(rule));
}

HarmonicDecomposition decompose(const PolarField& f, const BasisPtr& basis) {
    if (f.sphere.get() != basis->rule().get())
        throw std::invalid_argument("decompose: field must be sampled on the basis's sphere rule");
    HarmonicDecomposition d;
    d.n = f.n;
    d.m_max = basis->m_max();
    d.radial = f.radial;
    d.basis = basis;
    const int nr = f.radial_size();
    const int ns = f.sphere_size();
    d.profiles.resize(d.m_max + 1);
    for (int m = 0; m <= d.m_max; ++m) {
        d.profiles[m].assign(basis->d(m), std::vector<double>(nr, 0.0));
        for (int j = 1; j <= basis->d(m); ++j) {
            auto& prof = d.profiles[m][j - 1];
            for (int i = 0; i < nr; ++i) {
                double acc = 0.0;
                for (int q = 0; q < ns; ++q)
                    acc += f.sphere->weights[q] * f.at(i, q) * basis->value(m, j, q);
                prof[i] = acc;
            }
        }
    }
    return d;
}

PolarField resynthesize(const HarmonicDecomposition& d, const BasisPtr& basis) {
    if (d.basis.get() != basis.get())
        throw std::invalid_argument("resynthesize: decomposition built on a different basis");
    PolarField out;
    out.n = d.n;
    out.radial = d.radial;
    out.sphere = basis->rule();
    const int nr = out.radial_size();
    const int ns = out.sphere_size();
    out.values.assign(static_cast<std::size_t>(nr) * ns, 0.0);
    for (int m = 0; m <= d.m_max; ++m)
        for (int j = 1; j <= basis->d(m); ++j) {
            const auto& prof = d.profiles[m][j - 1];
            for (int i = 0; i < nr; ++i) {
                const double c = prof[i];
                if (c == 0.0) continue;
                for (int q = 0; q < ns; ++q) out.at(i, q) += c * basis->value(m, j, q);
            }
        }
    return out;
}

double equatorial_sphere_measure(int n) { return sphere_surface_measure(n - 1); }

double funk_hecke_coefficient(const std::function<double(double)>& F, int m, int n,
                              const QuadratureRule& jacobi_rule) {
    double acc = 0.0;
    for (std::size_t i = 0; i < jacobi_rule.nodes.size(); ++i) {
        const double u = jacobi_rule.nodes[i];
        acc += jacobi_rule.weights[i] * F(u) * ultraspherical_P(m, n, u);
    }
    return acc;
}

double verify_funk_hecke(const std::function<double(double)>& F, const BasisPtr& basis,
                         const QuadratureRule& jacobi_rule, int sample_count) {
    const auto& rule = *basis->rule();
    const int n = basis->n();
    const double factor = equatorial_sphere_measure(n);
    double worst = 0.0;
    const int stride = std::max(1, rule.size() / std::max(1, sample_count));
    for (int m = 0; m <= basis->m_max(); ++m) {
        const double lam = factor * funk_hecke_coefficient(F, m, n, jacobi_rule);
        for (int j = 1; j <= basis->d(m); ++j) {
            for (int s = 0; s < rule.size(); s += stride) {
                const auto& omega = rule.nodes[s];
                double lhs = 0.0;
                for (int q = 0; q < rule.size(); ++q) {
                    double dot = 0.0;
                    for (int c = 0; c < 3; ++c) dot += omega[c] * rule.nodes[q][c];
                    dot = std::clamp(dot, -1.0, 1.0);
                    lhs += rule.weights[q] * F(dot) * basis->value(m, j, q);
                }
                const double rhs = basis->value(m, j, s) * lam;
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
    }
    return worst;
}

}  // namespace mixnorm
