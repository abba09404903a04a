#include "mixnorm/operators.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "mixnorm/specfun.hpp"

namespace mixnorm {

namespace {

// Per-point table of h_j(x_c) for j <= level_max, c < n.
struct HermiteTable {
    int n;
    int level_max;
    std::array<std::vector<double>, 3> h;

    HermiteTable(int n_, int level_max_, const std::array<double, 3>& x)
        : n(n_), level_max(level_max_) {
        for (int c = 0; c < n; ++c) {
            auto& col = h[c];
            col.resize(level_max + 1);
            const double xc = x[c];
            col[0] = std::pow(M_PI, -0.25) * std::exp(-0.5 * xc * xc);
            if (level_max >= 1) col[1] = std::sqrt(2.0) * xc * col[0];
            for (int j = 2; j <= level_max; ++j)
                col[j] = xc * std::sqrt(2.0 / j) * col[j - 1] -
                         std::sqrt((j - 1.0) / j) * col[j - 2];
        }
    }

    double phi(const std::array<int, 3>& alpha) const {
        double v = h[0][alpha[0]];
        for (int c = 1; c < n; ++c) v *= h[c][alpha[c]];
        return v;
    }
};

const std::vector<std::array<int, 3>>& cached_level_indices(int n, int k) {
    static thread_local std::map<std::pair<int, int>, std::vector<std::array<int, 3>>> cache;
    auto it = cache.find({n, k});
    if (it == cache.end()) it = cache.emplace(std::make_pair(n, k), hermite_level_indices(n, k)).first;
    return it->second;
}

}  // namespace

double HermiteCoefficients::plancherel_norm() const {
    double acc = 0.0;
    for (const auto& lvl : levels)
        for (double c : lvl) acc += c * c;
    return std::sqrt(acc);
}

int hermite_level_dim(int n, int k) {
    if (n == 1) return 1;
    if (n == 2) return k + 1;
    if (n == 3) return (k + 1) * (k + 2) / 2;
    throw std::invalid_argument("hermite_level_dim: n must be <= 3");
}

std::vector<std::array<int, 3>> hermite_level_indices(int n, int k) {
    std::vector<std::array<int, 3>> out;
    if (n == 1) {
        out.push_back({k, 0, 0});
    } else if (n == 2) {
        for (int a = k; a >= 0; --a) out.push_back({a, k - a, 0});
    } else if (n == 3) {
        for (int a = k; a >= 0; --a)
            for (int b = k - a; b >= 0; --b) out.push_back({a, b, k - a - b});
    } else {
        throw std::invalid_argument("hermite_level_indices: n must be <= 3");
    }
    return out;
}

double hermite_eigenfunction(int n, const std::array<int, 3>& alpha,
                             const std::array<double, 3>& x) {
    double v = 1.0;
    for (int c = 0; c < n; ++c) v *= hermite_fn_1d(alpha[c], x[c]);
    return v;
}

HermiteCoefficients hermite_analyze(const PolarField& f, int level_max,
                                    double truncation_limit) {
    if (level_max < 0) throw std::invalid_argument("hermite_analyze: level_max must be >= 0");
    HermiteCoefficients c;
    c.n = f.n;
    c.level_max = level_max;
    c.levels.resize(level_max + 1);
    for (int k = 0; k <= level_max; ++k) c.levels[k].assign(hermite_level_dim(f.n, k), 0.0);

    const int nr = f.radial_size(), ns = f.sphere_size();
    for (int i = 0; i < nr; ++i)
        for (int q = 0; q < ns; ++q) {
            const double wf = f.weight(i, q) * f.at(i, q);
            if (wf == 0.0) continue;
            const HermiteTable table(f.n, level_max, f.point(i, q));
            for (int k = 0; k <= level_max; ++k) {
                const auto& idx = cached_level_indices(f.n, k);
                auto& lvl = c.levels[k];
                for (std::size_t a = 0; a < idx.size(); ++a) lvl[a] += wf * table.phi(idx[a]);
            }
        }

    const double f2 = f.l2_norm();
    const double c2 = c.plancherel_norm();
    c.truncation_mass = (f2 > 0.0) ? 1.0 - (c2 * c2) / (f2 * f2) : 0.0;
    if (c.truncation_mass > truncation_limit)
        throw std::runtime_error("hermite_analyze: truncation mass " +
                                 std::to_string(c.truncation_mass) + " exceeds limit");
    return c;
}

std::vector<double> hermite_synthesize_at(const HermiteCoefficients& c,
                                          const std::vector<std::array<double, 3>>& points) {
    std::vector<double> out(points.size(), 0.0);
    for (std::size_t p = 0; p < points.size(); ++p) {
        const HermiteTable table(c.n, c.level_max, points[p]);
        double acc = 0.0;
        for (int k = 0; k <= c.level_max; ++k) {
            const auto& idx = cached_level_indices(c.n, k);
            const auto& lvl = c.levels[k];
            for (std::size_t a = 0; a < idx.size(); ++a) acc += lvl[a] * table.phi(idx[a]);
        }
        out[p] = acc;
    }
    return out;
}

PolarField hermite_synthesize(const HermiteCoefficients& c, RadialRulePtr radial,
                              SphereRulePtr sphere) {
    PolarField out;
    out.n = c.n;
    out.radial = std::move(radial);
    out.sphere = std::move(sphere);
    std::vector<std::array<double, 3>> pts;
    pts.reserve(static_cast<std::size_t>(out.radial_size()) * out.sphere_size());
    for (int i = 0; i < out.radial_size(); ++i)
        for (int q = 0; q < out.sphere_size(); ++q) pts.push_back(out.point(i, q));
    out.values = hermite_synthesize_at(c, pts);
    return out;
}

std::vector<std::vector<double>> hermite_level_functions_at(
    const HermiteCoefficients& c, const std::vector<std::array<double, 3>>& points) {
    std::vector<std::vector<double>> out(c.level_max + 1,
                                         std::vector<double>(points.size(), 0.0));
    for (std::size_t p = 0; p < points.size(); ++p) {
        const HermiteTable table(c.n, c.level_max, points[p]);
        for (int k = 0; k <= c.level_max; ++k) {
            const auto& idx = cached_level_indices(c.n, k);
            const auto& lvl = c.levels[k];
            double acc = 0.0;
            for (std::size_t a = 0; a < idx.size(); ++a) acc += lvl[a] * table.phi(idx[a]);
            out[k][p] = acc;
        }
    }
    return out;
}

std::vector<std::array<double, 3>> field_points(const PolarField& f) {
    std::vector<std::array<double, 3>> pts;
    pts.reserve(f.values.size());
    for (int i = 0; i < f.radial_size(); ++i)
        for (int q = 0; q < f.sphere_size(); ++q) pts.push_back(f.point(i, q));
    return pts;
}

HermiteCoefficients apply_multiplier(const std::function<double(double)>& phi_of_eigenvalue,
                                     const HermiteCoefficients& c) {
    HermiteCoefficients out = c;
    for (int k = 0; k <= c.level_max; ++k) {
        const double m = phi_of_eigenvalue(2.0 * k + c.n);
        for (double& v : out.levels[k]) v *= m;
    }
    return out;
}

MultiplierSpec multiplier_imaginary_power(double tau) {
    MultiplierSpec spec;
    spec.name = "imaginary-power(tau=" + std::to_string(tau) + ")";
    spec.phi = [tau](double lam) {
        return std::exp(std::complex<double>(0.0, tau * std::log(lam)));
    };
    spec.is_complex = true;
    return spec;
}

MultiplierSpec multiplier_riesz_mean(double R, double delta) {
    MultiplierSpec spec;
    spec.name = "riesz-mean(R=" + std::to_string(R) + ",delta=" + std::to_string(delta) + ")";
    spec.phi = [R, delta](double lam) {
        const double c = 1.0 - lam / R;
        return std::complex<double>(c > 0.0 ? std::pow(c, delta) : 0.0, 0.0);
    };
    return spec;
}

MultiplierSpec multiplier_semigroup(double t) {
    MultiplierSpec spec;
    spec.name = "semigroup(t=" + std::to_string(t) + ")";
    spec.phi = [t](double lam) { return std::complex<double>(std::exp(-lam * t), 0.0); };
    return spec;
}

MultiplierSpec multiplier_tabulated(std::vector<double> values) {
    MultiplierSpec spec;
    spec.name = "tabulated(" + std::to_string(values.size()) + " values)";
    spec.phi = [values = std::move(values)](double lam) {
        if (values.empty()) return std::complex<double>(0.0, 0.0);
        // lam = 2k+n; recover k assuming the caller's n is encoded in lam parity
        const int k = std::max(0, static_cast<int>(std::llround(0.5 * (lam - 2.0))));
        const std::size_t i = std::min<std::size_t>(k, values.size() - 1);
        return std::complex<double>(values[i], 0.0);
    };
    return spec;
}

MultiplierConditionReport check_multiplier_condition(const MultiplierSpec& spec, int n,
                                                     int k_scan, int j_max,
                                                     const std::vector<double>& bounds) {
    if (j_max < 0) throw std::invalid_argument("check_multiplier_condition: j_max must be >= 0");
    if (k_scan < 1) throw std::invalid_argument("check_multiplier_condition: k_scan must be >= 1");
    std::vector<std::complex<double>> diff(k_scan + j_max + 1);
    for (int k = 0; k < static_cast<int>(diff.size()); ++k) diff[k] = spec.phi(2.0 * k + n);
    MultiplierConditionReport report;
    report.constants.assign(j_max + 1, 0.0);
    for (int j = 0; j <= j_max; ++j) {
        double cj = 0.0;
        for (int k = 0; k <= k_scan; ++k)
            cj = std::max(cj, std::abs(diff[k]) * std::pow(2.0 * k + n, j));
        report.constants[j] = cj;
        // advance the difference table in place: diff[k] <- diff[k+1] - diff[k]
        for (std::size_t k = 0; k + 1 < diff.size(); ++k) diff[k] = diff[k + 1] - diff[k];
        diff.pop_back();
    }
    if (!bounds.empty()) {
        report.within_bounds.assign(j_max + 1, true);
        for (int j = 0; j <= j_max && j < static_cast<int>(bounds.size()); ++j) {
            report.within_bounds[j] = report.constants[j] <= bounds[j];
            report.all_within = report.all_within && report.within_bounds[j];
        }
    }
    return report;
}

HermiteCoefficients hermite_semigroup_spectral(double t, const HermiteCoefficients& c) {
    if (t <= 0.0) throw std::invalid_argument("hermite_semigroup_spectral: t must be > 0");
    return apply_multiplier([t](double lam) { return std::exp(-lam * t); }, c);
}

std::vector<double> kernel_apply_at(
    const std::function<double(const std::array<double, 3>&, const std::array<double, 3>&)>& K,
    const PolarField& f, const std::vector<std::array<double, 3>>& points) {
    std::vector<double> out(points.size(), 0.0);
    const int nr = f.radial_size(), ns = f.sphere_size();
    for (std::size_t p = 0; p < points.size(); ++p) {
        double acc = 0.0;
        for (int i = 0; i < nr; ++i)
            for (int q = 0; q < ns; ++q)
                acc += f.weight(i, q) * K(points[p], f.point(i, q)) * f.at(i, q);
        out[p] = acc;
    }
    return out;
}

std::vector<double> hermite_semigroup_kernel_at(double t, const PolarField& f,
                                                const std::vector<std::array<double, 3>>& points) {
    if (t <= 0.0) throw std::invalid_argument("hermite_semigroup_kernel_at: t must be > 0");
    const int n = f.n;
    return kernel_apply_at(
        [n, t](const std::array<double, 3>& x, const std::array<double, 3>& y) {
            return mehler_kernel(n, t, x, y, MehlerForm::Factorized);
        },
        f, points);
}

RadialProfile laguerre_semigroup(double t, double alpha, const RadialProfile& g) {
    if (t <= 0.0) throw std::invalid_argument("laguerre_semigroup: t must be > 0");
    if (alpha <= -1.0) throw std::invalid_argument("laguerre_semigroup: alpha must be > -1");
    if (std::abs(g.measure_exponent - (2.0 * alpha + 1.0)) > 1e-12)
        throw std::invalid_argument("laguerre_semigroup: profile measure exponent mismatch");
    RadialProfile out = g;
    const auto& nodes = g.rule->nodes;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < nodes.size(); ++j)
            acc += g.rule->weights[j] * laguerre_kernel(t, alpha, nodes[i], nodes[j]) *
                   g.values[j];
        out.values[i] = acc;
    }
    return out;
}

std::vector<double> laguerre_expand(const RadialProfile& g, double alpha, int j_max) {
    if (std::abs(g.measure_exponent - (2.0 * alpha + 1.0)) > 1e-12)
        throw std::invalid_argument("laguerre_expand: profile measure exponent mismatch");
    std::vector<double> coeffs(j_max + 1, 0.0);
    const auto& nodes = g.rule->nodes;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double wg = g.rule->weights[i] * g.values[i];
        if (wg == 0.0) continue;
        for (int j = 0; j <= j_max; ++j) coeffs[j] += wg * laguerre_psi(j, alpha, nodes[i]);
    }
    return coeffs;
}

RadialProfile laguerre_synthesize(const std::vector<double>& coeffs, double alpha,
                                  RadialRulePtr rule) {
    RadialProfile out;
    out.rule = std::move(rule);
    out.measure_exponent = 2.0 * alpha + 1.0;
    out.values.assign(out.rule->nodes.size(), 0.0);
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            acc += coeffs[j] * laguerre_psi(static_cast<int>(j), alpha, out.rule->nodes[i]);
        out.values[i] = acc;
    }
    return out;
}

RadialProfile component_operator(const ComponentKernelTable& table, const RadialProfile& g) {
    const std::size_t ns = table.s_nodes.size();
    if (g.values.size() != ns)
        throw std::invalid_argument("component_operator: profile grid does not match table");
    RadialProfile out = g;
    for (std::size_t i = 0; i < table.r_nodes.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < ns; ++j)
            acc += g.rule->weights[j] * table.at(static_cast<int>(i), static_cast<int>(j)) *
                   g.values[j];
        out.values[i] = acc;
    }
    return out;
}

RadialProfile component_operator_laguerre(double t, int n, int m, const RadialProfile& g) {
    if (std::abs(g.measure_exponent - (n - 1.0)) > 1e-12)
        throw std::invalid_argument("component_operator_laguerre: expected r^{n-1} profile");
    const double alpha = 0.5 * n + m - 1.0;
    RadialProfile gt;
    gt.rule = std::make_shared<QuadratureRule>(
        radial_rule_like(*g.rule, g.measure_exponent, 2.0 * alpha + 1.0));
    gt.measure_exponent = 2.0 * alpha + 1.0;
    gt.values.resize(g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i)
        gt.values[i] = g.values[i] * std::pow(g.rule->nodes[i], -m);
    RadialProfile tg = laguerre_semigroup(t, alpha, gt);
    RadialProfile out = g;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = std::pow(g.rule->nodes[i], m) * tg.values[i];
    return out;
}

HermiteCoefficients bochner_riesz_spectral(double R, double delta,
                                           const HermiteCoefficients& c) {
    if (R <= 0.0) throw std::invalid_argument("bochner_riesz_spectral: R must be > 0");
    if (delta < 0.0) throw std::invalid_argument("bochner_riesz_spectral: delta must be >= 0");
    return apply_multiplier(
        [R, delta](double lam) {
            const double v = 1.0 - lam / R;
            return v > 0.0 ? std::pow(v, delta) : 0.0;
        },
        c);
}

PolarField apply_via_components(const KernelK0& k0, const PolarField& f, const BasisPtr& basis,
                                const QuadratureRule& jacobi_rule, double* truncation_out) {
    HarmonicDecomposition dec = decompose(f, basis);
    if (truncation_out) {
        const PolarField back = resynthesize(dec, basis);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            const double d = f.values[i] - back.values[i];
            const int ri = static_cast<int>(i) / f.sphere_size();
            const int q = static_cast<int>(i) % f.sphere_size();
            num += f.weight(ri, q) * d * d;
            den += f.weight(ri, q) * f.values[i] * f.values[i];
        }
        *truncation_out = (den > 0.0) ? num / den : 0.0;
    }
    const auto tables = build_component_tables(k0, basis->m_max(), f.n, f.radial->nodes,
                                               f.radial->nodes, jacobi_rule);
    RadialProfile g;
    g.rule = f.radial;
    g.measure_exponent = f.n - 1.0;
    for (int m = 0; m <= dec.m_max; ++m)
        for (int j = 1; j <= basis->d(m); ++j) {
            g.values = dec.profiles[m][j - 1];
            const RadialProfile tg = component_operator(tables[m], g);
            dec.profiles[m][j - 1] = tg.values;
        }
    return resynthesize(dec, basis);
}

}  // namespace mixnorm
