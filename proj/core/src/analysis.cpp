#include "mixnorm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "mixnorm/kernels.hpp"
#include "mixnorm/rng.hpp"
#include "mixnorm/specfun.hpp"

namespace mixnorm {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double lgamma_of(double x) { return std::lgamma(x); }

// x^{-k} for small integer k, avoiding std::pow in hot loops
double inv_ipow(double x, int k) {
    double acc = 1.0;
    for (int i = 0; i < k; ++i) acc *= x;
    return 1.0 / acc;
}

std::vector<double> shell_l2_squared(const PolarField& f) {
    const int nr = f.radial_size(), ns = f.sphere_size();
    std::vector<double> out(nr, 0.0);
    for (int i = 0; i < nr; ++i) {
        double acc = 0.0;
        for (int q = 0; q < ns; ++q) {
            const double v = f.at(i, q);
            acc += f.sphere->weights[q] * v * v;
        }
        out[i] = acc;
    }
    return out;
}
}  // namespace

std::vector<double> shell_l2(const PolarField& f) {
    auto out = shell_l2_squared(f);
    for (double& v : out) v = std::sqrt(v);
    return out;
}

double mixed_norm(const PolarField& f, double p) {
    if (p < 1.0) throw std::invalid_argument("mixed_norm: p must be >= 1");
    const auto shells = shell_l2_squared(f);
    double acc = 0.0;
    for (int i = 0; i < f.radial_size(); ++i)
        acc += f.radial->weights[i] * std::pow(shells[i], 0.5 * p);
    return std::pow(acc, 1.0 / p);
}

double mixed_norm_pair(const PolarField& re, const PolarField& im, double p) {
    if (p < 1.0) throw std::invalid_argument("mixed_norm_pair: p must be >= 1");
    if (re.values.size() != im.values.size())
        throw std::invalid_argument("mixed_norm_pair: grid mismatch");
    const auto s_re = shell_l2_squared(re);
    const auto s_im = shell_l2_squared(im);
    double acc = 0.0;
    for (int i = 0; i < re.radial_size(); ++i)
        acc += re.radial->weights[i] * std::pow(s_re[i] + s_im[i], 0.5 * p);
    return std::pow(acc, 1.0 / p);
}

double weighted_mixed_norm(const PolarField& f, double p,
                           const std::function<double(double)>& w) {
    if (p < 1.0) throw std::invalid_argument("weighted_mixed_norm: p must be >= 1");
    const auto shells = shell_l2_squared(f);
    double acc = 0.0;
    for (int i = 0; i < f.radial_size(); ++i)
        acc += w(f.radial->nodes[i]) * f.radial->weights[i] * std::pow(shells[i], 0.5 * p);
    return std::pow(acc, 1.0 / p);
}

double ap_constant(const Weight& weight, double p, IntervalFamily family, double r_max,
                   int max_level, int cell_nodes) {
    if (p <= 1.0) throw std::invalid_argument("ap_constant: p must be > 1");
    const int cells = 1 << max_level;
    const double h = r_max / cells;
    // Per-cell integrals of w dmu, w^{-1/(p-1)} dmu and dmu on the fine grid;
    // every dyadic interval is a contiguous run of fine cells.
    std::vector<double> iw(cells, 0.0), iwp(cells, 0.0), imu(cells, 0.0);
    const QuadratureRule base = gauss_legendre(cell_nodes);
    const double q = -1.0 / (p - 1.0);
    for (int c = 0; c < cells; ++c) {
        const double lo = c * h;
        for (int g = 0; g < cell_nodes; ++g) {
            const double r = lo + 0.5 * h * (base.nodes[g] + 1.0);
            const double wq = 0.5 * h * base.weights[g] * std::pow(r, 2.0 * weight.alpha + 1.0);
            const double wv = weight.w(r);
            iw[c] += wq * wv;
            iwp[c] += wq * std::pow(wv, q);
            imu[c] += wq;
        }
    }
    std::vector<double> pw(cells + 1, 0.0), pwp(cells + 1, 0.0), pmu(cells + 1, 0.0);
    for (int c = 0; c < cells; ++c) {
        pw[c + 1] = pw[c] + iw[c];
        pwp[c + 1] = pwp[c] + iwp[c];
        pmu[c + 1] = pmu[c] + imu[c];
    }
    const int max_span =
        (family == IntervalFamily::DyadicUnit) ? std::max(1, static_cast<int>(1.0 / h)) : cells;
    double sup = 0.0;
    for (int i = 0; i < cells; ++i)
        for (int j = i + 1; j <= std::min(cells, i + max_span); ++j) {
            const double mu = pmu[j] - pmu[i];
            if (mu <= 0.0) continue;
            const double a1 = (pw[j] - pw[i]) / mu;
            const double a2 = (pwp[j] - pwp[i]) / mu;
            sup = std::max(sup, a1 * std::pow(a2, p - 1.0));
        }
    return sup;
}

RadialProfile maximal_fn(const RadialProfile& h, double alpha) {
    RadialProfile out = h;
    const auto& nodes = h.rule->nodes;
    const std::size_t nn = nodes.size();
    std::vector<double> wmu(nn);
    for (std::size_t i = 0; i < nn; ++i)
        wmu[i] = h.rule->weights[i] *
                 std::pow(nodes[i], 2.0 * alpha + 1.0 - h.measure_exponent);
    for (std::size_t i = 0; i < nn; ++i) {
        double best = 0.0;
        for (int e = -10; e <= 4; ++e) {
            const double rho = std::ldexp(1.0, e);
            double mass = 0.0, num = 0.0;
            for (std::size_t q = 0; q < nn; ++q) {
                if (std::abs(nodes[q] - nodes[i]) <= rho) {
                    mass += wmu[q];
                    num += wmu[q] * std::abs(h.values[q]);
                }
            }
            if (mass > 0.0) best = std::max(best, num / mass);
        }
        out.values[i] = best;
    }
    return out;
}

GFunctionResult g_function_spectral(const HermiteCoefficients& c, int k,
                                    const std::vector<std::array<double, 3>>& points) {
    if (k < 1) throw std::invalid_argument("g_function_spectral: k must be >= 1");
    GFunctionResult res;
    res.k = k;
    res.method = "spectral";
    res.truncation_mass = c.truncation_mass;
    const auto u = hermite_level_functions_at(c, points);
    const int levels = c.level_max + 1;
    // weights Gamma(2k) (lam_a lam_b)^k / (lam_a + lam_b)^{2k}
    std::vector<std::vector<double>> wt(levels, std::vector<double>(levels));
    const double g2k = std::exp(lgamma_of(2.0 * k));
    for (int a = 0; a < levels; ++a)
        for (int b = 0; b < levels; ++b) {
            const double la = 2.0 * a + c.n, lb = 2.0 * b + c.n;
            wt[a][b] = g2k * std::pow(la * lb, k) * std::pow(la + lb, -2.0 * k);
        }
    res.values.assign(points.size(), 0.0);
    for (std::size_t pnt = 0; pnt < points.size(); ++pnt) {
        double acc = 0.0;
        for (int a = 0; a < levels; ++a) {
            if (u[a][pnt] == 0.0) continue;
            for (int b = 0; b < levels; ++b) acc += wt[a][b] * u[a][pnt] * u[b][pnt];
        }
        res.values[pnt] = std::sqrt(std::max(0.0, acc));
    }
    return res;
}

GFunctionResult g_function_temporal(const HermiteCoefficients& c, int k,
                                    const std::vector<std::array<double, 3>>& points,
                                    const QuadratureRule& temporal) {
    if (k < 1) throw std::invalid_argument("g_function_temporal: k must be >= 1");
    GFunctionResult res;
    res.k = k;
    res.method = "temporal:" + temporal.declared_weight;
    res.truncation_mass = c.truncation_mass;
    const auto u = hermite_level_functions_at(c, points);
    const int levels = c.level_max + 1;
    res.values.assign(points.size(), 0.0);
    const std::size_t nt = temporal.nodes.size();
    // derivative factors (-lam)^k e^{-lam t} per level per t-node
    std::vector<std::vector<double>> fac(nt, std::vector<double>(levels));
    for (std::size_t it = 0; it < nt; ++it)
        for (int a = 0; a < levels; ++a) {
            const double lam = 2.0 * a + c.n;
            fac[it][a] = std::pow(-lam, k) * std::exp(-lam * temporal.nodes[it]);
        }
    for (std::size_t pnt = 0; pnt < points.size(); ++pnt) {
        double acc = 0.0;
        for (std::size_t it = 0; it < nt; ++it) {
            double d = 0.0;
            for (int a = 0; a < levels; ++a) d += fac[it][a] * u[a][pnt];
            acc += temporal.weights[it] * d * d;
        }
        res.values[pnt] = std::sqrt(std::max(0.0, acc));
    }
    return res;
}

RadialProfile g_component(const RadialProfile& g, int n, int m, int k, int j_max) {
    if (k < 1) throw std::invalid_argument("g_component: k must be >= 1");
    if (std::abs(g.measure_exponent - (n - 1.0)) > 1e-12)
        throw std::invalid_argument("g_component: expected r^{n-1} profile");
    const double alpha = 0.5 * n + m - 1.0;
    // expand s^{-m} g in the psi_j^alpha basis
    RadialProfile gt;
    gt.rule = std::make_shared<QuadratureRule>(
        radial_rule_like(*g.rule, g.measure_exponent, 2.0 * alpha + 1.0));
    gt.measure_exponent = 2.0 * alpha + 1.0;
    gt.values.resize(g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i)
        gt.values[i] = g.values[i] * std::pow(g.rule->nodes[i], -m);
    const auto b = laguerre_expand(gt, alpha, j_max);
    const double g2k = std::exp(lgamma_of(2.0 * k));
    // psi table
    const auto& nodes = g.rule->nodes;
    std::vector<std::vector<double>> psi(j_max + 1, std::vector<double>(nodes.size()));
    for (int j = 0; j <= j_max; ++j)
        for (std::size_t i = 0; i < nodes.size(); ++i)
            psi[j][i] = laguerre_psi(j, alpha, nodes[i]);
    RadialProfile out = g;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        double acc = 0.0;
        for (int a = 0; a <= j_max; ++a) {
            if (b[a] == 0.0) continue;
            const double la = 4.0 * a + 2.0 * alpha + 2.0;
            for (int bb = 0; bb <= j_max; ++bb) {
                const double lb = 4.0 * bb + 2.0 * alpha + 2.0;
                acc += b[a] * b[bb] * std::pow(la * lb, k) * g2k *
                       std::pow(la + lb, -2.0 * k) * psi[a][i] * psi[bb][i];
            }
        }
        out.values[i] = std::pow(nodes[i], m) * std::sqrt(std::max(0.0, acc));
    }
    return out;
}

std::vector<double> g_star_at(const HermiteCoefficients& c, int k, const PolarField& f_grid,
                              const QuadratureRule& temporal,
                              const std::vector<std::array<double, 3>>& x_points) {
    if (2 * k <= c.n) throw std::invalid_argument("g_star_at: requires k > n/2");
    const auto pts = field_points(f_grid);
    const auto u = hermite_level_functions_at(c, pts);
    const int levels = c.level_max + 1;
    const std::size_t nt = temporal.nodes.size();
    const std::size_t ny = pts.size();
    // |d_t T_t f(y)|^2 tables
    std::vector<std::vector<double>> d2(nt, std::vector<double>(ny, 0.0));
    for (std::size_t it = 0; it < nt; ++it) {
        const double t = temporal.nodes[it];
        std::vector<double> fac(levels);
        for (int a = 0; a < levels; ++a) {
            const double lam = 2.0 * a + c.n;
            fac[a] = -lam * std::exp(-lam * t);
        }
        for (std::size_t y = 0; y < ny; ++y) {
            double d = 0.0;
            for (int a = 0; a < levels; ++a) d += fac[a] * u[a][y];
            d2[it][y] = d * d;
        }
    }
    std::vector<double> wy(ny);
    {
        std::size_t y = 0;
        for (int i = 0; i < f_grid.radial_size(); ++i)
            for (int q = 0; q < f_grid.sphere_size(); ++q) wy[y++] = f_grid.weight(i, q);
    }
    std::vector<double> out(x_points.size(), 0.0);
    for (std::size_t xp = 0; xp < x_points.size(); ++xp) {
        const auto& x = x_points[xp];
        double acc = 0.0;
        for (std::size_t it = 0; it < nt; ++it) {
            const double t = temporal.nodes[it];
            const double tn = std::pow(t, -0.5 * c.n);
            double inner = 0.0;
            for (std::size_t y = 0; y < ny; ++y) {
                double dist2 = 0.0;
                for (int cc = 0; cc < 3; ++cc) dist2 += (x[cc] - pts[y][cc]) * (x[cc] - pts[y][cc]);
                inner += wy[y] * d2[it][y] * inv_ipow(1.0 + dist2 / t, k);
            }
            // temporal weights already carry t^{2k-1}; the definition wants
            // plain t dt, so the caller must pass a k = 1 rule.
            acc += temporal.weights[it] * tn * inner;
        }
        out[xp] = std::sqrt(std::max(0.0, acc));
    }
    return out;
}

RadialProfile g_star_component(const RadialProfile& g, int n, int m, int k,
                               const QuadratureRule& temporal, int j_max,
                               int angular_nodes) {
    if (2 * k <= n) throw std::invalid_argument("g_star_component: requires k > n/2");
    if (std::abs(g.measure_exponent - (n - 1.0)) > 1e-12)
        throw std::invalid_argument("g_star_component: expected r^{n-1} profile");
    const double alpha = 0.5 * n + m - 1.0;
    RadialProfile gt;
    gt.rule = std::make_shared<QuadratureRule>(
        radial_rule_like(*g.rule, g.measure_exponent, 2.0 * alpha + 1.0));
    gt.measure_exponent = 2.0 * alpha + 1.0;
    gt.values.resize(g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i)
        gt.values[i] = g.values[i] * std::pow(g.rule->nodes[i], -m);
    const auto b = laguerre_expand(gt, alpha, j_max);
    const auto& nodes = g.rule->nodes;
    const std::size_t nn = nodes.size();
    std::vector<std::vector<double>> psi(j_max + 1, std::vector<double>(nn));
    for (int j = 0; j <= j_max; ++j)
        for (std::size_t i = 0; i < nn; ++i) psi[j][i] = laguerre_psi(j, alpha, nodes[i]);
    const std::size_t nt = temporal.nodes.size();
    // D(t,s) = d_t T_{t,m} g(s) = s^m sum_j b_j (-lam_j) e^{-lam_j t} psi_j(s)
    std::vector<std::vector<double>> d2(nt, std::vector<double>(nn, 0.0));
    for (std::size_t it = 0; it < nt; ++it) {
        const double t = temporal.nodes[it];
        for (std::size_t s = 0; s < nn; ++s) {
            double d = 0.0;
            for (int j = 0; j <= j_max; ++j) {
                const double lam = 4.0 * j + 2.0 * alpha + 2.0;
                d += b[j] * (-lam) * std::exp(-lam * t) * psi[j][s];
            }
            d *= std::pow(nodes[s], m);
            d2[it][s] = d * d;
        }
    }
    const QuadratureRule jac = gauss_jacobi(angular_nodes, n);
    const double eq = equatorial_sphere_measure(n);
    RadialProfile out = g;
    for (std::size_t ir = 0; ir < nn; ++ir) {
        const double r = nodes[ir];
        double acc = 0.0;
        for (std::size_t it = 0; it < nt; ++it) {
            const double t = temporal.nodes[it];
            const double tn = std::pow(t, -0.5 * n);
            double inner = 0.0;
            for (std::size_t is = 0; is < nn; ++is) {
                const double s = nodes[is];
                // zonal average of (1 + |r x' - s y'|^2 / t)^{-k}
                double zonal = 0.0;
                for (int a = 0; a < jac.order(); ++a) {
                    const double qm = r * r + s * s - 2.0 * r * s * jac.nodes[a];
                    zonal += jac.weights[a] * inv_ipow(1.0 + qm / t, k);
                }
                inner += g.rule->weights[is] * d2[it][is] * eq * zonal;
            }
            acc += temporal.weights[it] * tn * inner;
        }
        out.values[ir] = std::sqrt(std::max(0.0, acc));
    }
    return out;
}

CzEstimateReport verify_cz_estimates(const std::vector<int>& m_list, int k, int n,
                                     const std::vector<double>& r_grid, double min_gap,
                                     int temporal_nodes) {
    CzEstimateReport report;
    report.n = n;
    report.k = k;
    report.m_list = m_list;
    const QuadratureRule trule = log_temporal_rule(temporal_nodes, k, 1e-8, 25.0);
    const double h = 1e-4;  // central-difference step in r
    // pair set: grid x grid plus near-diagonal offsets at every radius (the
    // uniformity-in-m content of the bound lives just off the diagonal)
    std::vector<std::pair<double, double>> pairs;
    const double top = *std::max_element(r_grid.begin(), r_grid.end());
    for (double r : r_grid) {
        for (double s : r_grid)
            if (std::abs(r - s) >= min_gap) pairs.emplace_back(r, s);
        for (double gap : {min_gap, 2.0 * min_gap, 6.0 * min_gap, 20.0 * min_gap}) {
            if (r + gap <= top) pairs.emplace_back(r, r + gap);
            if (r - gap >= min_gap) pairs.emplace_back(r, r - gap);
        }
    }
    for (int m : m_list) {
        double sup_i = 0.0, sup_ii = 0.0;
        for (const auto& [r, s] : pairs) {
            {
                const double gap = std::abs(r - s);
                double acc_i = 0.0, acc_ii = 0.0;
                for (int it = 0; it < trule.order(); ++it) {
                    const double t = trule.nodes[it];
                    const double v = heat_component_kernel_dt(k, n, m, t, r, s);
                    const double vp = heat_component_kernel_dt(k, n, m, t, r + h, s);
                    const double vm = heat_component_kernel_dt(k, n, m, t, r - h, s);
                    const double dr = (vp - vm) / (2.0 * h);
                    acc_i += trule.weights[it] * v * v;
                    acc_ii += trule.weights[it] * dr * dr;
                }
                const double ball = gap * std::pow(r + s, n - 1.0);
                sup_i = std::max(sup_i, std::sqrt(acc_i) * ball);
                sup_ii = std::max(sup_ii, std::sqrt(acc_ii) * gap * ball);
            }
        }
        report.sup_i.push_back(sup_i);
        report.sup_ii.push_back(sup_ii);
    }
    return report;
}

double lemma_abc_ratio(double A, double B, double c, double lambda, int nodes) {
    if (!(c >= 0.5) || !(B > 0.0) || !(B < A) || !(lambda > 0.0))
        throw std::invalid_argument("lemma_abc_ratio: need c >= 1/2, 0 < B < A, lambda > 0");
    const QuadratureRule jac = gauss_jacobi_general(nodes, c - 0.5, 0.0);
    double integral = 0.0;
    for (int i = 0; i < jac.order(); ++i) {
        const double u = 0.5 * (jac.nodes[i] + 1.0);
        // weight (1-x)^{c-1/2} on [-1,1] maps to (2(1-u))^{c-1/2}; du = dx/2
        integral += jac.weights[i] * std::pow(A - B * u, -(c + lambda + 0.5));
    }
    integral *= std::pow(2.0, -(c + 0.5));
    const double bound = std::pow(A, -(c + 0.5)) * std::pow(A - B, -lambda);
    return integral / bound;
}

double mehler_cz_sup(int n, int k, int samples, std::uint64_t seed, int temporal_nodes) {
    Rng rng(seed);
    const QuadratureRule trule = log_temporal_rule(temporal_nodes, k, 1e-8, 25.0);
    double sup = 0.0;
    for (int s = 0; s < samples; ++s) {
        std::array<double, 3> x{0, 0, 0}, y{0, 0, 0};
        for (int c = 0; c < n; ++c) {
            x[c] = rng.uniform(-3.0, 3.0);
            y[c] = rng.uniform(-3.0, 3.0);
        }
        double dist2 = 0.0, anti2 = 0.0;
        for (int c = 0; c < 3; ++c) {
            dist2 += (x[c] - y[c]) * (x[c] - y[c]);
            anti2 += (x[c] + y[c]) * (x[c] + y[c]);
        }
        const double dist = std::sqrt(dist2);
        if (dist < 0.05) continue;
        double acc = 0.0;
        for (int it = 0; it < trule.order(); ++it) {
            const double v = mehler_kernel_dt(k, n, trule.nodes[it], dist, std::sqrt(anti2));
            acc += trule.weights[it] * v * v;
        }
        sup = std::max(sup, std::sqrt(acc) * std::pow(dist, n));
    }
    return sup;
}

NormProbeResult operator_norm_probe(const std::function<PolarField(const PolarField&)>& apply,
                                    double p, const std::vector<PolarField>& trials) {
    if (trials.empty()) throw std::invalid_argument("operator_norm_probe: trial set empty");
    NormProbeResult res;
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const double denom = mixed_norm(trials[i], p);
        if (denom <= 0.0) continue;
        const double ratio = mixed_norm(apply(trials[i]), p) / denom;
        res.ratios.push_back(ratio);
        if (ratio > res.max_ratio) {
            res.max_ratio = ratio;
            res.argmax_trial = static_cast<int>(i);
        }
    }
    return res;
}

NormProbeResult operator_norm_probe_spectral(
    const std::function<HermiteCoefficients(const HermiteCoefficients&)>& apply, double p,
    const std::vector<HermiteCoefficients>& trials, const RadialRulePtr& radial,
    const SphereRulePtr& sphere) {
    if (trials.empty()) throw std::invalid_argument("operator_norm_probe_spectral: empty trials");
    NormProbeResult res;
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const PolarField f = hermite_synthesize(trials[i], radial, sphere);
        const double denom = mixed_norm(f, p);
        if (denom <= 0.0) continue;
        const PolarField tf = hermite_synthesize(apply(trials[i]), radial, sphere);
        const double ratio = mixed_norm(tf, p) / denom;
        res.ratios.push_back(ratio);
        if (ratio > res.max_ratio) {
            res.max_ratio = ratio;
            res.argmax_trial = static_cast<int>(i);
        }
    }
    return res;
}

NormProbeResult operator_norm_probe_multiplier(const MultiplierSpec& spec, double p,
                                               const std::vector<HermiteCoefficients>& trials,
                                               const RadialRulePtr& radial,
                                               const SphereRulePtr& sphere) {
    if (trials.empty())
        throw std::invalid_argument("operator_norm_probe_multiplier: empty trials");
    NormProbeResult res;
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const PolarField f = hermite_synthesize(trials[i], radial, sphere);
        const double denom = mixed_norm(f, p);
        if (denom <= 0.0) continue;
        const auto re = apply_multiplier([&spec](double lam) { return spec.phi(lam).real(); },
                                         trials[i]);
        double ratio;
        if (spec.is_complex) {
            const auto im = apply_multiplier(
                [&spec](double lam) { return spec.phi(lam).imag(); }, trials[i]);
            ratio = mixed_norm_pair(hermite_synthesize(re, radial, sphere),
                                    hermite_synthesize(im, radial, sphere), p) /
                    denom;
        } else {
            ratio = mixed_norm(hermite_synthesize(re, radial, sphere), p) / denom;
        }
        res.ratios.push_back(ratio);
        if (ratio > res.max_ratio) {
            res.max_ratio = ratio;
            res.argmax_trial = static_cast<int>(i);
        }
    }
    return res;
}

std::vector<HermiteCoefficients> make_probe_trials(int n, int level_max,
                                                   const RadialRulePtr& radial,
                                                   const SphereRulePtr& sphere,
                                                   std::uint64_t seed,
                                                   const std::vector<double>& bump_centers,
                                                   int random_count) {
    Rng rng(seed);
    std::vector<HermiteCoefficients> trials;
    // random coefficient vectors
    for (int t = 0; t < random_count; ++t) {
        HermiteCoefficients c;
        c.n = n;
        c.level_max = level_max;
        c.levels.resize(level_max + 1);
        for (int k = 0; k <= level_max; ++k) {
            c.levels[k].resize(hermite_level_dim(n, k));
            for (double& v : c.levels[k]) v = rng.normal();
        }
        trials.push_back(std::move(c));
    }
    // level-concentrated vectors (pure eigenfunction mixes at one level)
    for (int k : {0, level_max / 2, level_max}) {
        HermiteCoefficients c;
        c.n = n;
        c.level_max = level_max;
        c.levels.resize(level_max + 1);
        for (int l = 0; l <= level_max; ++l) c.levels[l].assign(hermite_level_dim(n, l), 0.0);
        c.levels[k][0] = 1.0;
        trials.push_back(std::move(c));
    }
    // radial bumps times a low harmonic, band-limited by analysis
    for (double r0 : bump_centers) {
        for (int mode = 0; mode < 2; ++mode) {
            const double width = (r0 == 0.0) ? 1.0 : 0.5;
            PolarField f = make_field(n, radial, sphere,
                                      [r0, width, mode](const std::array<double, 3>& x) {
                                          const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] +
                                                                     x[2] * x[2]);
                                          const double bump =
                                              std::exp(-0.5 * (r - r0) * (r - r0) /
                                                       (width * width));
                                          return mode == 0 ? bump : bump * x[0] / std::max(r, 1e-12);
                                      });
            // Project onto the Hermite span; the band-limited field is the trial.
            trials.push_back(hermite_analyze(f, level_max, 1.0));
        }
    }
    return trials;
}

std::vector<std::string> probe_trial_names(int level_max,
                                           const std::vector<double>& bump_centers,
                                           int random_count) {
    std::vector<std::string> names;
    for (int t = 0; t < random_count; ++t) names.push_back("rand" + std::to_string(t));
    for (int k : {0, level_max / 2, level_max}) names.push_back("level" + std::to_string(k));
    char buf[64];
    for (double r0 : bump_centers) {
        std::snprintf(buf, sizeof(buf), "bump%.3g-radial", r0);
        names.emplace_back(buf);
        std::snprintf(buf, sizeof(buf), "bump%.3g-angular", r0);
        names.emplace_back(buf);
    }
    return names;
}

}  // namespace mixnorm
