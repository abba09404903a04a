#include "mixnorm/verify.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "mixnorm/kernels.hpp"
#include "mixnorm/rng.hpp"
#include "mixnorm/specfun.hpp"

namespace mixnorm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

CheckResult check(std::string id, std::string reference, double observed, double tol,
                  double bound = 0.0) {
    CheckResult c;
    c.id = std::move(id);
    c.reference = std::move(reference);
    c.observed = observed;
    c.tolerance = tol;
    c.bound = (bound == 0.0) ? tol : bound;
    c.pass = observed <= c.bound;
    return c;
}

std::vector<int> dims_for(const RunConfig& cfg, std::vector<int> defaults) {
    if (cfg.n > 0) return {cfg.n};
    return defaults;
}

// --------------------------------------------------------------------------
// quad-precision machinery for the exponential Funk-Hecke integral; the
// small-z large-m corner needs ~30 significant digits to survive the
// cancellation in the oscillatory quadrature sums.
// --------------------------------------------------------------------------
using f128 = __float128;

struct RuleQ {
    std::vector<f128> nodes, weights;
};

RuleQ gauss_legendre_q(int N) {
    RuleQ rule;
    rule.nodes.assign(N, 0);
    rule.weights.assign(N, 0);
    const f128 one = 1;
    for (int i = 1; i <= (N + 1) / 2; ++i) {
        f128 z = cosq(M_PIq * (i - 0.25Q) / (N + 0.5Q));
        f128 pp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            f128 p1 = 1, p2 = 0;
            for (int j = 1; j <= N; ++j) {
                const f128 p3 = p2;
                p2 = p1;
                p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
            }
            pp = N * (z * p1 - p2) / (z * z - one);
            const f128 z1 = z;
            z = z1 - p1 / pp;
            if (fabsq(z - z1) < 1e-32Q) break;
        }
        rule.nodes[i - 1] = -z;
        rule.nodes[N - i] = z;
        rule.weights[i - 1] = 2 / ((one - z * z) * pp * pp);
        rule.weights[N - i] = rule.weights[i - 1];
    }
    return rule;
}

RuleQ gauss_jacobi_q(int N, int n) {
    RuleQ rule;
    if (n == 2) {  // Chebyshev (1-u^2)^{-1/2}
        rule.nodes.resize(N);
        rule.weights.assign(N, M_PIq / N);
        for (int i = 0; i < N; ++i) rule.nodes[i] = cosq(M_PIq * (N - i - 0.5Q) / N);
        return rule;
    }
    if (n == 3) return gauss_legendre_q(N);
    if (n == 4) {  // Chebyshev second kind (1-u^2)^{1/2}
        rule.nodes.resize(N);
        rule.weights.resize(N);
        for (int i = 1; i <= N; ++i) {
            const f128 th = M_PIq * i / (N + 1);
            rule.nodes[N - i] = cosq(th);
            rule.weights[N - i] = M_PIq / (N + 1) * sinq(th) * sinq(th);
        }
        return rule;
    }
    throw std::invalid_argument("gauss_jacobi_q: n must be in {2,3,4}");
}

f128 ultraspherical_P_q(int m, int n, f128 u) {
    if (m == 0) return 1;
    if (m == 1) return u;
    const f128 lambda = 0.5Q * n - 1;
    f128 pm1 = 1, p = u;
    for (int j = 1; j < m; ++j) {
        const f128 pj = (2 * (j + lambda) * u * p - j * pm1) / (j + 2 * lambda);
        pm1 = p;
        p = pj;
    }
    return p;
}

f128 bessel_I_q(f128 nu, f128 z) {
    const f128 q = 0.25Q * z * z;
    f128 term = expq(nu * logq(0.5Q * z) - lgammaq(nu + 1));
    f128 sum = term;
    for (int j = 1; j < 400; ++j) {
        term *= q / (j * (j + nu));
        sum += term;
        if (term < 1e-40Q * sum) break;
    }
    return sum;
}

}  // namespace

double lemma31_max_rel_err(int n, int m_max, const std::vector<double>& z_list,
                           int quad_nodes) {
    const RuleQ rule = gauss_jacobi_q(quad_nodes, n);
    const f128 gamma_half = sqrtq(M_PIq);
    const f128 gamma_n12 = tgammaq(0.5Q * (n - 1));
    f128 worst = 0;
    for (double zd : z_list) {
        const f128 z = zd;
        for (int m = 0; m <= m_max; ++m) {
            f128 lhs = 0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                lhs += rule.weights[i] * expq(z * rule.nodes[i]) *
                       ultraspherical_P_q(m, n, rule.nodes[i]);
            const f128 nu = 0.5Q * n + m - 1;
            const f128 rhs =
                gamma_half * gamma_n12 * powq(0.5Q * z, 1 - 0.5Q * n) * bessel_I_q(nu, z);
            const f128 rel = fabsq(lhs - rhs) / fabsq(rhs);
            if (rel > worst) worst = rel;
        }
    }
    return static_cast<double>(worst);
}

double laguerre_spectral_consistency(int terms, const std::vector<double>& alphas,
                                     const std::vector<double>& t_list) {
    const std::vector<double> grid = {0.3, 0.5, 1.0, 1.5, 2.5, 3.0, 4.0, 5.0, 6.0};
    double worst = 0.0;
    for (double alpha : alphas)
        for (double t : t_list) {
            // truncated spectral sums over the whole grid
            std::vector<std::vector<double>> psi(terms + 1, std::vector<double>(grid.size()));
            for (int k = 0; k <= terms; ++k)
                for (std::size_t i = 0; i < grid.size(); ++i)
                    psi[k][i] = laguerre_psi(k, alpha, grid[i]);
            double scale = 0.0;
            std::vector<std::vector<double>> sum(grid.size(),
                                                 std::vector<double>(grid.size(), 0.0));
            std::vector<std::vector<double>> closed(grid.size(),
                                                    std::vector<double>(grid.size(), 0.0));
            for (std::size_t i = 0; i < grid.size(); ++i)
                for (std::size_t j = 0; j < grid.size(); ++j) {
                    for (int k = 0; k <= terms; ++k)
                        sum[i][j] += std::exp(-(4.0 * k + 2.0 * alpha + 2.0) * t) *
                                     psi[k][i] * psi[k][j];
                    closed[i][j] = laguerre_kernel(t, alpha, grid[i], grid[j]);
                    scale = std::max(scale, closed[i][j]);
                }
            for (std::size_t i = 0; i < grid.size(); ++i)
                for (std::size_t j = 0; j < grid.size(); ++j) {
                    // sup-normalized everywhere; pointwise-relative where the
                    // truncated tail cannot dominate the kernel value
                    const double diff = std::abs(sum[i][j] - closed[i][j]);
                    worst = std::max(worst, diff / scale);
                    if (std::abs(grid[i] - grid[j]) <= 1.0)
                        worst = std::max(worst, diff / closed[i][j]);
                }
        }
    return worst;
}

int default_level_max(int n) { return n == 2 ? 40 : 24; }

int default_sphere_order(int m_max, int level_max) { return 2 * std::max(m_max, level_max); }

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "mehler", "lemma31", "hecke-bochner", "funk-hecke", "gfun-l2", "cz", "projection"};
    return names;
}

// --------------------------------------------------------------------------
// mehler suite
// --------------------------------------------------------------------------
namespace {

std::vector<CheckResult> suite_mehler(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    const double ts = cfg.tol_scale;
    Rng rng(cfg.seed);
    double worst_forms = 0.0, worst_sym = 0.0;
    for (int n : dims_for(cfg, {2, 3})) {
        for (int trial = 0; trial < 500; ++trial) {
            const double t = rng.uniform(0.05, 3.0);
            std::array<double, 3> x{0, 0, 0}, y{0, 0, 0};
            const double box = 4.0 / std::sqrt(static_cast<double>(n));
            for (int c = 0; c < n; ++c) {
                x[c] = rng.uniform(-box, box);
                y[c] = rng.uniform(-box, box);
            }
            const double a = mehler_kernel(n, t, x, y, MehlerForm::Direct);
            const double b = mehler_kernel(n, t, x, y, MehlerForm::Factorized);
            worst_forms = std::max(worst_forms, std::abs(a - b) / a);
            const double ba = mehler_kernel(n, t, y, x, MehlerForm::Factorized);
            worst_sym = std::max(worst_sym, std::abs(b - ba) / b);
        }
    }
    auto c1 = check("mehler.forms-agree", "heat-kernel-factorization", worst_forms, 1e-12 * ts);
    c1.params["samples"] = 1000;
    out.push_back(c1);
    out.push_back(check("mehler.symmetry", "heat-kernel-symmetry", worst_sym, 1e-12 * ts));

    // semigroup composition via tensor Gauss-Hermite quadrature, n = 2
    {
        const QuadratureRule gh = gauss_hermite(80);
        double worst = 0.0;
        const std::array<std::array<double, 2>, 2> times = {{{0.3, 0.4}, {0.5, 1.0}}};
        for (const auto& tt : times)
            for (int trial = 0; trial < 3; ++trial) {
                std::array<double, 3> x{rng.uniform(-2, 2), rng.uniform(-2, 2), 0};
                std::array<double, 3> y{rng.uniform(-2, 2), rng.uniform(-2, 2), 0};
                double acc = 0.0;
                for (std::size_t i = 0; i < gh.nodes.size(); ++i)
                    for (std::size_t j = 0; j < gh.nodes.size(); ++j) {
                        const std::array<double, 3> z{gh.nodes[i], gh.nodes[j], 0};
                        const double f = mehler_kernel(2, tt[0], x, z, MehlerForm::Factorized) *
                                         mehler_kernel(2, tt[1], z, y, MehlerForm::Factorized);
                        acc += gh.weights[i] * gh.weights[j] * f *
                               std::exp(z[0] * z[0] + z[1] * z[1]);
                    }
                const double ref =
                    mehler_kernel(2, tt[0] + tt[1], x, y, MehlerForm::Factorized);
                worst = std::max(worst, std::abs(acc - ref) / ref);
            }
        out.push_back(check("mehler.semigroup", "heat-semigroup-composition", worst, 1e-8 * ts));
    }

    // heat trace against the level multiplicities, n = 2
    {
        const QuadratureRule rad = radial_rule(cfg.radial_nodes, 1.0, cfg.r_max);
        double worst = 0.0;
        for (double t : {0.3, 0.5, 1.0}) {
            double quad = 0.0;
            for (std::size_t i = 0; i < rad.nodes.size(); ++i) {
                const std::array<double, 3> x{rad.nodes[i], 0, 0};
                quad += rad.weights[i] * mehler_kernel(2, t, x, x, MehlerForm::Direct);
            }
            quad *= 2.0 * kPi;
            double spectral = 0.0;
            for (int k = 0; k < 4000; ++k) spectral += (k + 1) * std::exp(-(2.0 * k + 2.0) * t);
            worst = std::max(worst, std::abs(quad - spectral) / spectral);
        }
        out.push_back(check("mehler.trace", "heat-trace-multiplicities", worst, 1e-7 * ts));
    }
    return out;
}

// --------------------------------------------------------------------------
// lemma31 suite
// --------------------------------------------------------------------------
std::vector<CheckResult> suite_lemma31(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    const std::vector<double> zs = {0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 15.0, 20.0};
    for (int n : dims_for(cfg, {2, 3, 4})) {
        const double worst = lemma31_max_rel_err(n, 10, zs, 96);
        auto c = check("lemma31.bessel-identity.n" + std::to_string(n),
                       "funk-hecke-exponential-integral", worst, 1e-8 * cfg.tol_scale);
        c.params["m_max"] = 10;
        c.params["z_min"] = zs.front();
        c.params["z_max"] = zs.back();
        out.push_back(c);
    }
    return out;
}

// --------------------------------------------------------------------------
// hecke-bochner suite
// --------------------------------------------------------------------------
std::vector<CheckResult> suite_hecke_bochner(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    const double ts = cfg.tol_scale;
    const int m_cap = cfg.suite_m_max >= 0 ? cfg.suite_m_max : 4;
    for (int n : dims_for(cfg, {2, 3})) {
        const HeckeBochnerAudit audit = hecke_bochner_audit(n, m_cap, {0.2, 0.5, 1.0}, cfg);
        auto c = check("hecke-bochner.identity.n" + std::to_string(n),
                       "semigroup-laguerre-reduction", audit.max_identity_rel_err, 1e-6 * ts);
        c.params["m_max"] = m_cap;
        c.params["fitted_constant"] = audit.fitted_constant_mean;
        c.params["reference_constant"] = audit.reference_constant;
        c.params["fitted_over_reference"] =
            audit.fitted_constant_mean / audit.reference_constant;
        out.push_back(c);
        auto u = check("hecke-bochner.constant-uniformity.n" + std::to_string(n),
                       "reduction-constant-uniform-in-m-t", audit.fitted_constant_spread,
                       1e-6 * ts);
        u.params["fitted_constant"] = audit.fitted_constant_mean;
        out.push_back(u);
    }

    // spectral sum of the Laguerre kernel against its closed form
    {
        const double worst = laguerre_spectral_consistency(64, {0.5, 1.0, 1.5},
                                                           {0.1, 0.2, 0.5, 1.0});
        out.push_back(check("hecke-bochner.laguerre-spectral", "laguerre-kernel-spectral-sum",
                            worst, 1e-8 * ts));
    }
    return out;
}

// --------------------------------------------------------------------------
// funk-hecke suite
// --------------------------------------------------------------------------
std::vector<CheckResult> suite_funk_hecke(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    const double ts = cfg.tol_scale;
    for (int n : dims_for(cfg, {2, 3})) {
        const std::string suffix = ".n" + std::to_string(n);
        const auto sphere = std::make_shared<SphereRule>(sphere_rule(n, 32));
        const auto basis = build_basis(n, 6, sphere);
        const QuadratureRule jac = gauss_jacobi(64, n);
        out.push_back(check("funk-hecke.residual-const" + suffix, "zonal-action-on-harmonics",
                            verify_funk_hecke([](double) { return 1.0; }, basis, jac),
                            1e-11 * ts));
        out.push_back(check("funk-hecke.residual-linear" + suffix, "zonal-action-on-harmonics",
                            verify_funk_hecke([](double t) { return t; }, basis, jac),
                            1e-10 * ts));
        out.push_back(check("funk-hecke.residual-exp" + suffix, "zonal-action-on-harmonics",
                            verify_funk_hecke([](double t) { return std::exp(3.0 * t); }, basis,
                                              jac),
                            1e-8 * ts));
    }

    // full pipeline vs direct kernel quadrature (heat kernel)
    for (int n : dims_for(cfg, {2, 3})) {
        const std::string suffix = ".n" + std::to_string(n);
        const int m_max = (n == 2) ? 8 : 6;
        const int nr = 120;
        const auto radial =
            std::make_shared<QuadratureRule>(radial_rule(nr, n - 1.0, cfg.r_max));
        const auto sphere =
            std::make_shared<SphereRule>(sphere_rule(n, 2 * m_max + 16));
        const auto basis = build_basis(n, m_max, sphere);
        const QuadratureRule jac = gauss_jacobi(128, n);
        PolarField f = make_field(n, radial, sphere, [&](const std::array<double, 3>& x) {
            const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
            const double g0 = std::exp(-0.5 * (r - 1.2) * (r - 1.2) / 0.36);
            const double g2 = r * r * std::exp(-0.5 * r * r);
            const double ang2 = (x[0] * x[0] - x[1] * x[1]) / std::max(r * r, 1e-12);
            const double ang5 = std::pow(x[0] / std::max(r, 1e-6), 5);
            return g0 + 0.8 * g2 * ang2 + 0.5 * g2 * ang5;
        });
        const double t = 0.5;
        const KernelK0 k0 = heat_kernel_k0(n, t);
        const PolarField tf = apply_via_components(k0, f, basis, jac);
        // direct route at sample points
        std::vector<std::array<double, 3>> pts;
        std::vector<double> pipeline_vals;
        for (int i = 10; i < nr; i += 17)
            for (int q = 0; q < sphere->size(); q += std::max(1, sphere->size() / 5)) {
                pts.push_back(f.point(i, q));
                pipeline_vals.push_back(tf.at(i, q));
            }
        const auto direct = hermite_semigroup_kernel_at(t, f, pts);
        double scale = 0.0, diff = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            scale = std::max(scale, std::abs(direct[i]));
            diff = std::max(diff, std::abs(direct[i] - pipeline_vals[i]));
        }
        out.push_back(check("funk-hecke.pipeline-heat" + suffix,
                            "component-reduction-pipeline", diff / scale, 1e-6 * ts));

        // shell Parseval on the direct-route output, sampled where the
        // output carries mass (deep-tail shells compare quadrature noise)
        double parseval_worst = 0.0;
        const HarmonicDecomposition dec = decompose(f, basis);
        const auto tables =
            build_component_tables(k0, m_max, n, radial->nodes, radial->nodes, jac);
        std::vector<int> shell_idx;
        for (double target : {0.8, 1.8, 3.2}) {
            int best = 0;
            for (int i = 1; i < nr; ++i)
                if (std::abs(radial->nodes[i] - target) <
                    std::abs(radial->nodes[best] - target))
                    best = i;
            shell_idx.push_back(best);
        }
        for (int i : shell_idx) {
            std::vector<std::array<double, 3>> ring;
            for (int q = 0; q < sphere->size(); ++q) ring.push_back(f.point(i, q));
            const auto tf_ring = hermite_semigroup_kernel_at(t, f, ring);
            double lhs = 0.0;
            for (int q = 0; q < sphere->size(); ++q)
                lhs += sphere->weights[q] * tf_ring[q] * tf_ring[q];
            double rhs = 0.0;
            RadialProfile g;
            g.rule = radial;
            g.measure_exponent = n - 1.0;
            for (int m = 0; m <= m_max; ++m)
                for (int j = 1; j <= basis->d(m); ++j) {
                    g.values = dec.profiles[m][j - 1];
                    const RadialProfile tg = component_operator(tables[m], g);
                    rhs += tg.values[i] * tg.values[i];
                }
            parseval_worst = std::max(parseval_worst, std::abs(lhs - rhs) / lhs);
        }
        out.push_back(check("funk-hecke.shell-parseval" + suffix, "shell-energy-identity",
                            parseval_worst, 1e-7 * ts));
    }

    // pipeline vs direct for the Bochner-Riesz kernel, n = 2
    {
        const int n = 2, m_max = 6, nr = 100;
        const auto radial =
            std::make_shared<QuadratureRule>(radial_rule(nr, n - 1.0, cfg.r_max));
        const auto sphere = std::make_shared<SphereRule>(sphere_rule(n, 2 * m_max + 8));
        const auto basis = build_basis(n, m_max, sphere);
        const QuadratureRule jac = gauss_jacobi(96, n);
        PolarField f = make_field(n, radial, sphere, [&](const std::array<double, 3>& x) {
            const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
            const double th = std::atan2(x[1], x[0]);
            return std::exp(-0.5 * (r - 1.0) * (r - 1.0) / 0.25) * (1.0 + 0.6 * std::cos(2 * th));
        });
        const double R = 6.0, delta = 1.0;
        const KernelK0 k0 = bochner_riesz_k0(n, R, delta, 0.5, 48);
        const PolarField tf = apply_via_components(k0, f, basis, jac);
        std::vector<std::array<double, 3>> pts;
        std::vector<double> pipeline_vals;
        for (int i = 5; i < nr; i += 13)
            for (int q = 0; q < sphere->size(); q += 7) {
                pts.push_back(f.point(i, q));
                pipeline_vals.push_back(tf.at(i, q));
            }
        const auto direct = kernel_apply_at(
            [&](const std::array<double, 3>& x, const std::array<double, 3>& y) {
                return bochner_riesz_kernel(n, R, delta, x, y, ProjectionMethod::Direct);
            },
            f, pts);
        double scale = 0.0, diff = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            scale = std::max(scale, std::abs(direct[i]));
            diff = std::max(diff, std::abs(direct[i] - pipeline_vals[i]));
        }
        out.push_back(check("funk-hecke.pipeline-riesz.n2", "component-reduction-pipeline",
                            diff / scale, 1e-6 * ts));
    }
    return out;
}

// --------------------------------------------------------------------------
// gfun-l2 suite
// --------------------------------------------------------------------------
std::vector<CheckResult> suite_gfun_l2(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    const double ts = cfg.tol_scale;
    const int n = (cfg.n > 0) ? cfg.n : 2;
    const int level_max = 16;
    const auto radial = std::make_shared<QuadratureRule>(radial_rule(160, n - 1.0, 12.0));
    const auto sphere = std::make_shared<SphereRule>(sphere_rule(n, 2 * level_max));
    Rng rng(cfg.seed + 17);
    std::vector<HermiteCoefficients> trials;
    for (int t = 0; t < 50; ++t) {
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
    PolarField grid;  // weights/points reused across trials
    grid.n = n;
    grid.radial = radial;
    grid.sphere = sphere;
    grid.values.assign(static_cast<std::size_t>(radial->nodes.size()) * sphere->size(), 0.0);
    const auto pts = field_points(grid);
    std::vector<double> wts(pts.size());
    {
        std::size_t idx = 0;
        for (int i = 0; i < grid.radial_size(); ++i)
            for (int q = 0; q < grid.sphere_size(); ++q) wts[idx++] = grid.weight(i, q);
    }
    for (int k : {1, 2}) {
        const double reference = std::pow(2.0, -k) * std::sqrt(std::exp(std::lgamma(2.0 * k)));
        double worst = 0.0;
        for (const auto& c : trials) {
            const auto g = g_function_spectral(c, k, pts);
            double g2 = 0.0;
            for (std::size_t i = 0; i < pts.size(); ++i) g2 += wts[i] * g.values[i] * g.values[i];
            const double ratio = std::sqrt(g2) / c.plancherel_norm();
            worst = std::max(worst, std::abs(ratio / reference - 1.0));
        }
        auto c = check("gfun.l2-identity-k" + std::to_string(k), "square-function-l2-constant",
                       worst, 1e-7 * ts);
        c.params["reference_ratio"] = reference;
        c.params["trials"] = static_cast<double>(trials.size());
        out.push_back(c);
    }
    // spectral vs temporal-quadrature path agreement
    {
        double worst = 0.0;
        for (int k : {1, 2}) {
            const QuadratureRule temporal = temporal_rule(96, k, 40.0 / n);
            for (int t = 0; t < 3; ++t) {
                const auto gs = g_function_spectral(trials[t], k, pts);
                const auto gt = g_function_temporal(trials[t], k, pts, temporal);
                double scale = 0.0;
                for (double v : gs.values) scale = std::max(scale, std::abs(v));
                for (std::size_t i = 0; i < pts.size(); ++i)
                    worst = std::max(worst, std::abs(gs.values[i] - gt.values[i]) / scale);
            }
        }
        out.push_back(
            check("gfun.methods-agree", "temporal-vs-closed-form-integral", worst, 1e-7 * ts));
    }
    return out;
}

// --------------------------------------------------------------------------
// cz suite
// --------------------------------------------------------------------------
std::vector<CheckResult> suite_cz(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    const double ts = cfg.tol_scale;
    const std::vector<double> grid = {0.1, 0.3, 0.6, 1.0, 1.5, 2.2, 3.0, 4.0, 5.0, 6.0};
    std::vector<int> m_list;
    for (int m = 0; m <= 12; ++m) m_list.push_back(m);
    for (int n : dims_for(cfg, {2, 3})) {
        const std::string suffix = ".n" + std::to_string(n);
        const CzEstimateReport rep = verify_cz_estimates(m_list, 1, n, grid, 0.05, 240);
        double lo_i = 1e300, hi_i = 0.0, lo_ii = 1e300, hi_ii = 0.0, top = 0.0;
        for (std::size_t i = 0; i < rep.m_list.size(); ++i) {
            top = std::max({top, rep.sup_i[i], rep.sup_ii[i]});
            if (rep.m_list[i] >= 4) {
                lo_i = std::min(lo_i, rep.sup_i[i]);
                hi_i = std::max(hi_i, rep.sup_i[i]);
                lo_ii = std::min(lo_ii, rep.sup_ii[i]);
                hi_ii = std::max(hi_ii, rep.sup_ii[i]);
            }
        }
        auto ci = check("cz.uniformity-i" + suffix, "component-kernel-size-bound",
                        hi_i / lo_i - 1.0, 0.2 * ts);
        ci.params["sup_over_m"] = hi_i;
        out.push_back(ci);
        auto cii = check("cz.uniformity-ii" + suffix, "component-kernel-gradient-bound",
                         hi_ii / lo_ii - 1.0, 0.2 * ts);
        cii.params["sup_over_m"] = hi_ii;
        out.push_back(cii);
        out.push_back(check("cz.sup-finite" + suffix, "component-kernel-size-bound", top,
                            1e3 * ts));
    }
    // beta-type integral bound sweep with grid refinement
    {
        double sup_coarse = 0.0, sup_fine = 0.0;
        for (double A : {1.0, 2.0, 5.0, 10.0})
            for (double bf : {0.1, 0.3, 0.6, 0.9, 0.99})
                for (double c : {0.5, 1.0, 2.0})
                    for (double lam : {0.5, 1.0}) {
                        sup_coarse = std::max(sup_coarse, lemma_abc_ratio(A, bf * A, c, lam, 200));
                        sup_fine = std::max(sup_fine, lemma_abc_ratio(A, bf * A, c, lam, 400));
                    }
        auto c = check("cz.beta-integral-sweep", "weighted-beta-integral-bound",
                       std::abs(sup_fine / sup_coarse - 1.0), 0.05 * ts);
        c.params["sup_ratio"] = sup_fine;
        out.push_back(c);
    }
    {
        const double sup = mehler_cz_sup(2, 1, 200, cfg.seed + 3);
        out.push_back(check("cz.mehler-size-bound.n2", "heat-kernel-temporal-l2-bound", sup,
                            1e3 * ts));
    }
    return out;
}

// --------------------------------------------------------------------------
// projection suite
// --------------------------------------------------------------------------
std::vector<CheckResult> suite_projection(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    const double ts = cfg.tol_scale;
    Rng rng(cfg.seed + 5);
    // contour vs direct, n = 2, k <= 8
    {
        double worst = 0.0;
        for (int k = 0; k <= 8; ++k) {
            double scale = 0.0, diff = 0.0;
            for (int trial = 0; trial < 20; ++trial) {
                std::array<double, 3> x{rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5), 0};
                std::array<double, 3> y{rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5), 0};
                const double d = projection_kernel(2, k, x, y, ProjectionMethod::Direct);
                const double c = projection_kernel(2, k, x, y, ProjectionMethod::Contour);
                scale = std::max(scale, std::abs(d));
                diff = std::max(diff, std::abs(c - d));
            }
            worst = std::max(worst, diff / scale);
        }
        out.push_back(
            check("projection.contour-vs-direct.n2", "contour-projection-formula", worst,
                  1e-8 * ts));
    }
    // reproducing property via tensor Gauss-Hermite quadrature, n = 2
    {
        const QuadratureRule gh = gauss_hermite(72);
        double worst = 0.0;
        for (int k = 0; k <= 4; ++k) {
            std::array<double, 3> x{0.7, -0.4, 0}, y{-0.3, 1.1, 0};
            double acc = 0.0;
            for (std::size_t i = 0; i < gh.nodes.size(); ++i)
                for (std::size_t j = 0; j < gh.nodes.size(); ++j) {
                    const std::array<double, 3> z{gh.nodes[i], gh.nodes[j], 0};
                    acc += gh.weights[i] * gh.weights[j] *
                           projection_kernel(2, k, x, z, ProjectionMethod::Direct) *
                           projection_kernel(2, k, z, y, ProjectionMethod::Direct) *
                           std::exp(z[0] * z[0] + z[1] * z[1]);
                }
            const double ref = projection_kernel(2, k, x, y, ProjectionMethod::Direct);
            worst = std::max(worst, std::abs(acc - ref) / std::abs(ref));
        }
        out.push_back(check("projection.reproducing", "projection-idempotence", worst,
                            1e-8 * ts));
    }
    // rotation invariance of the Riesz-means kernel, n = 2 (direct sums)
    {
        double worst = 0.0;
        const double R = 10.0, delta = 1.0;
        for (int trial = 0; trial < 20; ++trial) {
            std::array<double, 3> x{rng.uniform(-2, 2), rng.uniform(-2, 2), 0};
            std::array<double, 3> y{rng.uniform(-2, 2), rng.uniform(-2, 2), 0};
            const double th = rng.uniform(0.0, 2.0 * kPi);
            const std::array<double, 3> rx{std::cos(th) * x[0] - std::sin(th) * x[1],
                                           std::sin(th) * x[0] + std::cos(th) * x[1], 0};
            const std::array<double, 3> ry{std::cos(th) * y[0] - std::sin(th) * y[1],
                                           std::sin(th) * y[0] + std::cos(th) * y[1], 0};
            const double a = bochner_riesz_kernel(2, R, delta, x, y, ProjectionMethod::Direct);
            const double b = bochner_riesz_kernel(2, R, delta, rx, ry, ProjectionMethod::Direct);
            worst = std::max(worst, std::abs(a - b) / std::max(1e-30, std::abs(a)));
        }
        out.push_back(check("projection.riesz-rotation-invariance", "kernel-k0-form", worst,
                            1e-10 * ts));
    }
    return out;
}

using SuiteFn = std::vector<CheckResult> (*)(const RunConfig&);

SuiteFn suite_fn(const std::string& name) {
    if (name == "mehler") return suite_mehler;
    if (name == "lemma31") return suite_lemma31;
    if (name == "hecke-bochner") return suite_hecke_bochner;
    if (name == "funk-hecke") return suite_funk_hecke;
    if (name == "gfun-l2") return suite_gfun_l2;
    if (name == "cz") return suite_cz;
    if (name == "projection") return suite_projection;
    return nullptr;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& name, const RunConfig& cfg) {
    if (name == "all") {
        std::vector<CheckResult> all;
        if (cfg.jobs > 1) {
            std::vector<std::future<std::vector<CheckResult>>> futures;
            for (const auto& s : suite_names())
                futures.push_back(std::async(std::launch::async,
                                             [s, &cfg] { return suite_fn(s)(cfg); }));
            for (auto& f : futures) {
                auto part = f.get();
                all.insert(all.end(), part.begin(), part.end());
            }
        } else {
            for (const auto& s : suite_names()) {
                auto part = suite_fn(s)(cfg);
                all.insert(all.end(), part.begin(), part.end());
            }
        }
        std::sort(all.begin(), all.end(),
                  [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
        return all;
    }
    SuiteFn fn = suite_fn(name);
    if (!fn) throw std::invalid_argument("unknown suite: " + name);
    return fn(cfg);
}

HeckeBochnerAudit hecke_bochner_audit(int n, int m_max, const std::vector<double>& t_list,
                                      const RunConfig& cfg) {
    HeckeBochnerAudit audit;
    audit.reference_constant =
        std::sqrt(kPi) * std::exp(std::lgamma(0.5 * (n - 1))) * std::pow(2.0, 0.5 * n - 1.0);
    const int nr = cfg.radial_nodes;
    const auto radial = std::make_shared<QuadratureRule>(radial_rule(nr, n - 1.0, cfg.r_max));
    const int order = std::max(2 * m_max, 56);
    const auto sphere = std::make_shared<SphereRule>(sphere_rule(n, order));
    const auto basis = build_basis(n, m_max, sphere);
    // sample radii: rule nodes nearest to a fixed list
    std::vector<int> ridx;
    for (double target : {0.4, 0.9, 1.4, 2.0, 2.7, 3.4}) {
        int best = 0;
        for (int i = 1; i < nr; ++i)
            if (std::abs(radial->nodes[i] - target) < std::abs(radial->nodes[best] - target))
                best = i;
        ridx.push_back(best);
    }
    std::vector<int> qidx;
    for (int q = 0; q < 8; ++q) qidx.push_back((q * sphere->size()) / 8);

    double cmin = 1e300, cmax = -1e300, csum = 0.0;
    int cases = 0;
    for (int m = 0; m <= m_max; ++m) {
        const double alpha = 0.5 * n + m - 1.0;
        for (int j : std::vector<int>{1, basis->d(m)}) {
            if (m == 0 && j != 1) continue;
            PolarField f = make_field(n, radial, sphere, [&](const std::array<double, 3>& x) {
                const double r =
                    std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
                if (r < 1e-14) return 0.0;
                const std::array<double, 3> w{x[0] / r, x[1] / r, x[2] / r};
                const double g = std::pow(r, m) * std::exp(-0.5 * r * r) *
                                 (1.0 + 0.4 * r * r + 0.1 * r * r * r * r);
                return g * basis->evaluate(m, j, w);
            });
            // tilde g = r^{-m} g sampled directly on the mu_alpha rule
            RadialProfile gt;
            gt.rule = std::make_shared<QuadratureRule>(
                radial_rule_like(*radial, n - 1.0, 2.0 * alpha + 1.0));
            gt.measure_exponent = 2.0 * alpha + 1.0;
            gt.values.resize(radial->nodes.size());
            for (std::size_t i = 0; i < gt.values.size(); ++i) {
                const double r = radial->nodes[i];
                gt.values[i] =
                    std::exp(-0.5 * r * r) * (1.0 + 0.4 * r * r + 0.1 * r * r * r * r);
            }
            for (double t : t_list) {
                const RadialProfile tg = laguerre_semigroup(t, alpha, gt);
                std::vector<std::array<double, 3>> pts;
                std::vector<double> rhs;
                for (int ri : ridx)
                    for (int qi : qidx) {
                        pts.push_back(f.point(ri, qi));
                        rhs.push_back(std::pow(radial->nodes[ri], m) *
                                      basis->value(m, j, qi) * tg.values[ri]);
                    }
                const auto lhs = hermite_semigroup_kernel_at(t, f, pts);
                double num = 0.0, den = 0.0, scale = 0.0;
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    num += lhs[i] * rhs[i];
                    den += rhs[i] * rhs[i];
                    scale = std::max(scale, std::abs(lhs[i]));
                }
                const double fitted = num / den;
                double diff = 0.0;
                for (std::size_t i = 0; i < pts.size(); ++i)
                    diff = std::max(diff, std::abs(lhs[i] - fitted * rhs[i]));
                audit.max_identity_rel_err =
                    std::max(audit.max_identity_rel_err, diff / scale);
                cmin = std::min(cmin, fitted);
                cmax = std::max(cmax, fitted);
                csum += fitted;
                ++cases;
            }
        }
    }
    audit.fitted_constant_mean = csum / cases;
    audit.fitted_constant_spread = (cmax - cmin) / std::abs(audit.fitted_constant_mean);
    return audit;
}

RieszScanResult riesz_scan(int n, const std::vector<double>& deltas,
                           const std::vector<double>& ps, const std::vector<double>& Rs,
                           const RunConfig& cfg) {
    if (deltas.empty() || ps.empty() || Rs.empty())
        throw std::invalid_argument("riesz_scan: empty parameter lists");
    RieszScanResult result;
    for (double delta : deltas) {
        ConjectureWindow w;
        w.delta = delta;
        w.p_lo = 2.0 * n / (n + 1.0 + 2.0 * delta);
        if (n - 1.0 - 2.0 * delta > 0.0) {
            w.p_hi = 2.0 * n / (n - 1.0 - 2.0 * delta);
            w.bounded_above = true;
        } else {
            w.p_hi = 0.0;
            w.bounded_above = false;
        }
        result.windows.push_back(w);
    }
    const int level_max = (cfg.level_max > 0) ? cfg.level_max : 32;
    const auto radial = std::make_shared<QuadratureRule>(radial_rule(160, n - 1.0, cfg.r_max));
    const auto sphere = std::make_shared<SphereRule>(
        sphere_rule(n, default_sphere_order(cfg.m_max, level_max)));
    for (double R : Rs) {
        const std::vector<double> centers = {0.0, 1.0, std::sqrt(R)};
        const auto trials =
            make_probe_trials(n, level_max, radial, sphere, cfg.seed, centers);
        const auto names = probe_trial_names(level_max, centers);
        // synthesize each trial once; reuse across deltas and ps
        std::vector<PolarField> fields;
        std::vector<double> fnorm_by_p_trial;  // [trial * ps + ip]
        fields.reserve(trials.size());
        for (const auto& c : trials) fields.push_back(hermite_synthesize(c, radial, sphere));
        for (double delta : deltas) {
            std::vector<PolarField> tf;
            tf.reserve(trials.size());
            for (const auto& c : trials)
                tf.push_back(hermite_synthesize(bochner_riesz_spectral(R, delta, c), radial,
                                                sphere));
            for (double p : ps) {
                RieszScanRow row;
                row.n = n;
                row.delta = delta;
                row.p = p;
                row.R = R;
                for (std::size_t i = 0; i < trials.size(); ++i) {
                    const double denom = mixed_norm(fields[i], p);
                    if (denom <= 0.0) continue;
                    const double ratio = mixed_norm(tf[i], p) / denom;
                    if (ratio > row.norm_lower_bound) {
                        row.norm_lower_bound = ratio;
                        row.trial_id = names[i];
                    }
                }
                result.rows.push_back(row);
            }
        }
    }
    return result;
}

MultiplierRunResult run_multiplier(const MultiplierSpec& spec, const std::vector<double>& ps,
                                   int k_scan, int j_max, const RunConfig& cfg) {
    MultiplierRunResult result;
    const int n = (cfg.n > 0) ? cfg.n : 2;
    result.condition = check_multiplier_condition(spec, n, k_scan, j_max);
    const int short_scan = std::max(32, k_scan / 100);
    result.constants_short_scan =
        check_multiplier_condition(spec, n, short_scan, j_max).constants;
    // C_j is read off finite differences of phi values held in doubles, so
    // at large k the j-th difference bottoms out at ~2^j eps |phi|; the sup
    // cannot be measured below that times (2k+n)^j.
    result.noise_floor.assign(j_max + 1, 0.0);
    double scale = 0.0;
    for (int k = 0; k <= 8; ++k) scale = std::max(scale, std::abs(spec.phi(2.0 * k + n)));
    for (int j = 0; j <= j_max; ++j)
        result.noise_floor[j] = std::pow(2.0, j + 2) * 2.3e-16 * scale *
                                std::pow(2.0 * k_scan + n, j);
    result.condition_stable = true;
    for (int j = 0; j <= j_max; ++j) {
        const double full = result.condition.constants[j];
        const double part = result.constants_short_scan[j];
        if (full > 1.05 * part + 1e-12 && full > result.noise_floor[j])
            result.condition_stable = false;
    }
    const int level_max = 24;
    const auto radial = std::make_shared<QuadratureRule>(
        radial_rule(cfg.radial_nodes, n - 1.0, cfg.r_max));
    const auto sphere =
        std::make_shared<SphereRule>(sphere_rule(n, default_sphere_order(0, level_max)));
    const std::vector<double> centers = {0.0, 1.0, 2.0};
    const auto trials = make_probe_trials(n, level_max, radial, sphere, cfg.seed, centers);
    const auto names = probe_trial_names(level_max, centers);
    for (double p : ps) {
        const NormProbeResult probe =
            operator_norm_probe_multiplier(spec, p, trials, radial, sphere);
        MultiplierProbeRow row;
        row.p = p;
        row.max_ratio = probe.max_ratio;
        row.trial_id = probe.argmax_trial >= 0 ? names[probe.argmax_trial] : "";
        result.probes.push_back(row);
    }
    return result;
}

GfunRunResult run_gfun(int k, const std::vector<double>& ps, const RunConfig& cfg) {
    if (k < 1) throw std::invalid_argument("run_gfun: k must be >= 1");
    GfunRunResult result;
    result.k = k;
    result.l2_ratio_reference =
        std::pow(2.0, -k) * std::sqrt(std::exp(std::lgamma(2.0 * k)));
    const int n = (cfg.n > 0) ? cfg.n : 2;
    const int level_max = 16;
    const auto radial = std::make_shared<QuadratureRule>(radial_rule(160, n - 1.0, 12.0));
    const auto sphere = std::make_shared<SphereRule>(sphere_rule(n, 2 * level_max));
    const auto trials =
        make_probe_trials(n, level_max, radial, sphere, cfg.seed + 29, {0.0, 1.5}, 10);
    PolarField grid;
    grid.n = n;
    grid.radial = radial;
    grid.sphere = sphere;
    grid.values.assign(static_cast<std::size_t>(radial->nodes.size()) * sphere->size(), 0.0);
    const auto pts = field_points(grid);
    const QuadratureRule temporal = temporal_rule(96, k, 40.0 / n);
    std::vector<GfunBracket> brackets(ps.size());
    for (std::size_t ip = 0; ip < ps.size(); ++ip) {
        brackets[ip].p = ps[ip];
        brackets[ip].lo = 1e300;
        brackets[ip].hi = 0.0;
    }
    int idx = 0;
    for (const auto& c : trials) {
        const auto g = g_function_spectral(c, k, pts);
        PolarField gf = grid;
        gf.values = g.values;
        const PolarField f = hermite_synthesize(c, radial, sphere);
        const double l2f = f.l2_norm();
        if (l2f <= 0.0) continue;
        const double ratio2 = gf.l2_norm() / l2f;
        result.l2_ratio_max_err = std::max(
            result.l2_ratio_max_err, std::abs(ratio2 / result.l2_ratio_reference - 1.0));
        if (idx < 3) {
            const auto gt = g_function_temporal(c, k, pts, temporal);
            double scale = 0.0, diff = 0.0;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                scale = std::max(scale, std::abs(g.values[i]));
                diff = std::max(diff, std::abs(g.values[i] - gt.values[i]));
            }
            result.methods_max_rel_err = std::max(result.methods_max_rel_err, diff / scale);
        }
        for (std::size_t ip = 0; ip < ps.size(); ++ip) {
            const double denom = mixed_norm(f, ps[ip]);
            if (denom <= 0.0) continue;
            const double r = mixed_norm(gf, ps[ip]) / denom;
            brackets[ip].lo = std::min(brackets[ip].lo, r);
            brackets[ip].hi = std::max(brackets[ip].hi, r);
        }
        ++idx;
    }
    result.brackets = std::move(brackets);
    return result;
}

MaxDominationResult maximal_domination_battery(int n, int k, int m_max, std::uint64_t seed) {
    MaxDominationResult result;
    const auto radial = std::make_shared<QuadratureRule>(radial_rule(80, n - 1.0, 12.0));
    const QuadratureRule temporal = temporal_rule(56, 1, 40.0 / n);
    const double alpha_meas = 0.5 * n - 1.0;
    // h battery (nonnegative)
    std::vector<std::function<double(double)>> hs = {
        [](double r) { return (r >= 1.0 && r <= 2.0) ? 1.0 : 0.0; },
        [](double r) { return std::exp(-r); },
        [](double r) { return 1.0 / ((1.0 + r) * (1.0 + r) * (1.0 + r)); },
        [](double r) { return std::exp(-2.0 * (r - 2.0) * (r - 2.0)); },
    };
    (void)seed;
    result.global_constant = 0.0;
    for (int m = 0; m <= m_max; ++m) {
        double cm = 0.0;
        for (const auto& fc : std::vector<std::pair<double, double>>{
                 {1.5, 0.5}, {2.5, 0.8}, {0.8, 0.4}}) {
            RadialProfile f;
            f.rule = radial;
            f.measure_exponent = n - 1.0;
            f.values.resize(radial->nodes.size());
            for (std::size_t i = 0; i < f.values.size(); ++i) {
                const double r = radial->nodes[i];
                f.values[i] = std::pow(r, m) *
                              std::exp(-0.5 * (r - fc.first) * (r - fc.first) /
                                       (fc.second * fc.second));
            }
            const RadialProfile gstar = g_star_component(f, n, m, k, temporal);
            const RadialProfile g = g_component(f, n, m, k);
            for (const auto& h : hs) {
                RadialProfile hp = make_profile(radial, n - 1.0, h);
                const RadialProfile mh = maximal_fn(hp, alpha_meas);
                double lhs = 0.0, rhs = 0.0;
                for (std::size_t i = 0; i < radial->nodes.size(); ++i) {
                    lhs += radial->weights[i] * gstar.values[i] * gstar.values[i] *
                           hp.values[i];
                    rhs += radial->weights[i] * g.values[i] * g.values[i] * mh.values[i];
                }
                if (rhs > 0.0) cm = std::max(cm, lhs / rhs);
            }
        }
        result.m_list.push_back(m);
        result.per_m_constant.push_back(cm);
        result.global_constant = std::max(result.global_constant, cm);
    }
    return result;
}

}  // namespace mixnorm
