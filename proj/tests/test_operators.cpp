#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "mixnorm/analysis.hpp"
#include "mixnorm/operators.hpp"
#include "mixnorm/rng.hpp"
#include "mixnorm/specfun.hpp"

using namespace mixnorm;

namespace {

struct Workspace {
    int n;
    RadialRulePtr radial;
    SphereRulePtr sphere;
    BasisPtr basis;
};

Workspace make_workspace(int n, int level_max, int m_max) {
    Workspace ws;
    ws.n = n;
    ws.radial = std::make_shared<QuadratureRule>(radial_rule(160, n - 1.0, 14.0));
    ws.sphere = std::make_shared<SphereRule>(
        sphere_rule(n, 2 * std::max(level_max, m_max)));
    ws.basis = build_basis(n, m_max, ws.sphere);
    return ws;
}

PolarField eigenfield(const Workspace& ws, const std::array<int, 3>& alpha) {
    return make_field(ws.n, ws.radial, ws.sphere, [&](const std::array<double, 3>& x) {
        return hermite_eigenfunction(ws.n, alpha, x);
    });
}

}  // namespace

TEST_CASE("hermite analysis identifies eigenfunctions") {
    const Workspace ws = make_workspace(2, 8, 8);
    const PolarField f = eigenfield(ws, {2, 1, 0});
    const HermiteCoefficients c = hermite_analyze(f, 8);
    double off = 0.0;
    for (int k = 0; k <= 8; ++k) {
        const auto idx = hermite_level_indices(2, k);
        for (std::size_t a = 0; a < idx.size(); ++a) {
            const bool hit = (k == 3 && idx[a][0] == 2 && idx[a][1] == 1);
            if (hit)
                CHECK(c.levels[k][a] == doctest::Approx(1.0).epsilon(1e-10));
            else
                off = std::max(off, std::abs(c.levels[k][a]));
        }
    }
    CHECK(off < 1e-10);
    CHECK(c.truncation_mass < 1e-10);
}

TEST_CASE("gaussian is the pure ground state") {
    const Workspace ws = make_workspace(2, 6, 6);
    const PolarField f = make_field(2, ws.radial, ws.sphere, [](const std::array<double, 3>& x) {
        return std::exp(-0.5 * (x[0] * x[0] + x[1] * x[1]));
    });
    const HermiteCoefficients c = hermite_analyze(f, 6);
    CHECK(c.levels[0][0] == doctest::Approx(std::sqrt(3.141592653589793)).epsilon(1e-12));
    for (int k = 1; k <= 6; ++k)
        for (double v : c.levels[k]) CHECK(std::abs(v) < 1e-10);
}

TEST_CASE("plancherel and truncation reporting") {
    const Workspace ws = make_workspace(2, 8, 8);
    PolarField f = eigenfield(ws, {1, 0, 0});
    const PolarField g = eigenfield(ws, {3, 2, 0});
    for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] += 2.0 * g.values[i];
    const HermiteCoefficients c = hermite_analyze(f, 8);
    double sum = 0.0;
    for (const auto& lvl : c.levels)
        for (double v : lvl) sum += v * v;
    CHECK(sum == doctest::Approx(5.0).epsilon(1e-9));
    // analysis with too small a window must refuse
    CHECK_THROWS_AS(hermite_analyze(f, 2), std::runtime_error);
}

TEST_CASE("multiplier application") {
    const Workspace ws = make_workspace(2, 6, 6);
    PolarField f = eigenfield(ws, {1, 1, 0});
    const HermiteCoefficients c = hermite_analyze(f, 6);
    // identity
    const HermiteCoefficients id = apply_multiplier([](double) { return 1.0; }, c);
    for (int k = 0; k <= 6; ++k)
        for (std::size_t a = 0; a < c.levels[k].size(); ++a)
            CHECK(id.levels[k][a] == c.levels[k][a]);
    // unimodular multiplier preserves the Plancherel norm
    const auto re = apply_multiplier(
        [](double lam) { return std::cos(std::log(lam)); }, c);
    const auto im = apply_multiplier(
        [](double lam) { return std::sin(std::log(lam)); }, c);
    double norm2 = 0.0;
    for (int k = 0; k <= 6; ++k)
        for (std::size_t a = 0; a < c.levels[k].size(); ++a)
            norm2 += re.levels[k][a] * re.levels[k][a] + im.levels[k][a] * im.levels[k][a];
    CHECK(std::sqrt(norm2) == doctest::Approx(c.plancherel_norm()).epsilon(1e-12));
}

TEST_CASE("hermite semigroup paths agree") {
    const Workspace ws = make_workspace(2, 10, 10);
    Rng rng(5);
    HermiteCoefficients c;
    c.n = 2;
    c.level_max = 10;
    c.levels.resize(11);
    for (int k = 0; k <= 10; ++k) {
        c.levels[k].resize(hermite_level_dim(2, k));
        for (double& v : c.levels[k]) v = rng.normal();
    }
    const PolarField f = hermite_synthesize(c, ws.radial, ws.sphere);
    const double t = 0.5;
    const HermiteCoefficients tc = hermite_semigroup_spectral(t, c);
    std::vector<std::array<double, 3>> pts;
    for (int i = 20; i < 160; i += 30)
        for (int q = 0; q < ws.sphere->size(); q += 9) pts.push_back(f.point(i, q));
    const auto spectral = hermite_synthesize_at(tc, pts);
    const auto kernel = hermite_semigroup_kernel_at(t, f, pts);
    double scale = 0.0, diff = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        scale = std::max(scale, std::abs(spectral[i]));
        diff = std::max(diff, std::abs(spectral[i] - kernel[i]));
    }
    CHECK(diff / scale < 1e-8);

    // mass decay: quadrature norm of e^{-tH} f equals the spectral norm
    const PolarField tf = hermite_synthesize(tc, ws.radial, ws.sphere);
    CHECK(tf.l2_norm() == doctest::Approx(tc.plancherel_norm()).epsilon(1e-8));

    // semigroup law on coefficients is exact composition
    const HermiteCoefficients two = hermite_semigroup_spectral(0.3, hermite_semigroup_spectral(0.2, c));
    const HermiteCoefficients once = hermite_semigroup_spectral(0.5, c);
    for (int k = 0; k <= 10; ++k)
        for (std::size_t a = 0; a < c.levels[k].size(); ++a)
            CHECK(two.levels[k][a] == doctest::Approx(once.levels[k][a]).epsilon(1e-14));
}

TEST_CASE("eigenfunction fidelity of the kernel path") {
    // sphere order must cover the kernel's angular bandwidth rs csch(2t)
    for (int n : {2, 3}) {
        const Workspace ws = make_workspace(n, 24, 4);
        const std::array<int, 3> alpha = (n == 2) ? std::array<int, 3>{1, 1, 0}
                                                  : std::array<int, 3>{1, 0, 1};
        const PolarField f = eigenfield(ws, alpha);
        const double t = 0.4;
        std::vector<std::array<double, 3>> pts;
        for (int i = 15; i < 90; i += 20) pts.push_back(f.point(i, 3));
        const auto out = hermite_semigroup_kernel_at(t, f, pts);
        const double lam = 2.0 * 2 + n;  // |alpha| = 2
        double worst = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double expect =
                std::exp(-lam * t) * hermite_eigenfunction(n, alpha, pts[i]);
            scale = std::max(scale, std::abs(expect));
            worst = std::max(worst, std::abs(out[i] - expect));
        }
        CHECK(worst / scale < 1e-9);
    }
}

TEST_CASE("laguerre semigroup eigenfunctions and positivity") {
    for (double alpha : {0.5, 1.0, 2.5}) {
        const auto rule =
            std::make_shared<QuadratureRule>(radial_rule(220, 2.0 * alpha + 1.0, 14.0));
        for (int k : {0, 2}) {
            RadialProfile psi = make_profile(rule, 2.0 * alpha + 1.0, [&](double r) {
                return laguerre_psi(k, alpha, r);
            });
            const double t = 0.35;
            const RadialProfile out = laguerre_semigroup(t, alpha, psi);
            const double lam = 4.0 * k + 2.0 * alpha + 2.0;
            double worst = 0.0;
            for (std::size_t i = 0; i < out.values.size(); ++i)
                worst = std::max(worst, std::abs(out.values[i] -
                                                 std::exp(-lam * t) * psi.values[i]));
            CHECK(worst < 1e-9);
        }
        RadialProfile pos = make_profile(rule, 2.0 * alpha + 1.0, [](double r) {
            return std::exp(-(r - 2.0) * (r - 2.0));
        });
        const RadialProfile out = laguerre_semigroup(0.2, alpha, pos);
        for (double v : out.values) CHECK(v >= 0.0);
    }
    const auto wrong = std::make_shared<QuadratureRule>(radial_rule(50, 1.0, 10.0));
    RadialProfile bad = make_profile(wrong, 1.0, [](double r) { return r; });
    CHECK_THROWS_AS(laguerre_semigroup(0.2, 1.0, bad), std::invalid_argument);
}

TEST_CASE("laguerre expansion round trip") {
    const double alpha = 1.0;
    const auto rule =
        std::make_shared<QuadratureRule>(radial_rule(220, 2.0 * alpha + 1.0, 14.0));
    RadialProfile g = make_profile(rule, 2.0 * alpha + 1.0, [](double r) {
        return (1.0 + r * r) * std::exp(-0.7 * r * r);
    });
    const auto coeffs = laguerre_expand(g, alpha, 48);
    const RadialProfile back = laguerre_synthesize(coeffs, alpha, rule);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.values.size(); ++i)
        worst = std::max(worst, std::abs(g.values[i] - back.values[i]));
    CHECK(worst < 1e-9);
}

TEST_CASE("component operator routes agree") {
    for (int n : {2, 3}) {
        const auto radial = std::make_shared<QuadratureRule>(radial_rule(200, n - 1.0, 14.0));
        const QuadratureRule jac = gauss_jacobi(160, n);
        const double t = 0.5;
        const KernelK0 k0 = heat_kernel_k0(n, t);
        for (int m : {0, 1, 3, 6}) {
            RadialProfile g = make_profile(radial, n - 1.0, [m](double r) {
                return std::pow(r, m) * std::exp(-0.6 * r * r) * (1.0 + 0.3 * r * r);
            });
            const auto table =
                build_component_table(k0, m, n, radial->nodes, radial->nodes, jac);
            const RadialProfile via_table = component_operator(table, g);
            const RadialProfile via_laguerre = component_operator_laguerre(t, n, m, g);
            double scale = 0.0, diff = 0.0;
            for (std::size_t i = 0; i < g.values.size(); ++i) {
                scale = std::max(scale, std::abs(via_laguerre.values[i]));
                diff = std::max(diff, std::abs(via_table.values[i] - via_laguerre.values[i]));
            }
            CHECK(diff / scale < 1e-7);
            if (m == 0) {
                // T_0 is the Laguerre semigroup of type n/2-1
                const double alpha = 0.5 * n - 1.0;
                RadialProfile gmu = g;
                gmu.rule = std::make_shared<QuadratureRule>(
                    radial_rule_like(*radial, n - 1.0, 2.0 * alpha + 1.0));
                gmu.measure_exponent = 2.0 * alpha + 1.0;
                const RadialProfile sem = laguerre_semigroup(t, alpha, gmu);
                double d2 = 0.0;
                for (std::size_t i = 0; i < g.values.size(); ++i)
                    d2 = std::max(d2, std::abs(via_table.values[i] - sem.values[i]));
                CHECK(d2 / scale < 1e-8);
            }
        }
    }
}

TEST_CASE("multiplier condition checks") {
    MultiplierSpec one;
    one.name = "unit";
    one.phi = [](double) { return std::complex<double>(1.0, 0.0); };
    const auto rep = check_multiplier_condition(one, 2, 200, 3);
    CHECK(rep.constants[0] == doctest::Approx(1.0));
    for (int j = 1; j <= 3; ++j) CHECK(rep.constants[j] == 0.0);

    const auto imag = multiplier_imaginary_power(1.0);
    const auto rep2 = check_multiplier_condition(imag, 2, 2000, 4);
    for (double c : rep2.constants) CHECK(std::isfinite(c));
    CHECK(rep2.constants[0] == doctest::Approx(1.0).epsilon(1e-12));

    MultiplierSpec osc;
    osc.name = "alternating";
    osc.phi = [](double lam) {
        const int k = static_cast<int>(std::llround(0.5 * (lam - 2.0)));
        return std::complex<double>(k % 2 == 0 ? 1.0 : -1.0, 0.0);
    };
    const auto rep3 = check_multiplier_condition(osc, 2, 500, 2, {1.5, 4.0, 32.0});
    CHECK(rep3.constants[1] > 100.0);  // grows like 2 (2k+n)
    CHECK_FALSE(rep3.within_bounds[1]);
    CHECK_FALSE(rep3.all_within);
}

TEST_CASE("bochner-riesz spectral multiplier") {
    const Workspace ws = make_workspace(2, 6, 6);
    const PolarField f = eigenfield(ws, {0, 0, 0});
    const HermiteCoefficients c = hermite_analyze(f, 6);
    const HermiteCoefficients out = bochner_riesz_spectral(6.0, 1.0, c);
    CHECK(out.levels[0][0] == doctest::Approx((2.0 / 3.0) * c.levels[0][0]).epsilon(1e-12));
    const HermiteCoefficients zero = bochner_riesz_spectral(2.0, 1.0, c);
    CHECK(zero.plancherel_norm() == 0.0);
}

TEST_CASE("apply_via_components on radial input uses only the m = 0 channel") {
    const int n = 2;
    const auto radial = std::make_shared<QuadratureRule>(radial_rule(120, n - 1.0, 12.0));
    const auto sphere = std::make_shared<SphereRule>(sphere_rule(n, 16));
    const auto basis = build_basis(n, 8, sphere);
    const QuadratureRule jac = gauss_jacobi(96, n);
    const PolarField f = make_field(n, radial, sphere, [](const std::array<double, 3>& x) {
        const double r2 = x[0] * x[0] + x[1] * x[1];
        return std::exp(-0.8 * r2);
    });
    const KernelK0 k0 = heat_kernel_k0(n, 0.4);
    double trunc = -1.0;
    const PolarField tf = apply_via_components(k0, f, basis, jac, &trunc);
    CHECK(trunc < 1e-20);
    // output stays radial: shells have no angular variation
    for (int i : {10, 40, 80}) {
        double lo = 1e300, hi = -1e300;
        for (int q = 0; q < sphere->size(); ++q) {
            lo = std::min(lo, tf.at(i, q));
            hi = std::max(hi, tf.at(i, q));
        }
        CHECK(hi - lo < 1e-12 * std::max(1.0, std::abs(hi)));
    }
    // and matches the type n/2-1 Laguerre semigroup of the radial profile
    const double alpha = 0.5 * n - 1.0;
    RadialProfile g = make_profile(
        std::make_shared<QuadratureRule>(radial_rule_like(*radial, n - 1.0, 2.0 * alpha + 1.0)),
        2.0 * alpha + 1.0, [](double r) { return std::exp(-0.8 * r * r); });
    const RadialProfile sem = laguerre_semigroup(0.4, alpha, g);
    double worst = 0.0;
    for (int i = 0; i < 120; ++i)
        worst = std::max(worst, std::abs(tf.at(i, 0) - sem.values[i]));
    CHECK(worst < 1e-8);
}

TEST_CASE("apply_via_components reproduces eigenvalues end to end") {
    const int n = 2;
    const auto radial = std::make_shared<QuadratureRule>(radial_rule(160, n - 1.0, 14.0));
    const auto sphere = std::make_shared<SphereRule>(sphere_rule(n, 24));
    const auto basis = build_basis(n, 8, sphere);
    const QuadratureRule jac = gauss_jacobi(128, n);
    const std::array<int, 3> alpha{2, 1, 0};
    const PolarField f = make_field(n, radial, sphere, [&](const std::array<double, 3>& x) {
        return hermite_eigenfunction(n, alpha, x);
    });
    const double t = 0.5;
    const PolarField tf = apply_via_components(heat_kernel_k0(n, t), f, basis, jac);
    const double factor = std::exp(-(2.0 * 3 + n) * t);
    double scale = 0.0, diff = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        scale = std::max(scale, std::abs(f.values[i]));
        diff = std::max(diff, std::abs(tf.values[i] - factor * f.values[i]));
    }
    CHECK(diff / scale < 1e-8);
}

TEST_CASE("truncation reporting in the component pipeline") {
    const int n = 2;
    const auto radial = std::make_shared<QuadratureRule>(radial_rule(80, n - 1.0, 12.0));
    const auto sphere = std::make_shared<SphereRule>(sphere_rule(n, 24));
    const auto basis = build_basis(n, 2, sphere);  // M_max below the field's degree
    const QuadratureRule jac = gauss_jacobi(64, n);
    const PolarField f = make_field(n, radial, sphere, [](const std::array<double, 3>& x) {
        const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
        const double th = std::atan2(x[1], x[0]);
        return std::exp(-0.5 * r * r) * (1.0 + std::cos(5.0 * th));
    });
    double trunc = 0.0;
    apply_via_components(heat_kernel_k0(n, 0.5), f, basis, jac, &trunc);
    CHECK(trunc > 0.1);
}
