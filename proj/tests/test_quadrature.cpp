#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "mixnorm/kernels.hpp"
#include "mixnorm/quadrature.hpp"
#include "mixnorm/specfun.hpp"

using namespace mixnorm;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// int_-1^1 u^{2j} (1-u^2)^{lam-1/2} du = B(j+1/2, lam+1/2)
double even_moment(int j, double lam) {
    return std::exp(std::lgamma(j + 0.5) + std::lgamma(lam + 0.5) -
                    std::lgamma(j + lam + 1.0));
}

void check_rule_shape(const QuadratureRule& rule) {
    for (std::size_t i = 0; i + 1 < rule.nodes.size(); ++i)
        CHECK(rule.nodes[i] < rule.nodes[i + 1]);
    for (double w : rule.weights) CHECK(w > 0.0);
}
}  // namespace

TEST_CASE("gauss-jacobi masses and exactness") {
    CHECK(gauss_jacobi(1, 3).integrate([](double) { return 1.0; }) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(gauss_jacobi(5, 2).integrate([](double) { return 1.0; }) ==
          doctest::Approx(kPi).epsilon(1e-14));
    const QuadratureRule j4 = gauss_jacobi(20, 4);
    CHECK(std::abs(j4.integrate([](double u) { return u * u; }) - kPi / 8.0) < 1e-13);

    for (int n : {2, 3, 4, 5}) {
        const QuadratureRule rule = gauss_jacobi(24, n);
        check_rule_shape(rule);
        const double lam = 0.5 * n - 1.0;
        // degree <= 2N-1 exactness on even monomials
        for (int j : {0, 1, 5, 11, 23}) {
            const double got = rule.integrate([j](double u) { return std::pow(u, 2 * j); });
            CHECK(got == doctest::Approx(even_moment(j, lam)).epsilon(1e-12));
        }
        // odd moments vanish
        CHECK(std::abs(rule.integrate([](double u) { return u * u * u; })) < 1e-14);
    }
}

TEST_CASE("gauss-legendre, laguerre and hermite rules") {
    const QuadratureRule gl = gauss_legendre(16);
    check_rule_shape(gl);
    CHECK(gl.integrate([](double u) { return u * u * u * u; }) ==
          doctest::Approx(0.4).epsilon(1e-13));
    const QuadratureRule lag = gauss_laguerre(24, 0.5);
    check_rule_shape(lag);
    // int v^{0.5+2} e^-v = Gamma(3.5)
    CHECK(lag.integrate([](double v) { return v * v; }) ==
          doctest::Approx(std::exp(std::lgamma(3.5))).epsilon(1e-12));
    const QuadratureRule gh = gauss_hermite(20);
    check_rule_shape(gh);
    CHECK(gh.integrate([](double x) { return x * x; }) ==
          doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-12));
}

TEST_CASE("radial rules") {
    for (int n : {2, 3}) {
        const QuadratureRule rad = radial_rule(n / 2 + 2, n - 1.0, 5.0);
        CHECK(rad.integrate([](double) { return 1.0; }) ==
              doctest::Approx(std::pow(5.0, n) / n).epsilon(1e-14));
    }
    const QuadratureRule rad = radial_rule(200, 1.0, 14.0);
    CHECK(rad.integrate([](double r) { return std::exp(-r * r); }) ==
          doctest::Approx(0.5).epsilon(1e-12));
    const QuadratureRule mu = radial_rule(200, 2.0, 14.0);  // alpha = 1/2
    CHECK(mu.integrate([](double r) {
        const double p = laguerre_psi(0, 0.5, r);
        return p * p;
    }) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(radial_rule(10, 1.0, -2.0), std::invalid_argument);

    const QuadratureRule remeasured = radial_rule_like(rad, 1.0, 2.0);
    CHECK(remeasured.nodes == rad.nodes);
    CHECK(remeasured.integrate([](double r) { return std::exp(-r * r); }) ==
          doctest::Approx(0.25 * std::sqrt(kPi)).epsilon(1e-12));
}

TEST_CASE("temporal rules") {
    const QuadratureRule t1 = temporal_rule(96, 1, 20.0);
    check_rule_shape(t1);
    // int t e^{-2 lam t} dt = Gamma(2)/(2 lam)^2 at lam = 2
    CHECK(t1.integrate([](double t) { return std::exp(-4.0 * t); }) ==
          doctest::Approx(1.0 / 16.0).epsilon(1e-10));
    const QuadratureRule t2 = temporal_rule(96, 2, 20.0);
    CHECK(t2.integrate([](double t) { return std::exp(-4.0 * t); }) ==
          doctest::Approx(6.0 / 256.0).epsilon(1e-10));
    const QuadratureRule tl = log_temporal_rule(200, 1, 1e-8, 25.0);
    check_rule_shape(tl);
    CHECK(tl.integrate([](double t) { return std::exp(-4.0 * t); }) ==
          doctest::Approx(1.0 / 16.0).epsilon(1e-10));
    CHECK_THROWS_AS(temporal_rule(10, 0, 20.0), std::invalid_argument);
}

TEST_CASE("sphere rules") {
    const SphereRule s2 = sphere_rule(2, 24);
    const SphereRule s3 = sphere_rule(3, 24);
    double mass2 = 0.0, mass3 = 0.0;
    for (double w : s2.weights) mass2 += w;
    for (double w : s3.weights) mass3 += w;
    CHECK(mass2 == doctest::Approx(2.0 * kPi).epsilon(1e-13));
    CHECK(mass3 == doctest::Approx(4.0 * kPi).epsilon(1e-13));
    for (const auto& node : s3.nodes) {
        const double len = node[0] * node[0] + node[1] * node[1] + node[2] * node[2];
        CHECK(len == doctest::Approx(1.0).epsilon(1e-13));
    }
    double x2 = 0.0;
    for (int q = 0; q < s3.size(); ++q) x2 += s3.weights[q] * s3.nodes[q][0] * s3.nodes[q][0];
    CHECK(x2 == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-12));
    // zonal mean-value orthogonality: int P_m(w.w') dw = 0 for m >= 1
    for (int n : {2, 3}) {
        const SphereRule rule = sphere_rule(n, 24);
        const std::array<double, 3> wp{0.6, 0.8, 0.0};
        for (int m = 1; m <= 8; ++m) {
            double acc = 0.0;
            for (int q = 0; q < rule.size(); ++q) {
                double dot = 0.0;
                for (int c = 0; c < 3; ++c) dot += wp[c] * rule.nodes[q][c];
                acc += rule.weights[q] * ultraspherical_P(m, n, std::clamp(dot, -1.0, 1.0));
            }
            CHECK(std::abs(acc) < 1e-11);
        }
    }
    CHECK_THROWS_AS(sphere_rule(4, 8), std::invalid_argument);
}

TEST_CASE("jacobi refinement convergence on the heat-kernel angular integrand") {
    // the angular reduction integrand at t = 0.5, r = s = 1
    for (int n : {2, 3}) {
        const KernelK0 k0 = heat_kernel_k0(n, 0.5);
        auto value = [&](int N) {
            return component_kernel(k0, 2, n, 1.0, 1.0, gauss_jacobi(N, n));
        };
        CHECK(std::abs(value(64) - value(128)) < 1e-9 * std::abs(value(128)) + 1e-15);
    }
}
