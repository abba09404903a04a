#include "doctest.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mixnorm/harmonics.hpp"
#include "mixnorm/kernels.hpp"
#include "mixnorm/quadrature.hpp"
#include "mixnorm/rng.hpp"
#include "mixnorm/specfun.hpp"

using namespace mixnorm;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("mehler kernel forms, positivity and argument checks") {
    Rng rng(2);
    for (int n : {2, 3})
        for (int trial = 0; trial < 50; ++trial) {
            const double t = rng.uniform(0.05, 3.0);
            std::array<double, 3> x{0, 0, 0}, y{0, 0, 0};
            for (int c = 0; c < n; ++c) {
                x[c] = rng.uniform(-4, 4);
                y[c] = rng.uniform(-4, 4);
            }
            const double a = mehler_kernel(n, t, x, y, MehlerForm::Direct);
            const double b = mehler_kernel(n, t, x, y, MehlerForm::Factorized);
            CHECK(a > 0.0);
            CHECK(std::abs(a - b) < 1e-12 * a);
        }
    CHECK_THROWS_AS(mehler_kernel(2, 0.0, {0, 0, 0}, {0, 0, 0}, MehlerForm::Direct),
                    std::invalid_argument);
}

TEST_CASE("mehler kernel spectral sum at low levels") {
    // K_t(x,y) = sum_k e^{-(2k+n)t} Phi_k(x,y), checked against the closed form
    const double t = 0.55;
    const std::array<double, 3> x{0.8, -0.3, 0}, y{-0.2, 0.9, 0};
    double sum = 0.0;
    for (int k = 0; k <= 60; ++k)
        sum += std::exp(-(2.0 * k + 2.0) * t) *
               projection_kernel(2, k, x, y, ProjectionMethod::Direct);
    CHECK(sum == doctest::Approx(mehler_kernel(2, t, x, y, MehlerForm::Direct))
                     .epsilon(1e-12));
}

TEST_CASE("laguerre kernel closed form") {
    // eigenrelation: int K_t^a(r,s) psi_0(s) dmu(s) = e^{-(2a+2)t} psi_0(r)
    for (double alpha : {0.5, 1.0}) {
        const QuadratureRule mu = radial_rule(240, 2.0 * alpha + 1.0, 14.0);
        const double t = 0.4;
        for (double r : {0.5, 1.5, 3.0}) {
            double acc = 0.0;
            for (int i = 0; i < mu.order(); ++i)
                acc += mu.weights[i] * laguerre_kernel(t, alpha, r, mu.nodes[i]) *
                       laguerre_psi(0, alpha, mu.nodes[i]);
            const double expect =
                std::exp(-(2.0 * alpha + 2.0) * t) * laguerre_psi(0, alpha, r);
            CHECK(std::abs(acc - expect) < 1e-9 * std::abs(expect));
        }
    }
    // removable singularity at rs = 0
    const double t = 0.3, alpha = 0.8, s = 1.2;
    const double sigma = 1.0 / std::sinh(2.0 * t);
    const double c = 1.0 / std::tanh(2.0 * t);
    const double limit = (1.0 / std::sinh(2.0 * t)) *
                         std::exp(-0.5 * c * s * s) * std::pow(0.5 * sigma, alpha) /
                         std::exp(std::lgamma(alpha + 1.0));
    CHECK(laguerre_kernel(t, alpha, 0.0, s) == doctest::Approx(limit).epsilon(1e-12));
    CHECK(laguerre_kernel(t, alpha, 1e-13, s) == doctest::Approx(limit).epsilon(1e-9));
    // symmetry and positivity
    CHECK(laguerre_kernel(0.7, 1.5, 2.0, 3.0) ==
          doctest::Approx(laguerre_kernel(0.7, 1.5, 3.0, 2.0)).epsilon(1e-13));
    CHECK(laguerre_kernel(0.7, 1.5, 2.0, 3.0) > 0.0);
    CHECK_THROWS_AS(laguerre_kernel(-0.1, 0.5, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(laguerre_kernel(0.1, -1.5, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("laguerre kernel time derivatives") {
    const double h = 1e-5;
    for (double alpha : {0.0, 0.5, 1.5})
        for (double t : {0.15, 0.6, 1.5})
            for (double r : {0.4, 2.0})
                for (double s : {0.9, 3.1}) {
                    const double fd = (laguerre_kernel(t + h, alpha, r, s) -
                                       laguerre_kernel(t - h, alpha, r, s)) /
                                      (2.0 * h);
                    const double an = laguerre_kernel_dt(1, t, alpha, r, s);
                    CHECK(std::abs(fd - an) < 1e-6 * std::max(1.0, std::abs(an)));
                    const double fd2 = (laguerre_kernel_dt(1, t + h, alpha, r, s) -
                                        laguerre_kernel_dt(1, t - h, alpha, r, s)) /
                                       (2.0 * h);
                    const double an2 = laguerre_kernel_dt(2, t, alpha, r, s);
                    CHECK(std::abs(fd2 - an2) < 1e-5 * std::max(1.0, std::abs(an2)));
                }
    // order zero is the kernel itself
    CHECK(laguerre_kernel_dt(0, 0.35, 0.5, 1.0, 2.0) ==
          doctest::Approx(laguerre_kernel(0.35, 0.5, 1.0, 2.0)).epsilon(1e-13));
}

TEST_CASE("mehler kernel time derivative") {
    const double h = 1e-5;
    for (double t : {0.2, 0.8})
        for (double u : {0.5, 2.0})
            for (double v : {1.0, 3.0}) {
                const double fd =
                    (mehler_kernel_k0(2, t + h, u, v) - mehler_kernel_k0(2, t - h, u, v)) /
                    (2.0 * h);
                const double an = mehler_kernel_dt(1, 2, t, u, v);
                CHECK(std::abs(fd - an) < 1e-6 * std::max(1e-6, std::abs(an)));
            }
    CHECK(mehler_kernel_dt(0, 3, 0.4, 1.0, 2.0) ==
          doctest::Approx(mehler_kernel_k0(3, 0.4, 1.0, 2.0)).epsilon(1e-13));
}

TEST_CASE("projection kernels") {
    // k = 0 closed form; unused coordinates zeroed per dimension
    for (int n : {1, 2, 3}) {
        std::array<double, 3> x{0.3, -0.7, 0.2}, y{1.1, 0.4, -0.5};
        for (int c = n; c < 3; ++c) x[c] = y[c] = 0.0;
        double nx = 0.0, ny = 0.0;
        for (int c = 0; c < n; ++c) {
            nx += x[c] * x[c];
            ny += y[c] * y[c];
        }
        const double expect = std::pow(kPi, -0.5 * n) * std::exp(-0.5 * (nx + ny));
        CHECK(projection_kernel(n, 0, x, y, ProjectionMethod::Direct) ==
              doctest::Approx(expect).epsilon(1e-13));
        CHECK(projection_kernel(n, 0, x, y, ProjectionMethod::Contour) ==
              doctest::Approx(expect).epsilon(1e-11));
    }
    CHECK_THROWS_AS(
        projection_kernel(2, 1, {0, 0, 0}, {0, 0, 0}, ProjectionMethod::Contour, 1.5),
        std::invalid_argument);
}

TEST_CASE("projection kernels depend only on chord and anti-chord") {
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const std::array<double, 3> x{rng.uniform(-2, 2), rng.uniform(-2, 2), 0};
        const std::array<double, 3> y{rng.uniform(-2, 2), rng.uniform(-2, 2), 0};
        const double th = rng.uniform(0, 2 * kPi);
        const std::array<double, 3> rx{std::cos(th) * x[0] - std::sin(th) * x[1],
                                       std::sin(th) * x[0] + std::cos(th) * x[1], 0};
        const std::array<double, 3> ry{std::cos(th) * y[0] - std::sin(th) * y[1],
                                       std::sin(th) * y[0] + std::cos(th) * y[1], 0};
        for (int k : {1, 3, 6}) {
            const double a = projection_kernel(2, k, x, y, ProjectionMethod::Direct);
            const double b = projection_kernel(2, k, rx, ry, ProjectionMethod::Direct);
            CHECK(std::abs(a - b) < 1e-11 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("bochner-riesz kernel level structure") {
    const std::array<double, 3> x{0.4, 0.9, 0}, y{-0.6, 0.1, 0};
    // below the bottom eigenvalue everything vanishes
    CHECK(bochner_riesz_kernel(2, 2.0, 1.0, x, y, ProjectionMethod::Direct) == 0.0);
    CHECK(bochner_riesz_kernel(2, 1.0, 0.0, x, y, ProjectionMethod::Direct) == 0.0);
    // R = 4, n = 2: only level zero survives
    const double phi0 = projection_kernel(2, 0, x, y, ProjectionMethod::Direct);
    CHECK(bochner_riesz_kernel(2, 4.0, 1.0, x, y, ProjectionMethod::Direct) ==
          doctest::Approx(0.5 * phi0).epsilon(1e-13));
    CHECK(bochner_riesz_kernel(2, 4.0, 0.0, x, y, ProjectionMethod::Direct) ==
          doctest::Approx(phi0).epsilon(1e-13));
    // contour and direct paths agree
    CHECK(bochner_riesz_kernel(2, 12.0, 1.0, x, y, ProjectionMethod::Contour) ==
          doctest::Approx(bochner_riesz_kernel(2, 12.0, 1.0, x, y, ProjectionMethod::Direct))
              .epsilon(1e-10));
}

TEST_CASE("component kernel reductions") {
    // m = 0 with K0 = 1 gives the jacobi mass independent of (r,s)
    for (int n : {2, 3}) {
        const QuadratureRule jac = gauss_jacobi(64, n);
        KernelK0 one;
        one.k0 = [](double, double) { return 1.0; };
        const double mass = (n == 2) ? kPi : 2.0;
        CHECK(component_kernel(one, 0, n, 0.7, 1.9, jac) ==
              doctest::Approx(mass).epsilon(1e-13));
    }
    // heat kernel m = 0, n = 3: bare reduction times omega_{n-2} matches the
    // direct sphere integral
    {
        const int n = 3;
        const double t = 0.5, r = 1.3, s = 0.8;
        const QuadratureRule jac = gauss_jacobi(96, n);
        const KernelK0 k0 = heat_kernel_k0(n, t);
        const SphereRule sph = sphere_rule(n, 40);
        const std::array<double, 3> x{0, 0, r};
        double direct = 0.0;
        for (int q = 0; q < sph.size(); ++q) {
            const std::array<double, 3> y{s * sph.nodes[q][0], s * sph.nodes[q][1],
                                          s * sph.nodes[q][2]};
            direct += sph.weights[q] * mehler_kernel(n, t, x, y, MehlerForm::Factorized);
        }
        const double reduced =
            equatorial_sphere_measure(n) * component_kernel(k0, 0, n, r, s, jac);
        CHECK(reduced == doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("hecke-bochner identity at kernel level") {
    // omega_{n-2} * bare reduction of the heat kernel = r^m s^m K_t^{n/2+m-1}.
    // The angular quadrature extracts the degree-m coefficient of e^{zu},
    // z = rs csch 2t, whose relative size is ~(z/2)^m / m!; pairs are chosen
    // so that coefficient stays resolvable in double precision.
    for (int n : {2, 3}) {
        const QuadratureRule jac = gauss_jacobi(160, n);
        const std::vector<std::pair<double, double>> far = {
            {3.0, 4.0}, {2.0, 6.0}, {4.5, 5.5}, {3.5, 4.2}};
        const std::vector<std::pair<double, double>> near0 = {{0.4, 0.7}, {1.0, 1.3}};
        for (double t : {0.2, 0.5, 1.0}) {
            const KernelK0 k0 = heat_kernel_k0(n, t);
            auto rel_err = [&](int m, double r, double s) {
                const double lhs =
                    equatorial_sphere_measure(n) * component_kernel(k0, m, n, r, s, jac);
                const double rhs = std::pow(r, m) * std::pow(s, m) *
                                   laguerre_kernel(t, 0.5 * n + m - 1.0, r, s);
                return std::abs(lhs - rhs) / std::abs(rhs);
            };
            double worst = 0.0;
            for (int m = 0; m <= 8; ++m)
                for (const auto& [r, s] : far) worst = std::max(worst, rel_err(m, r, s));
            for (int m = 0; m <= 3; ++m)
                for (const auto& [r, s] : near0) worst = std::max(worst, rel_err(m, r, s));
            CHECK(worst < 1e-8);
        }
    }
}

TEST_CASE("component kernel dominated by the m = 0 kernel of |K0|") {
    const int n = 3;
    const QuadratureRule jac = gauss_jacobi(96, n);
    const KernelK0 k0 = heat_kernel_k0(n, 0.4);
    for (int m : {1, 3, 7})
        for (double r : {0.5, 1.5, 3.0})
            for (double s : {0.8, 2.4}) {
                const double km = component_kernel(k0, m, n, r, s, jac);
                const double dom = component_kernel(k0, 0, n, r, s, jac);
                CHECK(std::abs(km) <= dom * (1.0 + 1e-12));
            }
}

TEST_CASE("component kernels vanish at high degree for tiny rs") {
    const int n = 2;
    const QuadratureRule jac = gauss_jacobi(64, n);
    const KernelK0 k0 = heat_kernel_k0(n, 0.5);
    const double scale = component_kernel(k0, 0, n, 0.01, 0.01, jac);
    for (int m : {4, 8, 12})
        CHECK(std::abs(component_kernel(k0, m, n, 0.01, 0.01, jac)) < 1e-9 * scale);
}

TEST_CASE("heat component derivative backends agree") {
    // Bessel algebra vs exp-substituted angular quadrature
    for (int n : {2, 3})
        for (int m : {0, 2, 5})
            for (int order : {1, 2})
                for (double t : {2e-3, 2e-2, 0.2})
                    for (double r : {0.8, 2.5})
                        for (double s : {1.1, 3.4}) {
                            const double a = heat_component_kernel_dt(order, n, m, t, r, s);
                            const double b =
                                heat_component_kernel_dt_quadrature(order, n, m, t, r, s);
                            const double scale =
                                std::max({1e-280, std::abs(a), std::abs(b)});
                            CHECK(std::abs(a - b) / scale < 1e-8);
                        }
}

TEST_CASE("component table and csv export") {
    const int n = 2;
    const QuadratureRule jac = gauss_jacobi(48, n);
    const KernelK0 k0 = heat_kernel_k0(n, 0.5);
    const std::vector<double> nodes = {0.5, 1.0, 1.5};
    const auto table = build_component_table(k0, 2, n, nodes, nodes, jac);
    CHECK(table.at(1, 2) ==
          doctest::Approx(equatorial_sphere_measure(n) *
                          component_kernel(k0, 2, n, 1.0, 1.5, jac))
              .epsilon(1e-13));
    // symmetry in (r, s)
    CHECK(table.at(0, 2) == doctest::Approx(table.at(2, 0)).epsilon(1e-12));
    std::ostringstream os;
    export_component_table_csv(table, os);
    const std::string csv = os.str();
    CHECK(csv.substr(0, 13) == "m,r,s,value\r\n");
    CHECK(csv.find("2,0.5,1") != std::string::npos);
}
