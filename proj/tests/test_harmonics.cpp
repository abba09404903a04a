#include "doctest.h"

#include <cmath>

#include "mixnorm/harmonics.hpp"
#include "mixnorm/rng.hpp"
#include "mixnorm/specfun.hpp"
#include "mixnorm/verify.hpp"

#include "support/poly.hpp"

using namespace mixnorm;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

std::array<double, 3> random_unit(Rng& rng, int n) {
    std::array<double, 3> v{0, 0, 0};
    double len = 0.0;
    do {
        len = 0.0;
        for (int c = 0; c < n; ++c) {
            v[c] = rng.normal();
            len += v[c] * v[c];
        }
    } while (len < 1e-8);
    len = std::sqrt(len);
    for (int c = 0; c < n; ++c) v[c] /= len;
    return v;
}
}  // namespace

TEST_CASE("basis dimensions and pointwise addition theorem") {
    for (int n : {2, 3}) {
        const auto rule = std::make_shared<SphereRule>(sphere_rule(n, 48));
        const auto basis = build_basis(n, 24, rule);
        CHECK(basis->d(0) == 1);
        CHECK(basis->d(3) == (n == 2 ? 2 : 7));
        Rng rng(11);
        const double omega = sphere_surface_measure(n);
        for (int trial = 0; trial < 20; ++trial) {
            const auto w = random_unit(rng, n);
            double acc = 0.0;
            for (int j = 1; j <= basis->d(1); ++j) {
                const double y = basis->evaluate(1, j, w);
                acc += y * y;
            }
            CHECK(std::abs(acc - basis->d(1) / omega) < 1e-11);
        }
        // full addition theorem at random pairs, m <= 24
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto w1 = random_unit(rng, n);
            const auto w2 = random_unit(rng, n);
            double dot = 0.0;
            for (int c = 0; c < 3; ++c) dot += w1[c] * w2[c];
            dot = std::clamp(dot, -1.0, 1.0);
            for (int m = 0; m <= 24; ++m) {
                double acc = 0.0;
                for (int j = 1; j <= basis->d(m); ++j)
                    acc += basis->evaluate(m, j, w1) * basis->evaluate(m, j, w2);
                const double ref = basis->d(m) / omega * ultraspherical_P(m, n, dot);
                worst = std::max(worst, std::abs(acc - ref));
            }
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("discrete orthonormality of the tabulated basis") {
    for (int n : {2, 3}) {
        const auto rule = std::make_shared<SphereRule>(sphere_rule(n, 20));
        const auto basis = build_basis(n, 10, rule);
        double worst = 0.0;
        for (int m = 0; m <= 10; ++m)
            for (int j = 1; j <= basis->d(m); ++j)
                for (int m2 = m; m2 <= 10; ++m2)
                    for (int j2 = (m2 == m ? j : 1); j2 <= basis->d(m2); ++j2) {
                        double acc = 0.0;
                        for (int q = 0; q < rule->size(); ++q)
                            acc += rule->weights[q] * basis->value(m, j, q) *
                                   basis->value(m2, j2, q);
                        const bool diag = (m == m2 && j == j2);
                        worst = std::max(worst, std::abs(acc - (diag ? 1.0 : 0.0)));
                    }
        CHECK(worst < 1e-10);
    }
    CHECK_THROWS(build_basis(2, 24, std::make_shared<SphereRule>(sphere_rule(2, 10))));
}

TEST_CASE("decompose picks out harmonic profiles") {
    for (int n : {2, 3}) {
        const auto rule = std::make_shared<SphereRule>(sphere_rule(n, 16));
        const auto basis = build_basis(n, 8, rule);
        const auto radial = std::make_shared<QuadratureRule>(radial_rule(60, n - 1.0, 10.0));
        auto g = [](double r) { return r * r * std::exp(-0.7 * r * r); };
        const PolarField f =
            make_field(n, radial, rule, [&](const std::array<double, 3>& x) {
                const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
                if (r < 1e-14) return 0.0;
                const std::array<double, 3> w{x[0] / r, x[1] / r, x[2] / r};
                return g(r) * basis->evaluate(2, 1, w);
            });
        const HarmonicDecomposition dec = decompose(f, basis);
        double off = 0.0, on = 0.0;
        for (int m = 0; m <= 8; ++m)
            for (int j = 1; j <= basis->d(m); ++j)
                for (int i = 0; i < 60; ++i) {
                    const double v = dec.profiles[m][j - 1][i];
                    if (m == 2 && j == 1)
                        on = std::max(on, std::abs(v - g(radial->nodes[i])));
                    else
                        off = std::max(off, std::abs(v));
                }
        CHECK(on < 1e-11);
        CHECK(off < 1e-11);
    }
}

TEST_CASE("radial functions decompose onto the constant harmonic") {
    const int n = 3;
    const auto rule = std::make_shared<SphereRule>(sphere_rule(n, 12));
    const auto basis = build_basis(n, 6, rule);
    const auto radial = std::make_shared<QuadratureRule>(radial_rule(40, n - 1.0, 10.0));
    auto g = [](double r) { return std::exp(-r); };
    const PolarField f = make_field(n, radial, rule, [&](const std::array<double, 3>& x) {
        return g(std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
    });
    const HarmonicDecomposition dec = decompose(f, basis);
    const double omega = sphere_surface_measure(n);
    for (int i = 0; i < 40; ++i)
        CHECK(dec.profiles[0][0][i] ==
              doctest::Approx(std::sqrt(omega) * g(radial->nodes[i])).epsilon(1e-12));
    for (int m = 1; m <= 6; ++m)
        for (int j = 1; j <= basis->d(m); ++j)
            for (int i = 0; i < 40; ++i) CHECK(std::abs(dec.profiles[m][j - 1][i]) < 1e-12);
}

TEST_CASE("round trip and shell parseval on band-limited fields") {
    for (int n : {2, 3}) {
        const auto rule = std::make_shared<SphereRule>(sphere_rule(n, 24));
        const auto basis = build_basis(n, 12, rule);
        const auto radial = std::make_shared<QuadratureRule>(radial_rule(50, n - 1.0, 8.0));
        Rng rng(3);
        // synthesize a random band-limited field
        HarmonicDecomposition dec;
        dec.n = n;
        dec.m_max = 12;
        dec.radial = radial;
        dec.basis = basis;
        dec.profiles.resize(13);
        for (int m = 0; m <= 12; ++m) {
            dec.profiles[m].resize(basis->d(m));
            for (int j = 1; j <= basis->d(m); ++j) {
                dec.profiles[m][j - 1].resize(50);
                const double amp = rng.uniform(0.2, 1.0);
                for (int i = 0; i < 50; ++i) {
                    const double r = radial->nodes[i];
                    dec.profiles[m][j - 1][i] = amp * std::exp(-0.5 * (r - 1.5) * (r - 1.5));
                }
            }
        }
        const PolarField f = resynthesize(dec, basis);
        const HarmonicDecomposition back = decompose(f, basis);
        double worst = 0.0;
        for (int m = 0; m <= 12; ++m)
            for (int j = 1; j <= basis->d(m); ++j)
                for (int i = 0; i < 50; ++i)
                    worst = std::max(worst, std::abs(back.profiles[m][j - 1][i] -
                                                     dec.profiles[m][j - 1][i]));
        CHECK(worst < 1e-11);
        const PolarField f2 = resynthesize(back, basis);
        double field_diff = 0.0;
        for (std::size_t i = 0; i < f.values.size(); ++i)
            field_diff = std::max(field_diff, std::abs(f.values[i] - f2.values[i]));
        CHECK(field_diff < 1e-9);

        // shell parseval
        for (int i : {10, 25, 40}) {
            double lhs = 0.0;
            for (int q = 0; q < rule->size(); ++q)
                lhs += rule->weights[q] * f.at(i, q) * f.at(i, q);
            double rhs = 0.0;
            for (int m = 0; m <= 12; ++m)
                for (int j = 1; j <= basis->d(m); ++j)
                    rhs += dec.profiles[m][j - 1][i] * dec.profiles[m][j - 1][i];
            CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, lhs));
        }
    }
}

TEST_CASE("funk-hecke coefficients") {
    for (int n : {2, 3}) {
        const QuadratureRule jac = gauss_jacobi(64, n);
        const double mass = (n == 2) ? kPi : 2.0;
        CHECK(funk_hecke_coefficient([](double) { return 1.0; }, 0, n, jac) ==
              doctest::Approx(mass).epsilon(1e-13));
        for (int m = 1; m <= 10; ++m)
            CHECK(std::abs(funk_hecke_coefficient([](double) { return 1.0; }, m, n, jac)) <
                  1e-12);
        // orthogonality to lower-degree polynomials
        for (int m = 3; m <= 10; m += 3)
            CHECK(std::abs(funk_hecke_coefficient(
                      [](double t) { return 1.0 + t + t * t; }, m, n, jac)) < 1e-11);
    }
}

TEST_CASE("funk-hecke exponential identity at double precision") {
    // moderate z where the double pipeline is well conditioned; the full
    // (z,m) box is covered by the quad-precision sweep
    for (int n : {2, 3, 4}) {
        const QuadratureRule jac = gauss_jacobi(128, n);
        for (double z : {1.0, 3.0, 10.0, 20.0})
            for (int m = 0; m <= 6; ++m) {
                const double lhs = funk_hecke_coefficient(
                    [z](double t) { return std::exp(z * t); }, m, n, jac);
                const double rhs = std::sqrt(kPi) *
                                   std::exp(std::lgamma(0.5 * (n - 1))) *
                                   std::pow(0.5 * z, 1.0 - 0.5 * n) *
                                   bessel_I(0.5 * n + m - 1.0, z);
                CHECK(std::abs(lhs - rhs) < 1e-8 * std::abs(rhs));
            }
    }
    CHECK(lemma31_max_rel_err(2, 10, {0.1, 1.0, 20.0}) < 1e-8);
}

TEST_CASE("verify_funk_hecke residuals") {
    for (int n : {2, 3}) {
        const auto rule = std::make_shared<SphereRule>(sphere_rule(n, 32));
        const auto basis = build_basis(n, 6, rule);
        const QuadratureRule jac = gauss_jacobi(64, n);
        CHECK(verify_funk_hecke([](double t) { return t; }, basis, jac) < 1e-10);
        CHECK(verify_funk_hecke([](double t) { return std::exp(3.0 * t); }, basis, jac) <
              1e-8);
    }
}

TEST_CASE("rodrigues form of the weighted ultraspherical polynomial") {
    // (1-t^2)^{(n-3)/2} P_m = (-1)^m / (2^m ((n-1)/2)_m) (d/dt)^m (1-t^2)^{(n-3)/2+m}
    // verified through the reduction (d/dt)^m (1-t^2)^{beta+m} = (1-t^2)^beta q_m(t),
    // q_{j+1} = (1-t^2) q_j' - 2 (beta+m-j) t q_j, which keeps everything polynomial.
    using testsupport::Poly;
    for (int n : {3, 4, 5}) {
        const double beta = 0.5 * (n - 3);
        for (int m = 0; m <= 6; ++m) {
            Poly q = {1.0};
            for (int j = 0; j < m; ++j) {
                const double gamma = beta + m - j;
                const Poly dq = testsupport::poly_diff(q);
                // (1-t^2) q'
                const Poly a = testsupport::poly_add(
                    dq, testsupport::poly_scale(
                            testsupport::poly_mul({0.0, 0.0, 1.0}, dq), -1.0));
                // -2 gamma t q
                const Poly b = testsupport::poly_scale(testsupport::poly_shift_mul_x(q),
                                                       -2.0 * gamma);
                q = testsupport::poly_add(a, b);
            }
            const double scale =
                std::pow(-1.0, m) / (std::pow(2.0, m) * pochhammer(0.5 * (n - 1), m));
            double worst = 0.0;
            for (double t = -0.95; t <= 0.96; t += 0.05) {
                const double lhs = ultraspherical_P(m, n, t);
                const double rhs = scale * testsupport::poly_eval(q, t);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
            CHECK(worst < 1e-9);
        }
    }
}
