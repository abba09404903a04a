#include <benchmark/benchmark.h>

#include <array>
#include <cmath>

#include "mixnorm/analysis.hpp"
#include "mixnorm/kernels.hpp"
#include "mixnorm/operators.hpp"
#include "mixnorm/quadrature.hpp"
#include "mixnorm/specfun.hpp"

using namespace mixnorm;

static void BM_HermiteFn(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermite_fn_1d(k, 1.0 + x));
        x += 1e-9;
    }
}
BENCHMARK(BM_HermiteFn)->Arg(16)->Arg(64)->Arg(256);

static void BM_LaguerrePsi(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    double r = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(laguerre_psi(k, 0.5, 1.0 + r));
        r += 1e-9;
    }
}
BENCHMARK(BM_LaguerrePsi)->Arg(16)->Arg(64);

static void BM_BesselI(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0));
    double dz = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_I_scaled(1.5, z + dz));
        dz += 1e-9;
    }
}
BENCHMARK(BM_BesselI)->Arg(5)->Arg(50)->Arg(500);

static void BM_GaussJacobi(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_jacobi(N, 3));
    }
}
BENCHMARK(BM_GaussJacobi)->Arg(64)->Arg(256);

static void BM_LaguerreKernel(benchmark::State& state) {
    double r = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(laguerre_kernel(0.3, 1.5, 1.0 + r, 2.0));
        r += 1e-9;
    }
}
BENCHMARK(BM_LaguerreKernel);

static void BM_ComponentKernelDt(benchmark::State& state) {
    double r = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(heat_component_kernel_dt(1, 2, 6, 1e-3, 2.0 + r, 2.1));
        r += 1e-9;
    }
}
BENCHMARK(BM_ComponentKernelDt);

static void BM_ProjectionContour(benchmark::State& state) {
    const std::array<double, 3> x{0.5, -0.7, 0.0}, y{1.1, 0.2, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            projection_kernel(2, 8, x, y, ProjectionMethod::Contour));
    }
}
BENCHMARK(BM_ProjectionContour);

static void BM_ComponentTables(benchmark::State& state) {
    const int nr = static_cast<int>(state.range(0));
    const QuadratureRule rad = radial_rule(nr, 1.0, 14.0);
    const QuadratureRule jac = gauss_jacobi(96, 2);
    const KernelK0 k0 = heat_kernel_k0(2, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            build_component_tables(k0, 12, 2, rad.nodes, rad.nodes, jac));
    }
}
BENCHMARK(BM_ComponentTables)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_HermiteAnalyze(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    const auto radial = std::make_shared<QuadratureRule>(radial_rule(120, 1.0, 12.0));
    const auto sphere = std::make_shared<SphereRule>(sphere_rule(2, 2 * level));
    const PolarField f = make_field(2, radial, sphere, [](const std::array<double, 3>& p) {
        return std::exp(-0.5 * (p[0] * p[0] + p[1] * p[1])) * (1.0 + p[0] * p[1]);
    });
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermite_analyze(f, level, 1.0));
    }
}
BENCHMARK(BM_HermiteAnalyze)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_MixedNorm(benchmark::State& state) {
    const auto radial = std::make_shared<QuadratureRule>(radial_rule(200, 1.0, 14.0));
    const auto sphere = std::make_shared<SphereRule>(sphere_rule(2, 48));
    const PolarField f = make_field(2, radial, sphere, [](const std::array<double, 3>& p) {
        return std::exp(-0.4 * (p[0] * p[0] + p[1] * p[1]));
    });
    for (auto _ : state) {
        benchmark::DoNotOptimize(mixed_norm(f, 1.5));
    }
}
BENCHMARK(BM_MixedNorm);

BENCHMARK_MAIN();
