#include <benchmark/benchmark.h>

#include <cmath>

#include "lpheat/convolve.hpp"
#include "lpheat/grid.hpp"
#include "lpheat/kernel.hpp"
#include "lpheat/lp_space.hpp"

using namespace lpheat;

namespace {

void BM_ThetaDerivative(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta_deriv(KernelPoint(x, 0.7), n));
        x += 1e-6;
    }
}
BENCHMARK(BM_ThetaDerivative)->Arg(0)->Arg(1)->Arg(4)->Arg(8);

void BM_ConvolvePointStep(benchmark::State& state) {
    const auto f = PrimitiveFunction::indicator(-1.0, 1.0);
    const QuadratureConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(convolve_point(f, 1, 0.5, 0.3, cfg));
}
BENCHMARK(BM_ConvolvePointStep);

void BM_ConvolvePointQuadrature(benchmark::State& state) {
    const auto f = PrimitiveFunction::truncated_sine(1.0);
    const QuadratureConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(convolve_point(f, 0, 0.5, 3.0, cfg));
}
BENCHMARK(BM_ConvolvePointQuadrature);

void BM_ConvolveGrid(benchmark::State& state) {
    const int count = static_cast<int>(state.range(0));
    const auto g = GridFunction::sample([](double x) { return std::exp(-x * x); }, -10.0, 10.0, count);
    for (auto _ : state) benchmark::DoNotOptimize(convolve_grid(g, 1.0, 0));
    state.SetComplexityN(count);
}
BENCHMARK(BM_ConvolveGrid)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oNLogN);

void BM_LpNorm(benchmark::State& state) {
    const double p = static_cast<double>(state.range(0)) / 2.0;
    const auto f = PrimitiveFunction::gaussian_power(1.0, 1.0) + PrimitiveFunction::indicator(0.0, 1.0);
    const QuadratureConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(lp_norm(f, Exponent(p), cfg));
}
BENCHMARK(BM_LpNorm)->Arg(2)->Arg(3)->Arg(6);

}  // namespace
BENCHMARK_MAIN();
