#include <cmath>

#include <benchmark/benchmark.h>

#include "optquad/discrete_operator.hpp"

using namespace optquad;

static void BM_BuildOperator(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_operator<double>(m, 1.0 / 64));
}
BENCHMARK(BM_BuildOperator)->DenseRange(1, 3);

// D_m * e^{-h gamma} at beta = 0, window grown until the tail is below 1e-14
static void BM_ConvolveExponential(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const double h = 1.0 / static_cast<double>(state.range(1));
  const auto spec = build_operator<double>(m, h);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve_to_tolerance(spec, [h](long g) { return std::exp(-h * g); }, 0, 1e-14));
  }
}
BENCHMARK(BM_ConvolveExponential)->ArgsProduct({{1, 2, 3}, {2, 10, 64}});
