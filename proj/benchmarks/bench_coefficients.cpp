#include <benchmark/benchmark.h>

#include "optquad/coefficients.hpp"
#include "optquad/direct_solver.hpp"
#include "optquad/error_analysis.hpp"

using namespace optquad;

static void BM_ClosedFormM1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_m1(n));
}
BENCHMARK(BM_ClosedFormM1)->RangeMultiplier(4)->Range(4, 1024);

static void BM_ClosedFormM2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_m2(n));
}
BENCHMARK(BM_ClosedFormM2)->RangeMultiplier(4)->Range(4, 1024);

static void BM_Convolution(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(coefficients_via_convolution(m, n));
}
BENCHMARK(BM_Convolution)->ArgsProduct({{1, 2}, {4, 16, 64, 256}});

static void BM_DirectSolve(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(direct_solve(m, n));
}
BENCHMARK(BM_DirectSolve)->ArgsProduct({{1, 2, 3}, {4, 16, 64}});

static void BM_ErrorNorm(benchmark::State& state) {
  const auto rule = closed_form_m2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(error_norm_squared(rule));
}
BENCHMARK(BM_ErrorNorm)->RangeMultiplier(4)->Range(4, 256);
