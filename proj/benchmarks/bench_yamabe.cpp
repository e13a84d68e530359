#include <benchmark/benchmark.h>

#include "yamabe/bounds.hpp"
#include "yamabe/model_space.hpp"
#include "yamabe/mu_zero.hpp"
#include "yamabe/optimizer.hpp"
#include "yamabe/squeeze.hpp"
#include "yamabe/tables.hpp"

namespace {

using namespace yamabe;

void BM_MinimizeGeneral(benchmark::State& state) {
  const ModelSpaceParams params(2, 7);
  MinimizationConfig config;
  config.grid_points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_bound(params, 0.747, BoundFormula::General, config));
  }
}
BENCHMARK(BM_MinimizeGeneral)->Arg(100)->Arg(2000)->Arg(20000);

void BM_MinimizeCombined(benchmark::State& state) {
  const ModelSpaceParams params(4, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_bound(params, 0.56885, BoundFormula::Combined));
  }
}
BENCHMARK(BM_MinimizeCombined);

void BM_Table1(benchmark::State& state) {
  const auto registry = ConstantRegistry::defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_table1(registry));
  }
}
BENCHMARK(BM_Table1)->Unit(benchmark::kMillisecond);

void BM_TableTn(benchmark::State& state) {
  const auto registry = ConstantRegistry::defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_table_tn(registry));
  }
}
BENCHMARK(BM_TableTn)->Unit(benchmark::kMillisecond);

void BM_SqueezeEvaluate(benchmark::State& state) {
  const SqueezeMap map(static_cast<int>(state.range(0)), 1.0);
  const double r = static_cast<double>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(map.evaluate(r));
  }
}
BENCHMARK(BM_SqueezeEvaluate)->ArgsProduct({{2, 3, 4}, {1, 10}})->Unit(benchmark::kMicrosecond);

void BM_BallVolumeIntegral(benchmark::State& state) {
  const SqueezeMap map(4, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(map.ball_volume_integral(5.0));
  }
}
BENCHMARK(BM_BallVolumeIntegral)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
