#include <benchmark/benchmark.h>

#include "hypzeta/pipeline.hpp"

using namespace hypzeta;

// End-to-end runs; real time per prime should grow only polylogarithmically
// with the bound.
static void BM_PipelineGenus1(benchmark::State& state) {
  curve c = parse_curve({1, 1, 0, 1});
  run_config cfg;
  cfg.limit = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    auto recs = run_pipeline(c, cfg);
    benchmark::DoNotOptimize(recs);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PipelineGenus1)
    ->RangeMultiplier(4)
    ->Range(1024, 16384)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

static void BM_PipelineGenus2(benchmark::State& state) {
  curve c = parse_curve({1, -1, 0, 0, 0, 1});
  run_config cfg;
  cfg.limit = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    auto recs = run_pipeline(c, cfg);
    benchmark::DoNotOptimize(recs);
  }
}
BENCHMARK(BM_PipelineGenus2)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
