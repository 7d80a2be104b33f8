#include <benchmark/benchmark.h>

#include "hypzeta/reduction.hpp"

using namespace hypzeta;

namespace {

const curve& genus1() {
  static curve c = parse_curve({1, 1, 0, 1});
  return c;
}

const curve& genus2() {
  static curve c = parse_curve({1, -1, 0, 0, 0, 1});
  return c;
}

}  // namespace

static void BM_ReductionContext(benchmark::State& state) {
  for (auto _ : state) {
    reduction_context ctx(genus2());
    benchmark::DoNotOptimize(&ctx);
  }
}
BENCHMARK(BM_ReductionContext);

static void BM_ZeroBlockMatrix(benchmark::State& state) {
  reduction_context ctx(genus1());
  const admissible_pair pr{8, 5};
  int_mat M;
  mpz_class D;
  int64_t r = 1;
  for (auto _ : state) {
    reduce_to_zero_matrix(ctx, pr, r, M, D);
    benchmark::DoNotOptimize(M);
    r = r % 16384 + 1;
  }
}
BENCHMARK(BM_ZeroBlockMatrix);

static void BM_ZeroBlockMatrixGenus2(benchmark::State& state) {
  reduction_context ctx(genus2());
  const admissible_pair pr{24, 9};
  int_mat M;
  mpz_class D;
  int64_t r = 1;
  for (auto _ : state) {
    reduce_to_zero_matrix(ctx, pr, r, M, D);
    benchmark::DoNotOptimize(M);
    r = r % 256 + 1;
  }
}
BENCHMARK(BM_ZeroBlockMatrixGenus2);

static void BM_RationalReduce(benchmark::State& state) {
  reduction_context ctx(genus1());
  const auto block = zero_block_kinds({2, 1});
  std::vector<step_kind> path;
  for (int r = 20; r >= 1; --r) path.insert(path.end(), block.begin(), block.end());
  const auto fin = final_block_kinds({2, 1});
  path.insert(path.end(), fin.begin(), fin.end());

  differential_vector omega;
  omega.s = 2 * 41 - 1;
  omega.t = (41 - 1) / 2;
  omega.coords = {mpq_class(1), mpq_class(0), mpq_class(0)};
  for (auto _ : state) {
    auto res = rational_reduce(ctx, omega, path);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_RationalReduce);

BENCHMARK_MAIN();
