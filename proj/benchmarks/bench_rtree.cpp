#include <benchmark/benchmark.h>

#include <random>

#include "hypzeta/oracle.hpp"
#include "hypzeta/rtree.hpp"

using namespace hypzeta;

namespace {

std::vector<int_mat> random_sequence(std::size_t B, int n, long mag) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> dist(-mag, mag);
  std::vector<int_mat> seq(B, int_mat(n));
  for (auto& m : seq)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  return seq;
}

}  // namespace

static void BM_AccumulatingRemainderTree(benchmark::State& state) {
  const auto B = static_cast<std::size_t>(state.range(0));
  auto seq = random_sequence(B, 3, 1000000);
  for (auto _ : state) {
    auto leaves = accumulating_remainder_tree(seq, 4);
    benchmark::DoNotOptimize(leaves);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AccumulatingRemainderTree)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

// One direct product per leaf prime: the quadratic-cost baseline the tree
// replaces.
static void BM_DirectProductsAllPrimes(benchmark::State& state) {
  const auto B = static_cast<std::size_t>(state.range(0));
  auto seq = random_sequence(B, 3, 1000000);
  auto primes = sieve_primes(2 * B);
  for (auto _ : state) {
    for (uint64_t p : primes) {
      if (p < 3) continue;
      auto m = direct_mod_product(seq, p, (p - 1) / 2, 4);
      benchmark::DoNotOptimize(m);
    }
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DirectProductsAllPrimes)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

static void BM_SievePrimes(benchmark::State& state) {
  for (auto _ : state) {
    auto ps = sieve_primes(static_cast<uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(ps);
  }
}
BENCHMARK(BM_SievePrimes)->Arg(1 << 16)->Arg(1 << 20);

BENCHMARK_MAIN();
