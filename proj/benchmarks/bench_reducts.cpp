#include <benchmark/benchmark.h>

#include "reductlab/reducts.hpp"
#include "reductlab/shattering.hpp"
#include "reductlab/table.hpp"

using namespace reductlab;

static void BM_MinReductRandom(benchmark::State& state) {
  const auto table = random_table(Alphabet::numeric(static_cast<int>(state.range(0))), 10,
                                  40, DecisionSpec::distinct(), 42);
  for (auto _ : state) {
    auto result = min_reduct(table);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_MinReductRandom)->Arg(2)->Arg(3);

static void BM_MinReductCube(benchmark::State& state) {
  const auto cube = complete_table(Alphabet::binary(), static_cast<int>(state.range(0)),
                                   DecisionSpec::distinct());
  for (auto _ : state) {
    auto result = min_reduct(cube);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_MinReductCube)->DenseRange(4, 10, 2);

static void BM_BruteForceReduct(benchmark::State& state) {
  const auto table = random_table(Alphabet::binary(), static_cast<int>(state.range(0)), 30,
                                  DecisionSpec::distinct(), 7);
  for (auto _ : state) {
    auto size = brute_force_reduct_size(table);
    benchmark::DoNotOptimize(size);
  }
}
BENCHMARK(BM_BruteForceReduct)->DenseRange(6, 10, 2);

static void BM_ShatteringDimension(benchmark::State& state) {
  const auto table = random_table(Alphabet::numeric(3), static_cast<int>(state.range(0)),
                                  40, DecisionSpec::distinct(), 11);
  for (auto _ : state) {
    auto result = shattering_dimension(table);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ShatteringDimension)->DenseRange(6, 10, 2);

static void BM_EnumerateReducts(benchmark::State& state) {
  const auto table = random_table(Alphabet::binary(), 12, 30, DecisionSpec::distinct(), 5);
  for (auto _ : state) {
    auto result = enumerate_reducts(table);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_EnumerateReducts);
