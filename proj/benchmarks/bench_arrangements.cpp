#include <benchmark/benchmark.h>

#include "reductlab/lines.hpp"
#include "reductlab/polys.hpp"
#include "reductlab/rng.hpp"

using namespace reductlab;

static void BM_EnumerateCellsGeneralPosition(benchmark::State& state) {
  const auto lines = general_position_lines(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto cells = enumerate_cells(lines);
    benchmark::DoNotOptimize(cells);
  }
}
BENCHMARK(BM_EnumerateCellsGeneralPosition)->DenseRange(4, 12, 2);

static void BM_FeasibleSignSystem(benchmark::State& state) {
  const auto lines = general_position_lines(8);
  const Pattern pattern(8, 1);
  for (auto _ : state) {
    auto feasible = feasible_sign_system(lines, pattern);
    benchmark::DoNotOptimize(feasible);
  }
}
BENCHMARK(BM_FeasibleSignSystem);

static void BM_SignVectors(benchmark::State& state) {
  SeededRng rng(123);
  const auto polys = random_poly_system(static_cast<int>(state.range(0)), 6, rng);
  for (auto _ : state) {
    auto vectors = enumerate_sign_vectors(polys);
    benchmark::DoNotOptimize(vectors);
  }
}
BENCHMARK(BM_SignVectors)->DenseRange(1, 5, 2);

static void BM_IsolateRoots(benchmark::State& state) {
  // Wilkinson-style product with well-separated integer roots.
  RatPoly accum("w", {Rat(1)});
  for (long r = 1; r <= state.range(0); ++r) {
    accum = accum * RatPoly("", {Rat(-r), Rat(1)});
  }
  for (auto _ : state) {
    auto roots = isolate_roots(accum);
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(BM_IsolateRoots)->DenseRange(4, 12, 4);

static void BM_ShatterTable(benchmark::State& state) {
  const auto polys = shatter_system(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto table = build_poly_table(polys, DecisionSpec::distinct());
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_ShatterTable)->DenseRange(1, 4, 1);
