#include "knotspan/bracket.hpp"
#include "knotspan/extremal.hpp"
#include "knotspan/harness.hpp"
#include "knotspan/kauffman.hpp"

#include <benchmark/benchmark.h>

using namespace knotspan;

static void BM_Bracket(benchmark::State& state) {
  LinkDiagram d = pretzel_diagram({2, 3, static_cast<int>(state.range(0)) - 5});
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
}
BENCHMARK(BM_Bracket)->DenseRange(10, 17);

static void BM_Lambda(benchmark::State& state) {
  LinkDiagram d = pretzel_diagram({2, 3, static_cast<int>(state.range(0)) - 5});
  for (auto _ : state) {
    KauffmanEngine engine(20);  // fresh memo each round
    benchmark::DoNotOptimize(engine.lambda(d));
  }
}
BENCHMARK(BM_Lambda)->DenseRange(10, 14);

static void BM_ExtremeCoefficient(benchmark::State& state) {
  LinkDiagram d = pretzel_diagram({2, 3, static_cast<int>(state.range(0)) - 5});
  for (auto _ : state)
    benchmark::DoNotOptimize(extreme_coefficient(d, Extreme::Max));
}
BENCHMARK(BM_ExtremeCoefficient)->DenseRange(10, 17);

BENCHMARK_MAIN();
