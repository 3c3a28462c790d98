#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "metrep/equivalence.hpp"
#include "metrep/oracle.hpp"
#include "metrep/realizability.hpp"

using namespace metrep;

static void BM_IsRealizable(benchmark::State& state) {
  const VectorSet s = fixtures::s14_set();
  for (auto _ : state) benchmark::DoNotOptimize(is_realizable(s));
}
BENCHMARK(BM_IsRealizable);

static void BM_CanonicalRealization(benchmark::State& state) {
  const VectorSet s = fixtures::s14_set();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_realization(s));
}
BENCHMARK(BM_CanonicalRealization);

static void BM_FindWitness(benchmark::State& state) {
  const VectorSet s = fixtures::s14_set();
  for (auto _ : state) benchmark::DoNotOptimize(find_witness(s));
}
BENCHMARK(BM_FindWitness);

// k x k grid graph seen from two corners of one side.
static void BM_FindWitnessGrid(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Graph g(k * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i + 1 < k) g.add_edge(i * k + j, (i + 1) * k + j);
      if (j + 1 < k) g.add_edge(i * k + j, i * k + j + 1);
    }
  }
  const VectorSet s = representation_set(g, OrderedVertexSet({0, k - 1}));
  for (auto _ : state) benchmark::DoNotOptimize(is_uniquely_realizable_2d(s));
}
BENCHMARK(BM_FindWitnessGrid)->Arg(4)->Arg(16)->Arg(64);

static void BM_EnumerateClasses(benchmark::State& state) {
  const VectorSet s = fixtures::s14_set();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_realization_classes(s));
}
BENCHMARK(BM_EnumerateClasses)->Unit(benchmark::kMillisecond);

static void BM_MetricDimension(benchmark::State& state) {
  const Graph g = fixtures::cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(metric_dimension(g));
}
BENCHMARK(BM_MetricDimension)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
