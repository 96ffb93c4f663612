// Serial reference vs OpenMP kernels for the distance matrix and the fused
// index report. Run with OMP_NUM_THREADS to vary the parallel side.

#include <benchmark/benchmark.h>

#include <random>

#include "gutmyc/graph.hpp"
#include "gutmyc/metrics.hpp"

namespace {

using namespace gutmyc;

Graph connected_random(std::size_t n, double p) {
  std::mt19937_64 engine(n);
  for (;;) {
    Graph g = random_graph(n, p, engine);
    if (is_connected(g)) return g;
  }
}

double density(std::int64_t n) { return 20.0 / static_cast<double>(n); }

void BM_DistanceMatrixSerial(benchmark::State& state) {
  const Graph g = connected_random(state.range(0), density(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::distance_matrix(g));
}

void BM_DistanceMatrixParallel(benchmark::State& state) {
  const Graph g = connected_random(state.range(0), density(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(g));
}

void BM_IndexReportSerial(benchmark::State& state) {
  const Graph g = connected_random(state.range(0), density(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::index_report(g));
}

void BM_IndexReportParallel(benchmark::State& state) {
  const Graph g = connected_random(state.range(0), density(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(index_report(g));
}

}  // namespace

BENCHMARK(BM_DistanceMatrixSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceMatrixParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IndexReportSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IndexReportParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
