#include <benchmark/benchmark.h>

#include "ipgap/graph.hpp"
#include "ipgap/interchange.hpp"
#include "ipgap/reduce.hpp"
#include "ipgap/spectral.hpp"
#include "ipgap/young.hpp"

namespace {

using namespace ipgap;

void BM_InterchangeLaplacianBuild(benchmark::State& state) {
  const WeightedGraph g = wheel_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(interchange_laplacian(g).nnz());
}
BENCHMARK(BM_InterchangeLaplacianBuild)->DenseRange(4, 7);

void BM_GapInterchange(benchmark::State& state) {
  const WeightedGraph g = wheel_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gap_interchange(g));
}
BENCHMARK(BM_GapInterchange)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_IrrepLaplacian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeightedGraph g = complete_graph(n);
  const Partition p({n - 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(irrep_laplacian(p, g).dim());
}
BENCHMARK(BM_IrrepLaplacian)->DenseRange(4, 8);

void BM_AldousCheck(benchmark::State& state) {
  const WeightedGraph g = wheel_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(aldous_check(g).pass);
}
BENCHMARK(BM_AldousCheck)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_ReduceWheel(benchmark::State& state) {
  const Skeleton s = Skeleton::from_graph(wheel_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_edge(s).nodes_expanded);
}
BENCHMARK(BM_ReduceWheel)->Arg(6)->Arg(9)->Arg(12);

void BM_CertifyElimination(benchmark::State& state) {
  const WeightedGraph g = nested_triangulation(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_elimination(g, 4).certified());
}
BENCHMARK(BM_CertifyElimination)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
