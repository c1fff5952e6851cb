// Serial vs OpenMP kernels on BA graphs. Thread count follows OMP_NUM_THREADS.
#include <benchmark/benchmark.h>
#include <omp.h>

#include <map>

#include "netattack/generators.hpp"
#include "netattack/paths.hpp"

namespace {

using namespace netattack;

struct Fixture {
  Graph graph;
  std::vector<NodeId> members;
};

const Fixture& fixture(std::size_t n) {
  static std::map<std::size_t, Fixture> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    Graph g = generate_ba({n, 2, 1});
    auto members = largest_cluster(g).members;
    it = cache.emplace(n, Fixture{std::move(g), std::move(members)}).first;
  }
  return it->second;
}

void BM_PathSumsSerial(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pair_distance_sums_serial(f.graph, f.members));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.members.size()));
}

void BM_PathSumsParallel(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pair_distance_sums_parallel(f.graph, f.members));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.members.size()));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_LargestCluster(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(largest_cluster(f.graph));
}

void BM_ComponentSummary(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(component_summary(f.graph));
}

BENCHMARK(BM_PathSumsSerial)->Arg(1000)->Arg(5000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathSumsParallel)->Arg(1000)->Arg(5000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LargestCluster)->Arg(10000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ComponentSummary)->Arg(10000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
