#include <random>

#include <benchmark/benchmark.h>

#include "stabidx/enumerate.hpp"
#include "stabidx/families.hpp"
#include "stabidx/saturating_matrix.hpp"
#include "stabidx/stable_index.hpp"

namespace {

using namespace stabidx;

Digraph random_order(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 4 == 0) arcs.emplace_back(u, v);
  return Digraph::from_arcs(n, arcs);
}

void BM_SatMultiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SaturatingMatrix a = adjacency(random_order(n, 1));
  const SaturatingMatrix b = adjacency(random_order(n, 2));
  SaturatingMatrix out;
  for (auto _ : state) {
    sat_multiply_into(a, b, out);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_SatMultiply)->Arg(8)->Arg(64)->Arg(256);

void BM_StableIndexDumbbell(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Digraph d = build_g(m + 1, 3, m - 1);
  for (auto _ : state) benchmark::DoNotOptimize(stable_index_bounded(d));
}
BENCHMARK(BM_StableIndexDumbbell)->Arg(4)->Arg(8)->Arg(16);

void BM_StableIndexCycleDetect(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Digraph d = build_g(m + 1, 3, m - 1);
  for (auto _ : state) benchmark::DoNotOptimize(stable_index_cycle_detect(d));
}
BENCHMARK(BM_StableIndexCycleDetect)->Arg(4)->Arg(8)->Arg(16);

void BM_EnumerateOrder4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_exhaustive(Partition::full(4)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(code_space(4)));
}
BENCHMARK(BM_EnumerateOrder4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
