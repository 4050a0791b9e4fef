#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "bergek4/bound.hpp"
#include "bergek4/canonical.hpp"
#include "bergek4/detect.hpp"
#include "bergek4/extremal.hpp"
#include "bergek4/search.hpp"
#include "bergek4/trace.hpp"

using namespace bergek4;

namespace {

TripleSystem random_system(int n, int m, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<Triple> pool = all_triples(n);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min<std::size_t>(pool.size(), static_cast<std::size_t>(m)));
  return TripleSystem(n, pool);
}

}  // namespace

// Free systems are the worst case: every placement is tried.
static void BM_DetectK4OnConstruction(benchmark::State& state) {
  const TripleSystem h = balanced_3partite(static_cast<int>(state.range(0)));
  const PatternGraph k4 = complete_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(is_berge_free(h, k4));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DetectK4OnConstruction)->DenseRange(6, 15, 3);

static void BM_DetectK4Random(benchmark::State& state) {
  const TripleSystem h = random_system(8, static_cast<int>(state.range(0)), 17);
  const PatternGraph k4 = complete_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(find_berge(h, k4));
}
BENCHMARK(BM_DetectK4Random)->Arg(6)->Arg(12)->Arg(24);

static void BM_DetectNonExpansion(benchmark::State& state) {
  const TripleSystem h = expansion_of(complete_graph(4));
  const PatternGraph k4 = complete_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(is_berge_free(h, k4, DetectMode::NonExpansion));
}
BENCHMARK(BM_DetectNonExpansion);

static void BM_CanonicalForm(benchmark::State& state) {
  const TripleSystem h = random_system(static_cast<int>(state.range(0)), 12, 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(h));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(7)->Arg(8);

static void BM_TraceAndSurplus(benchmark::State& state) {
  const TripleSystem h = balanced_3partite(static_cast<int>(state.range(0)));
  const auto a = find_berge_triangle_anchored(h);
  const std::vector<Vertex> core(a->labels.begin(), a->labels.end());
  for (auto _ : state) {
    const TraceMultigraph t = trace(h, core);
    benchmark::DoNotOptimize(surplus(t));
    benchmark::DoNotOptimize(check_no_sdr(t, a->x, a->y));
  }
}
BENCHMARK(BM_TraceAndSurplus)->Arg(9)->Arg(30);

static void BM_CheckToomany(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_toomany(state.range(0)));
}
BENCHMARK(BM_CheckToomany)->Arg(300);

static void BM_MaxEdgesBergeK4(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const SearchResult r = max_edges(n, BergePattern{complete_graph(4)});
    nodes = r.stats.nodes;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_MaxEdgesBergeK4)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_MaxEdgesSeedAblation(benchmark::State& state) {
  SearchConfig config;
  config.seed_construction = state.range(0) != 0;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const SearchResult r = max_edges(6, BergePattern{complete_graph(4)}, config);
    nodes = r.stats.nodes;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_MaxEdgesSeedAblation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_TuranGraphSearch(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graph_max_edges(m, 4).value);
}
BENCHMARK(BM_TuranGraphSearch)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
