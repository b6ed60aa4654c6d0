// Serial reference kernels against their OpenMP counterparts.
//
//   bench_kernels --benchmark_filter=AllPairs
//
// Thread count follows OMP_NUM_THREADS; the Threads/N argument overrides it.

#include <benchmark/benchmark.h>

#include "multipack/class_checkers.hpp"
#include "multipack/exact_solver.hpp"
#include "multipack/generators.hpp"
#include "multipack/serial.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

using namespace multipack;

namespace {

constexpr std::uint64_t kSeed = 7;

Graph sparse_graph(Vertex n) {
  SplitMix64 rng(kSeed + n);
  return random_connected_graph(n, 2, n, rng);
}

void set_threads(benchmark::State& state, int index) {
#if defined(_OPENMP)
  omp_set_num_threads(static_cast<int>(state.range(index)));
#else
  (void)state;
  (void)index;
#endif
}

// One fixed large tree; its candidate family has a few hundred thousand sets.
struct FilterInput {
  DistanceMatrix d;
  std::vector<VertexMask> family;
};

const FilterInput& filter_input() {
  static const FilterInput input = [] {
    SplitMix64 rng(kSeed);
    std::size_t best = 0;
    FilterInput out;
    for (int i = 0; i < 40; ++i) {
      const auto t = bfs_tree(random_tree(30, rng), 0);
      auto fam = candidate_family(t);
      if (fam.size() > best) {
        best = fam.size();
        out = {all_pairs(t.to_graph()), std::move(fam.sets)};
      }
    }
    return out;
  }();
  return input;
}

}  // namespace

static void BM_AllPairs_Serial(benchmark::State& state) {
  const Graph g = sparse_graph(static_cast<Vertex>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::all_pairs(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AllPairs_Serial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_AllPairs_Parallel(benchmark::State& state) {
  const Graph g = sparse_graph(static_cast<Vertex>(state.range(0)));
  set_threads(state, 1);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs(g));
}
BENCHMARK(BM_AllPairs_Parallel)->ArgsProduct({{256, 1024}, {1, 2, 4}})->ArgNames({"n", "threads"})
    ->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_Hyperbolicity_Serial(benchmark::State& state) {
  const Graph g = sparse_graph(static_cast<Vertex>(state.range(0)));
  const auto d = all_pairs(g);
  for (auto _ : state) benchmark::DoNotOptimize(serial::hyperbolicity(d));
}
BENCHMARK(BM_Hyperbolicity_Serial)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);

static void BM_Hyperbolicity_Parallel(benchmark::State& state) {
  const Graph g = sparse_graph(static_cast<Vertex>(state.range(0)));
  const auto d = all_pairs(g);
  set_threads(state, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hyperbolicity(g, d));
}
BENCHMARK(BM_Hyperbolicity_Parallel)->ArgsProduct({{48, 96}, {1, 2, 4}})->ArgNames({"n", "threads"})
    ->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_FamilyFilter_Serial(benchmark::State& state) {
  const auto& in = filter_input();
  for (auto _ : state) benchmark::DoNotOptimize(serial::best_multipacking(in.d, in.family));
  state.counters["sets"] = static_cast<double>(in.family.size());
}
BENCHMARK(BM_FamilyFilter_Serial)->Unit(benchmark::kMillisecond);

static void BM_FamilyFilter_Parallel(benchmark::State& state) {
  const auto& in = filter_input();
  set_threads(state, 0);
  for (auto _ : state) benchmark::DoNotOptimize(best_multipacking(in.d, in.family));
  state.counters["sets"] = static_cast<double>(in.family.size());
}
BENCHMARK(BM_FamilyFilter_Parallel)->Arg(1)->Arg(2)->Arg(4)->ArgName("threads")->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
