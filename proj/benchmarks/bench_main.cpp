#include <benchmark/benchmark.h>

#include "poset_assoc/comparability.hpp"
#include "poset_assoc/flip_map.hpp"
#include "poset_assoc/tubing.hpp"

using namespace poset_assoc;

namespace {

Poset graded(std::vector<int> parts) { return complete_graded(Composition(std::move(parts))); }

void BM_EnumerateTubes(benchmark::State& state) {
  const Poset p = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tubes(p));
}
BENCHMARK(BM_EnumerateTubes)->DenseRange(6, 12, 2);

void BM_TubingCountsChain(benchmark::State& state) {
  const Poset p = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tubing_size_counts(p));
}
BENCHMARK(BM_TubingCountsChain)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_FVectorP222(benchmark::State& state) {
  const Poset p = graded({2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(f_vector(p));
}
BENCHMARK(BM_FVectorP222);

void BM_TubingCountsThreads(benchmark::State& state) {
  const Poset p = graded({2, 3, 2, 2});
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tubing_size_counts(p, threads));
}
BENCHMARK(BM_TubingCountsThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_FlipTubing(benchmark::State& state) {
  const Poset p = graded({1, 2, 3});
  const ElementSet s = subset_from_labels(p, {"x3_1", "x3_2", "x3_3"}) |
                       subset_from_labels(p, {"x2_1", "x2_2"});
  const auto tubings = enumerate_tubings(p);
  for (auto _ : state) {
    for (const Tubing& t : tubings) benchmark::DoNotOptimize(flip_tubing(p, s, t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(tubings.size()));
}
BENCHMARK(BM_FlipTubing)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const Poset p = graded({3, 3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(p));
}
BENCHMARK(BM_CanonicalForm);

void BM_ConnectedPosets(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(connected_posets(n));
}
BENCHMARK(BM_ConnectedPosets)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
