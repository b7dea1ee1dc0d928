#include <benchmark/benchmark.h>

#include "dcsd/fixtures.hpp"
#include "dcsd/propositions.hpp"
#include "dcsd/search.hpp"

namespace {

// Arg 0: planted fixture seed. Arg 1: 1 for the tight bound, 0 for the
// top-sequence bound of f0.
void BM_SearchF1(benchmark::State& state) {
  const auto table = dcsd::planted_fixture(static_cast<std::uint64_t>(state.range(0)));
  const auto pool = dcsd::build_propositions(table, 5);
  dcsd::SearchConfig config;
  if (state.range(1) == 0) {
    config.estimator = dcsd::EstimatorKind::top_sequence;
    config.bound_objective = dcsd::ObjectiveSpec::f0();
  }
  std::size_t expanded = 0;
  for (auto _ : state) {
    const auto out = dcsd::run_search(table, pool, dcsd::ObjectiveSpec::f1(), config);
    expanded = out.trace.nodes_expanded;
    benchmark::DoNotOptimize(out.results.front().value);
  }
  state.counters["nodes_expanded"] = static_cast<double>(expanded);
}
BENCHMARK(BM_SearchF1)->ArgsProduct({{1, 2, 3, 4, 5}, {1, 0}})->Unit(benchmark::kMillisecond);

}  // namespace
