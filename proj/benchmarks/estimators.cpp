#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "dcsd/estimators.hpp"
#include "dcsd/objectives.hpp"

namespace {

std::vector<double> sorted_sample(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(10.0, 3.0);
  std::vector<double> y(m);
  for (double& v : y) v = dist(rng);
  std::sort(y.begin(), y.end());
  return y;
}

dcsd::GlobalStats global_for(const std::vector<double>& y) {
  std::vector<double> p = y;
  p.push_back(y.front() - 10);
  return dcsd::GlobalStats::of(p);
}

void BM_Linear(benchmark::State& state) {
  const auto y = sorted_sample(static_cast<std::size_t>(state.range(0)), 1);
  const dcsd::Objective f1(dcsd::ObjectiveSpec::f1(), global_for(y));
  for (auto _ : state) benchmark::DoNotOptimize(dcsd::median_sequence_estimate_linear(f1, y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Linear)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

void BM_General(benchmark::State& state) {
  const auto y = sorted_sample(static_cast<std::size_t>(state.range(0)), 2);
  const dcsd::Objective f1(dcsd::ObjectiveSpec::f1(), global_for(y));
  for (auto _ : state) benchmark::DoNotOptimize(dcsd::median_sequence_estimate_general(f1, y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_General)->RangeMultiplier(2)->Range(250, 4000)->Complexity(benchmark::oNSquared);

void BM_TopSequence(benchmark::State& state) {
  const auto y = sorted_sample(static_cast<std::size_t>(state.range(0)), 3);
  const dcsd::Objective f0(dcsd::ObjectiveSpec::f0(), global_for(y));
  for (auto _ : state) benchmark::DoNotOptimize(dcsd::top_sequence_estimate(f0, y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TopSequence)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

}  // namespace
