#include <benchmark/benchmark.h>

#include <random>

#include "fixtures.hpp"
#include "ifr/aggregate.hpp"
#include "ifr/normalize.hpp"
#include "ifr/philox.hpp"
#include "ifr/sensitivity.hpp"

namespace {

ifr::Dataset panel(std::size_t countries, std::size_t years) {
  std::mt19937_64 rng(1);
  std::vector<int> ys;
  for (std::size_t y = 0; y < years; ++y) ys.push_back(2024 - static_cast<int>(y));
  return fixtures::random_panel(ifr::build_default_ifr_hierarchy(), {countries, ys, 0.05, false}, rng);
}

void BM_Normalize(benchmark::State& state) {
  const auto spec = ifr::build_default_ifr_hierarchy();
  const auto data = panel(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(ifr::normalize_dataset(data, spec, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(data.size()));
}
BENCHMARK(BM_Normalize)->Arg(20)->Arg(200);

void BM_Scorecards(benchmark::State& state) {
  const auto spec = ifr::build_default_ifr_hierarchy();
  const auto data = panel(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(ifr::build_scorecards(data, spec, {}, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(data.size()));
}
BENCHMARK(BM_Scorecards)->Arg(20)->Arg(200);

void BM_SensitivityTrials(benchmark::State& state) {
  const auto spec = ifr::build_default_ifr_hierarchy();
  const auto data = panel(20, 1);
  ifr::SensitivityConfig config;
  config.trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ifr::run_sensitivity(data, spec, {}, {}, config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SensitivityTrials)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_KeyedNormal(benchmark::State& state) {
  std::uint64_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ifr::rng::keyed_standard_normal(42, trial++, "GR1", "x"));
}
BENCHMARK(BM_KeyedNormal);

}  // namespace
BENCHMARK_MAIN();
