// Serial vs OpenMP property sweeps, and the three one-step algorithms.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "bbsrsk/evolution.hpp"
#include "bbsrsk/oracle.hpp"
#include "bbsrsk/sweep.hpp"

using namespace bbsrsk;

namespace {

const Suite& suite_at(std::size_t k) {
  static const std::vector<Suite> suites = property_suites();
  return suites.at(k);
}

void bm_sweep(benchmark::State& state, Execution execution) {
  const Suite& suite = suite_at(static_cast<std::size_t>(state.range(0)));
  state.SetLabel(suite.name);
  for (auto _ : state) {
    const SuiteReport r = run_suite(suite, 1, 200, execution);
    benchmark::DoNotOptimize(r.failures);
  }
}

void bm_sweep_serial(benchmark::State& state) { bm_sweep(state, Execution::serial); }
void bm_sweep_parallel(benchmark::State& state) { bm_sweep(state, Execution::parallel); }

std::vector<State> corpus() {
  std::vector<State> states;
  for (std::uint64_t i = 0; i < 256; ++i) {
    auto rng = case_rng(1, 1, i);
    states.push_back(random_state(rng));
  }
  return states;
}

template <State (*Step)(const State&)>
void bm_step(benchmark::State& state) {
  static const std::vector<State> states = corpus();
  for (auto _ : state) {
    for (const State& s : states) benchmark::DoNotOptimize(Step(s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(states.size()));
}

}  // namespace

BENCHMARK(bm_sweep_serial)->DenseRange(0, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sweep_parallel)->DenseRange(0, 8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(bm_step<original_step>)->Name("original_step");
BENCHMARK(bm_step<carrier_step>)->Name("carrier_step");
BENCHMARK(bm_step<oracle::naive_original_step>)->Name("naive_original_step");

BENCHMARK_MAIN();
