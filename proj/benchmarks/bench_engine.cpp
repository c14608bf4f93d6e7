// End-to-end benchmarks: whole GA runs and a small campaign, timed per
// function evaluation so encoding or operator regressions show up directly.

#include <cstdint>

#include <benchmark/benchmark.h>

#include "gridga/engine.hpp"
#include "gridga/harness.hpp"
#include "gridga/problems.hpp"

using namespace gridga;

namespace {

GAConfig continuous_config(std::uint64_t budget) {
  GAConfig cfg;
  cfg.population_size = 25;
  cfg.max_fes = budget;
  cfg.selection = SelectionKind::tournament_of(3);
  cfg.crossover = CrossoverKind::one_point;
  cfg.mutation.rate = MutationSpec::Rate::strong;
  cfg.genome = GenomeKind::gray_binary;
  cfg.grid = {-100.0, 100.0, 1e-8};
  cfg.stop_error = 1e-8;
  return cfg;
}

void BM_RunContinuous(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const Problem problem = make_problem("rastrigin", dim);
  GAConfig cfg = continuous_config(5000);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(run_ga(problem, cfg));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(cfg.max_fes));
}
BENCHMARK(BM_RunContinuous)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_RunConstrained(benchmark::State& state) {
  const Problem problem = make_problem("co1", 10);
  GAConfig cfg = continuous_config(5000);
  cfg.selection = SelectionKind::ranked();
  cfg.crossover = CrossoverKind::two_point;
  cfg.grid.step = 1e-4;
  cfg.penalty.kind = PenaltySpec::Kind::dynamic;
  cfg.stop_error = 1e-4;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(run_ga(problem, cfg));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(cfg.max_fes));
}
BENCHMARK(BM_RunConstrained)->Unit(benchmark::kMillisecond);

void BM_RunBoolean(benchmark::State& state) {
  const Problem problem = make_problem("onemax", 50);
  GAConfig cfg;
  cfg.population_size = 10;
  cfg.max_fes = 0;
  cfg.unlimited_cap = 500000;
  cfg.selection = SelectionKind::tournament_of(3);
  cfg.crossover = CrossoverKind::uniform;
  cfg.mutation.rate = MutationSpec::Rate::normal;
  cfg.genome = GenomeKind::plain_binary;
  cfg.stop_error = 1e-8;
  std::uint64_t seed = 1;
  std::uint64_t fes = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    const RunResult result = run_ga(problem, cfg);
    fes += result.fes_used;
    benchmark::DoNotOptimize(result.final_error);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(fes));
}
BENCHMARK(BM_RunBoolean)->Unit(benchmark::kMillisecond);

void BM_Campaign(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  ExperimentSpec spec;
  spec.problem = "rastrigin";
  spec.dims = {10};
  spec.budgets = {5000};
  spec.runs = 8;
  spec.base = continuous_config(5000);
  spec.master_seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_experiment(spec, jobs));
  }
  state.SetItemsProcessed(state.iterations() * spec.runs *
                          static_cast<std::int64_t>(spec.budgets[0]));
}
// Real time: the interesting quantity is wall-clock speedup across jobs.
BENCHMARK(BM_Campaign)
    ->Arg(1)
    ->Arg(4)
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
