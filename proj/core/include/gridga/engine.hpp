#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "gridga/encoding.hpp"
#include "gridga/operators.hpp"
#include "gridga/penalty.hpp"
#include "gridga/problems.hpp"

namespace gridga {

struct MutationSpec {
  enum class Rate { normal, strong, custom };
  MutationKind kind = MutationKind::bitflip;
  Rate rate = Rate::strong;
  double custom_rate = 0.0;

  // Per-bit probability for a genome of the given length: normal = 1/L,
  // strong = 2/L, custom = custom_rate as given. Permutation mutations
  // ignore the rate and fire once per offspring.
  double resolve(std::size_t genome_length) const;
};

struct GAConfig {
  int population_size = 25;

  // Evaluation budget. 0 means unlimited: the run only stops on stop_error
  // (or on unlimited_cap, if set, as a safety net).
  std::uint64_t max_fes = 0;
  std::uint64_t unlimited_cap = 0;

  SelectionKind selection{};
  CrossoverKind crossover = CrossoverKind::one_point;
  MutationSpec mutation{};
  double elitism_fraction = 0.05;
  bool elitism_random_transfer = false;

  GenomeKind genome = GenomeKind::gray_binary;
  GridSpec grid{};
  PenaltySpec penalty{};

  double stop_error = 1e-8;
  std::uint64_t seed = 0;
};

constexpr double kInfError = std::numeric_limits<double>::infinity();

struct Individual {
  Genome genome;
  std::vector<double> phenotype;  // decoded point; empty for Boolean problems
  double objective = 0.0;
  std::vector<double> violation;
  double total_violation = 0.0;
  double penalized = 0.0;
  double fitness = 0.0;
  double error = kInfError;  // |objective - optimum|, on the raw objective
  bool feasible = true;
};

// One row of a convergence trace. For budgeted runs `index` is the percent
// of the budget consumed (1..100); for unlimited runs it counts blocks of
// 1000 evaluations. Rows are strictly increasing in both fields: when one
// evaluation crosses several percent marks at once only the highest is kept.
struct TraceCheckpoint {
  int index = 0;
  std::uint64_t fes = 0;
  double error = kInfError;  // best-so-far, 0 when below stop_error
};

struct RunTrace {
  std::vector<TraceCheckpoint> checkpoints;
};

struct GenerationStats {
  int generation = 0;  // 0 = the initial population
  std::uint64_t fes_used = 0;
  double best_error = kInfError;  // best-so-far across the whole run
  double best_fitness = 0.0;      // of the current population
  double mean_fitness = 0.0;
  double worst_fitness = 0.0;
};
using GenerationObserver = std::function<void(const GenerationStats&)>;

struct RunResult {
  Individual best;          // feasible-preferred best-so-far
  RunTrace trace;
  std::uint64_t fes_used = 0;
  int generations = 0;
  bool solved = false;       // best is feasible with error < stop_error
  double final_error = kInfError;  // reported error: exactly 0 when solved
};

// Throws ConfigError when the configuration cannot run the problem: operator
// kinds mismatched with the genome kind, budget smaller than the population,
// out-of-range rates or fractions, degenerate grids.
void validate_config(const Problem& problem, const GAConfig& config);

// One generational GA run.
//
// The loop evaluates the initial population (counting toward the budget),
// then repeats select -> crossover -> mutate -> evaluate -> elitism until
// the budget is exhausted or a feasible individual's error drops below
// stop_error. The stop check runs at each evaluation, so the run ends the
// moment a solution appears; if the budget runs out mid-generation the
// remaining offspring are discarded unevaluated and fes_used equals the
// budget exactly. The incumbent `best` prefers feasible individuals; among
// infeasible ones, lower total violation wins.
RunResult run_ga(const Problem& problem, const GAConfig& config,
                 const GenerationObserver& observer = {});

}  // namespace gridga
