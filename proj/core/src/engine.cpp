#include "gridga/engine.hpp"

#include <cmath>
#include <sstream>

#include "gridga/errors.hpp"

namespace gridga {

double MutationSpec::resolve(std::size_t genome_length) const {
  switch (rate) {
    case Rate::normal:
      return 1.0 / static_cast<double>(genome_length);
    case Rate::strong:
      return 2.0 / static_cast<double>(genome_length);
    case Rate::custom:
      return custom_rate;
  }
  throw ConfigError("mutation: unknown rate rule");
}

void validate_config(const Problem& problem, const GAConfig& config) {
  if (problem.dimension < 1) {
    throw ConfigError("problem dimension must be >= 1");
  }
  if (config.population_size < 2) {
    throw ConfigError("population_size must be >= 2");
  }
  if (config.genome == GenomeKind::permutation) {
    throw ConfigError(
        "permutation genomes are not valid for the problem catalog "
        "(no permutation-represented problems exist)");
  }
  if (problem.repr == Representation::continuous) {
    if (!problem.objective) {
      throw ConfigError("continuous problem has no objective");
    }
    (void)point_count(config.grid);  // validates the grid
  } else {
    if (!problem.bit_objective) {
      throw ConfigError("boolean problem has no bit objective");
    }
  }
  if (config.crossover == CrossoverKind::order) {
    throw ConfigError("order crossover requires a permutation genome");
  }
  if (config.mutation.kind != MutationKind::bitflip) {
    throw ConfigError("binary genomes mutate via bitflip only");
  }
  if (config.mutation.rate == MutationSpec::Rate::custom) {
    const double r = config.mutation.custom_rate;
    if (!std::isfinite(r) || !(r > 0.0) || r > 1.0) {
      throw ConfigError("mutation rate must lie in (0, 1]");
    }
  }
  if (config.selection.method == SelectionKind::Method::tournament &&
      config.selection.tournament_size < 2) {
    throw ConfigError("tournament size must be >= 2");
  }
  if (!(config.elitism_fraction >= 0.0) || config.elitism_fraction >= 1.0) {
    throw ConfigError("elitism fraction must lie in [0, 1)");
  }
  if (!(config.stop_error >= 0.0) || !std::isfinite(config.stop_error)) {
    throw ConfigError("stop_error must be finite and >= 0");
  }
  config.penalty.validate();

  const std::uint64_t effective_budget =
      config.max_fes != 0 ? config.max_fes : config.unlimited_cap;
  if (effective_budget != 0 &&
      effective_budget < static_cast<std::uint64_t>(config.population_size)) {
    throw ConfigError("budget must cover at least one full population");
  }
  if (effective_budget == 0 && config.stop_error <= 0.0) {
    throw ConfigError(
        "an unlimited run with stop_error 0 would never terminate; "
        "set max_fes, unlimited_cap, or a positive stop_error");
  }
}

namespace {

std::string genome_preview(const Genome& g, std::size_t limit = 64) {
  std::string s;
  const std::size_t n = std::min(g.bits.size(), limit);
  s.reserve(n + 3);
  for (std::size_t i = 0; i < n; ++i) s += g.bits[i] ? '1' : '0';
  if (g.bits.size() > limit) s += "...";
  return s;
}

// True when `a` should replace `b` as the incumbent best: feasible beats
// infeasible; among feasible, lower error; among infeasible, lower total
// violation.
bool improves(const Individual& a, const Individual& b) {
  if (a.feasible != b.feasible) return a.feasible;
  if (a.feasible) return a.error < b.error;
  return a.total_violation < b.total_violation;
}

}  // namespace

RunResult run_ga(const Problem& problem, const GAConfig& config,
                 const GenerationObserver& observer) {
  validate_config(problem, config);

  const bool boolean = problem.repr == Representation::boolean_bits;
  const int dim = problem.dimension;
  const std::size_t genome_len =
      boolean ? static_cast<std::size_t>(dim)
              : static_cast<std::size_t>(dim) *
                    static_cast<std::size_t>(bits_per_var(config.grid));
  const double mutation_rate = config.mutation.resolve(genome_len);
  if (!(mutation_rate > 0.0) || mutation_rate > 1.0) {
    throw ConfigError("resolved mutation rate must lie in (0, 1]");
  }

  // 0 means genuinely unbounded; the caller opted out of every cap.
  const std::uint64_t budget =
      config.max_fes != 0 ? config.max_fes : config.unlimited_cap;

  Rng rng(config.seed);
  AdaptivePenaltyState adaptive(config.penalty);

  RunResult result;
  Individual best;
  bool have_best = false;
  std::uint64_t fes = 0;
  std::uint64_t next_checkpoint = 1;
  int generation = 0;
  bool stop = false;

  const auto reported_error = [&](const Individual& b) {
    return b.feasible && b.error < config.stop_error ? 0.0 : b.error;
  };

  // Appends at most one checkpoint per evaluation: the highest percent mark
  // (or 1000-FEs block) crossed so far, keeping fes strictly increasing.
  const auto record_checkpoints = [&] {
    std::uint64_t reached;
    if (config.max_fes != 0) {
      reached = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(fes) * 100 / config.max_fes);
      if (reached > 100) reached = 100;
    } else {
      reached = fes / 1000;
    }
    if (reached >= next_checkpoint) {
      result.trace.checkpoints.push_back(
          {static_cast<int>(reached), fes, reported_error(best)});
      next_checkpoint = reached + 1;
    }
  };

  const auto evaluate = [&](Individual& ind) {
    double f;
    if (boolean) {
      f = problem.bit_objective(ind.genome.bits);
    } else {
      ind.phenotype = decode_genome(ind.genome, config.grid, dim);
      f = problem.objective(ind.phenotype);
    }
    if (!std::isfinite(f)) {
      std::ostringstream msg;
      msg << problem.id << ": non-finite objective at generation " << generation
          << ", genome " << genome_preview(ind.genome);
      throw EvaluationError(msg.str());
    }
    ind.objective = f;
    ind.error = std::abs(f - problem.optimum_value);
    ind.feasible = true;
    ind.total_violation = 0.0;
    if (!boolean && problem.constrained()) {
      ind.violation = violations(ind.phenotype, *problem.constraints);
      for (double v : ind.violation) ind.total_violation += v;
      ind.feasible = ind.total_violation == 0.0;
    }
    ind.penalized = penalized_objective(f, ind.violation, config.penalty,
                                        generation, &adaptive);
    ind.fitness = hyperbolic_fitness(ind.penalized, problem.optimum_value);

    ++fes;
    if (!have_best || improves(ind, best)) {
      best = ind;
      have_best = true;
    }
    record_checkpoints();
    if (best.feasible && best.error < config.stop_error) stop = true;
  };

  std::vector<Individual> population(
      static_cast<std::size_t>(config.population_size));
  for (auto& ind : population) {
    ind.genome = random_bit_genome(config.genome, genome_len, rng);
  }
  for (auto& ind : population) {
    if (stop) break;
    evaluate(ind);
  }

  const auto emit_stats = [&] {
    if (!observer) return;
    GenerationStats s;
    s.generation = generation;
    s.fes_used = fes;
    s.best_error = best.error;
    s.best_fitness = population.front().fitness;
    s.worst_fitness = population.front().fitness;
    double total = 0.0;
    for (const auto& ind : population) {
      s.best_fitness = std::max(s.best_fitness, ind.fitness);
      s.worst_fitness = std::min(s.worst_fitness, ind.fitness);
      total += ind.fitness;
    }
    s.mean_fitness = total / static_cast<double>(population.size());
    observer(s);
  };

  if (!stop) emit_stats();

  while (!stop && (budget == 0 || fes < budget)) {
    ++generation;

    std::vector<double> fitness(population.size());
    for (std::size_t i = 0; i < population.size(); ++i) {
      fitness[i] = population[i].fitness;
    }
    const std::vector<std::size_t> parents =
        select_parents(config.selection, fitness, population.size(), rng);

    // Consecutive pairs; an odd count pairs the last parent with itself and
    // keeps only the first child of that pair.
    std::vector<Individual> children;
    children.reserve(population.size());
    for (std::size_t k = 0; k < parents.size(); k += 2) {
      const Genome& g1 = population[parents[k]].genome;
      const Genome& g2 =
          population[parents[k + 1 < parents.size() ? k + 1 : k]].genome;
      auto [c1, c2] = crossover(config.crossover, g1, g2, rng);
      Individual child1;
      child1.genome = std::move(c1);
      children.push_back(std::move(child1));
      if (children.size() < population.size()) {
        Individual child2;
        child2.genome = std::move(c2);
        children.push_back(std::move(child2));
      }
    }

    for (auto& child : children) {
      mutate_bits(child.genome, mutation_rate, rng);
    }

    bool truncated = false;
    for (auto& child : children) {
      if (budget != 0 && fes >= budget) {
        truncated = true;  // budget exhausted: drop the rest unevaluated
        break;
      }
      evaluate(child);
      if (stop) break;
    }
    if (stop || truncated) break;

    population = apply_elitism(population, std::move(children),
                               config.elitism_fraction,
                               config.elitism_random_transfer, &rng);
    ++result.generations;

    if (config.penalty.kind == PenaltySpec::Kind::adaptive &&
        problem.constrained()) {
      const Individual* fittest = &population.front();
      for (const auto& ind : population) {
        if (ind.fitness > fittest->fitness) fittest = &ind;
      }
      adaptive.observe_generation(fittest->feasible);
    }

    emit_stats();
  }

  result.best = best;
  result.fes_used = fes;
  result.solved = have_best && best.feasible && best.error < config.stop_error;
  result.final_error =
      result.solved ? 0.0 : (have_best ? best.error : kInfError);
  return result;
}

}  // namespace gridga
