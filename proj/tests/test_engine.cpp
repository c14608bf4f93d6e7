#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "gridga/engine.hpp"
#include "gridga/errors.hpp"

using namespace gridga;

namespace {

// Continuous problem whose objective is a fixed constant. With optimum 0 and
// constant 1 it can never be solved, which makes evaluation counts and
// checkpoint layouts exactly predictable.
Problem constant_problem(double value, int dim) {
  Problem p;
  p.id = "constant";
  p.dimension = dim;
  p.repr = Representation::continuous;
  p.lower = -1.0;
  p.upper = 1.0;
  p.optimum_value = 0.0;
  p.objective = [value](std::span<const double>) { return value; };
  return p;
}

GAConfig small_config() {
  GAConfig cfg;
  cfg.population_size = 10;
  cfg.selection = SelectionKind::tournament_of(3);
  cfg.crossover = CrossoverKind::uniform;
  cfg.mutation.rate = MutationSpec::Rate::normal;
  cfg.grid = {-1.0, 1.0, 0.25};
  cfg.seed = 7;
  return cfg;
}

}  // namespace

TEST_CASE("mutation rates resolve against the genome length") {
  MutationSpec spec;
  spec.rate = MutationSpec::Rate::normal;
  CHECK(spec.resolve(40) == doctest::Approx(1.0 / 40.0));
  spec.rate = MutationSpec::Rate::strong;
  CHECK(spec.resolve(40) == doctest::Approx(2.0 / 40.0));
  spec.rate = MutationSpec::Rate::custom;
  spec.custom_rate = 0.125;
  CHECK(spec.resolve(40) == 0.125);
}

TEST_CASE("config validation rejects broken setups") {
  const Problem p = make_problem("rastrigin", 2);
  GAConfig cfg = small_config();
  cfg.max_fes = 1000;
  CHECK_NOTHROW(validate_config(p, cfg));

  GAConfig bad = cfg;
  bad.population_size = 1;
  CHECK_THROWS_AS(validate_config(p, bad), ConfigError);

  bad = cfg;
  bad.max_fes = 5;  // smaller than the population
  CHECK_THROWS_AS(validate_config(p, bad), ConfigError);

  bad = cfg;
  bad.genome = GenomeKind::permutation;
  CHECK_THROWS_AS(validate_config(p, bad), ConfigError);

  bad = cfg;
  bad.crossover = CrossoverKind::order;
  CHECK_THROWS_AS(validate_config(p, bad), ConfigError);

  bad = cfg;
  bad.mutation.kind = MutationKind::swap;
  CHECK_THROWS_AS(validate_config(p, bad), ConfigError);

  bad = cfg;
  bad.mutation.rate = MutationSpec::Rate::custom;
  bad.mutation.custom_rate = 0.0;
  CHECK_THROWS_AS(validate_config(p, bad), ConfigError);

  bad = cfg;
  bad.selection = SelectionKind::tournament_of(1);
  CHECK_THROWS_AS(validate_config(p, bad), ConfigError);

  bad = cfg;
  bad.elitism_fraction = 1.0;
  CHECK_THROWS_AS(validate_config(p, bad), ConfigError);

  bad = cfg;
  bad.stop_error = -1.0;
  CHECK_THROWS_AS(validate_config(p, bad), ConfigError);

  bad = cfg;
  bad.grid.step = 0.0;
  CHECK_THROWS_AS(validate_config(p, bad), ConfigError);

  // An unlimited run with no error target would never stop.
  bad = cfg;
  bad.max_fes = 0;
  bad.unlimited_cap = 0;
  bad.stop_error = 0.0;
  CHECK_THROWS_AS(validate_config(p, bad), ConfigError);
}

TEST_CASE("a budget equal to the population stops after initialization") {
  GAConfig cfg = small_config();
  cfg.population_size = 2;
  cfg.max_fes = 2;
  const RunResult r = run_ga(constant_problem(1.0, 2), cfg);
  CHECK(r.fes_used == 2);
  CHECK(r.generations == 0);
  CHECK(!r.solved);
  CHECK(r.final_error == doctest::Approx(1.0));
}

TEST_CASE("budget exhaustion truncates the last generation exactly") {
  GAConfig cfg = small_config();
  cfg.population_size = 4;
  cfg.max_fes = 6;  // init takes 4, the next generation only gets 2
  const RunResult r = run_ga(constant_problem(1.0, 2), cfg);
  CHECK(r.fes_used == 6);
  CHECK(r.generations == 0);  // the truncated generation never completed
}

TEST_CASE("an immediate solution stops the run at one evaluation") {
  GAConfig cfg = small_config();
  cfg.max_fes = 100;
  const RunResult r = run_ga(constant_problem(0.0, 2), cfg);
  CHECK(r.solved);
  CHECK(r.fes_used == 1);
  CHECK(r.final_error == 0.0);
  CHECK(r.best.error == 0.0);
}

TEST_CASE("percent checkpoints: one per evaluation when 1 FE = 1 percent") {
  GAConfig cfg = small_config();
  cfg.max_fes = 100;
  const RunResult r = run_ga(constant_problem(1.0, 2), cfg);
  CHECK(r.fes_used == 100);
  CHECK(r.generations == 9);  // 10 init + 9 * 10 offspring
  REQUIRE(r.trace.checkpoints.size() == 100);
  for (std::size_t i = 0; i < 100; ++i) {
    CHECK(r.trace.checkpoints[i].index == static_cast<int>(i) + 1);
    CHECK(r.trace.checkpoints[i].fes == i + 1);
    CHECK(r.trace.checkpoints[i].error == doctest::Approx(1.0));
  }
}

TEST_CASE("percent checkpoints: sparse budget lands on exact multiples") {
  GAConfig cfg = small_config();
  cfg.max_fes = 1000;
  const RunResult r = run_ga(constant_problem(1.0, 2), cfg);
  CHECK(r.fes_used == 1000);
  REQUIRE(r.trace.checkpoints.size() == 100);
  for (std::size_t i = 0; i < 100; ++i) {
    CHECK(r.trace.checkpoints[i].index == static_cast<int>(i) + 1);
    CHECK(r.trace.checkpoints[i].fes == 10 * (i + 1));
  }
}

TEST_CASE("checkpoint fields are strictly increasing with bounded error") {
  GAConfig cfg = small_config();
  cfg.max_fes = 3000;
  cfg.grid = {-5.12, 5.12, 1e-4};
  const Problem p = make_problem("rastrigin", 2);
  const RunResult r = run_ga(p, cfg);
  REQUIRE(!r.trace.checkpoints.empty());
  for (std::size_t i = 1; i < r.trace.checkpoints.size(); ++i) {
    CHECK(r.trace.checkpoints[i].index > r.trace.checkpoints[i - 1].index);
    CHECK(r.trace.checkpoints[i].fes > r.trace.checkpoints[i - 1].fes);
    // The trace reports the best-so-far error, which never rises.
    CHECK(r.trace.checkpoints[i].error <= r.trace.checkpoints[i - 1].error);
  }
  CHECK(r.trace.checkpoints.back().index <= 100);
}

TEST_CASE("identical seeds reproduce a run bit for bit") {
  GAConfig cfg = small_config();
  cfg.max_fes = 2000;
  cfg.grid = {-5.12, 5.12, 1e-4};
  cfg.seed = 123456789;
  const Problem p = make_problem("rastrigin", 2);

  const RunResult a = run_ga(p, cfg);
  const RunResult b = run_ga(p, cfg);
  CHECK(a.fes_used == b.fes_used);
  CHECK(a.generations == b.generations);
  CHECK(a.final_error == b.final_error);
  CHECK(a.best.genome.bits == b.best.genome.bits);
  CHECK(a.best.phenotype == b.best.phenotype);
  REQUIRE(a.trace.checkpoints.size() == b.trace.checkpoints.size());
  for (std::size_t i = 0; i < a.trace.checkpoints.size(); ++i) {
    CHECK(a.trace.checkpoints[i].fes == b.trace.checkpoints[i].fes);
    CHECK(a.trace.checkpoints[i].error == b.trace.checkpoints[i].error);
  }
}

TEST_CASE("observer sees generation 0 and monotone progress") {
  GAConfig cfg = small_config();
  cfg.max_fes = 1500;
  cfg.grid = {-5.12, 5.12, 1e-4};
  const Problem p = make_problem("rastrigin", 2);

  std::vector<GenerationStats> log;
  const RunResult r = run_ga(p, cfg, [&](const GenerationStats& s) {
    log.push_back(s);
  });

  REQUIRE(!log.empty());
  CHECK(log.front().generation == 0);
  CHECK(log.front().fes_used == 10);  // the initial population
  for (std::size_t i = 0; i < log.size(); ++i) {
    CHECK(log[i].generation == static_cast<int>(i));
    CHECK(log[i].worst_fitness <= log[i].mean_fitness);
    CHECK(log[i].mean_fitness <= log[i].best_fitness);
    if (i > 0) {
      CHECK(log[i].fes_used > log[i - 1].fes_used);
      // Best-so-far error never rises.
      CHECK(log[i].best_error <= log[i - 1].best_error);
      // Elitism keeps the population's best from regressing.
      CHECK(log[i].best_fitness >= log[i - 1].best_fitness);
    }
  }
  CHECK(static_cast<int>(log.size()) == r.generations + 1);
}

TEST_CASE("odd population sizes keep their size through pairing") {
  GAConfig cfg = small_config();
  cfg.population_size = 5;
  cfg.max_fes = 55;
  const RunResult r = run_ga(constant_problem(1.0, 2), cfg);
  // 5 init + 10 full generations of 5 children each.
  CHECK(r.fes_used == 55);
  CHECK(r.generations == 10);
}

TEST_CASE("the engine solves onemax under an unlimited budget with a cap") {
  GAConfig cfg;
  cfg.population_size = 10;
  cfg.selection = SelectionKind::tournament_of(3);
  cfg.crossover = CrossoverKind::uniform;
  cfg.mutation.rate = MutationSpec::Rate::normal;
  cfg.genome = GenomeKind::plain_binary;
  cfg.elitism_fraction = 0.05;
  cfg.max_fes = 0;
  cfg.unlimited_cap = 100000;
  cfg.stop_error = 1e-8;
  cfg.seed = 11;

  const Problem p = make_problem("onemax", 30);
  const RunResult r = run_ga(p, cfg);
  CHECK(r.solved);
  CHECK(r.final_error == 0.0);
  CHECK(r.best.objective == 30.0);
  CHECK(r.fes_used < 100000);
  // Unlimited traces mark blocks of 1000 evaluations.
  for (const auto& cp : r.trace.checkpoints) {
    CHECK(cp.fes >= static_cast<std::uint64_t>(cp.index) * 1000);
  }
}

TEST_CASE("constrained runs track violations and prefer feasible bests") {
  GAConfig cfg;
  cfg.population_size = 10;
  cfg.selection = SelectionKind::ranked();
  cfg.crossover = CrossoverKind::two_point;
  cfg.mutation.rate = MutationSpec::Rate::strong;
  cfg.grid = {-100.0, 100.0, 1e-4};
  cfg.penalty.kind = PenaltySpec::Kind::dynamic;
  cfg.stop_error = 1e-4;
  cfg.max_fes = 2000;
  cfg.seed = 5;

  const Problem p = make_problem("co1", 2);
  const RunResult r = run_ga(p, cfg);
  REQUIRE(r.best.violation.size() == 1);
  // co1's feasible region covers most of the box, so the incumbent ends up
  // feasible and its stored violation must agree.
  CHECK(r.best.feasible);
  CHECK(r.best.total_violation == 0.0);
}

TEST_CASE("a non-finite objective raises an evaluation error") {
  Problem p = constant_problem(1.0, 2);
  p.objective = [](std::span<const double>) {
    return std::numeric_limits<double>::quiet_NaN();
  };
  GAConfig cfg = small_config();
  cfg.max_fes = 100;
  CHECK_THROWS_AS(run_ga(p, cfg), EvaluationError);
}

TEST_CASE("adaptive penalty requires no manual state threading") {
  GAConfig cfg;
  cfg.population_size = 8;
  cfg.selection = SelectionKind::tournament_of(2);
  cfg.crossover = CrossoverKind::one_point;
  cfg.mutation.rate = MutationSpec::Rate::normal;
  cfg.grid = {-100.0, 100.0, 0.01};
  cfg.penalty.kind = PenaltySpec::Kind::adaptive;
  cfg.stop_error = 1e-2;
  cfg.max_fes = 1000;
  cfg.seed = 99;

  const Problem p = make_problem("co1", 2);
  const RunResult r = run_ga(p, cfg);
  CHECK(r.fes_used <= 1000);
  CHECK(r.best.error >= 0.0);
}
