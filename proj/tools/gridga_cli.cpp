// Command-line front end: catalog listing, single GA runs, spec-file
// campaigns and the built-in reproduction campaigns.
//
// Exit codes: 0 on success, 1 for configuration/usage errors, 2 for runtime
// failures (evaluation or I/O).

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridga/engine.hpp"
#include "gridga/errors.hpp"
#include "gridga/harness.hpp"
#include "gridga/problems.hpp"
#include "gridga/rng.hpp"

using namespace gridga;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

// Default output directory: --out beats GRIDGA_OUT beats ./results.
fs::path default_out_dir() {
  if (const char* env = std::getenv("GRIDGA_OUT"); env && *env) {
    return fs::path(env);
  }
  return fs::path("results");
}

struct RunOptions {
  std::string problem;
  int dim = 0;
  std::uint64_t max_fes = 0;
  std::uint64_t unlimited_cap = 0;
  std::uint64_t seed = 1;
  int pop = 0;
  std::string selection;
  std::string crossover;
  double mutation_rate = 0.0;
  bool has_mutation_rate = false;
  double elitism = -1.0;
  std::string genome;
  double grid_lower = 0.0;
  bool has_grid_lower = false;
  double grid_upper = 0.0;
  bool has_grid_upper = false;
  double grid_step = 0.0;
  std::string penalty;
  double stop_error = -1.0;
  std::string out_dir;
  std::string gen_log;
};

// Fills the unset options with per-problem-kind defaults: the constrained
// problem runs the penalty setup, the continuous suite the fine-grid setup,
// and the Boolean suite the small-population bitstring setup.
GAConfig resolve_run_config(const RunOptions& opt, const Problem& problem) {
  GAConfig cfg;
  const bool boolean = problem.repr == Representation::boolean_bits;
  const bool constrained = problem.constrained();

  if (boolean) {
    cfg.population_size = 10;
    cfg.selection = SelectionKind::tournament_of(3);
    cfg.crossover = CrossoverKind::uniform;
    cfg.mutation.rate = MutationSpec::Rate::normal;
    cfg.genome = GenomeKind::plain_binary;
    cfg.stop_error = 1e-8;
  } else if (constrained) {
    cfg.population_size = 25;
    cfg.selection = SelectionKind::ranked();
    cfg.crossover = CrossoverKind::two_point;
    cfg.mutation.rate = MutationSpec::Rate::strong;
    cfg.genome = GenomeKind::gray_binary;
    cfg.grid = {-100.0, 100.0, 1e-4};
    cfg.penalty.kind = PenaltySpec::Kind::dynamic;
    cfg.stop_error = 1e-4;
  } else {
    cfg.population_size = 25;
    cfg.selection = SelectionKind::tournament_of(3);
    cfg.crossover = CrossoverKind::one_point;
    cfg.mutation.rate = MutationSpec::Rate::strong;
    cfg.genome = GenomeKind::gray_binary;
    cfg.grid = {-100.0, 100.0, 1e-8};
    cfg.stop_error = 1e-8;
  }

  cfg.max_fes = opt.max_fes;
  cfg.unlimited_cap = opt.unlimited_cap;
  if (cfg.max_fes == 0 && cfg.unlimited_cap == 0) {
    // Safety net for unlimited runs from the command line.
    cfg.unlimited_cap =
        10000 * static_cast<std::uint64_t>(problem.dimension);
  }
  cfg.seed = opt.seed;

  if (opt.pop > 0) cfg.population_size = opt.pop;
  if (!opt.selection.empty()) cfg.selection = parse_selection(opt.selection);
  if (!opt.crossover.empty()) cfg.crossover = parse_crossover(opt.crossover);
  if (opt.has_mutation_rate) {
    cfg.mutation.rate = MutationSpec::Rate::custom;
    cfg.mutation.custom_rate = opt.mutation_rate;
  }
  if (opt.elitism >= 0.0) cfg.elitism_fraction = opt.elitism;
  if (!opt.genome.empty()) cfg.genome = parse_genome(opt.genome);
  if (opt.has_grid_lower) cfg.grid.lower = opt.grid_lower;
  if (opt.has_grid_upper) cfg.grid.upper = opt.grid_upper;
  if (opt.grid_step > 0.0) cfg.grid.step = opt.grid_step;
  if (!opt.penalty.empty()) cfg.penalty = parse_penalty(opt.penalty);
  if (opt.stop_error >= 0.0) cfg.stop_error = opt.stop_error;
  return cfg;
}

int do_list() {
  std::printf("%-14s %-11s %7s %11s  %s\n", "problem", "kind", "min-dim",
              "constrained", "description");
  for (const ProblemInfo& info : problem_catalog()) {
    std::printf("%-14s %-11s %7d %11s  %s\n", info.id.c_str(),
                info.repr == Representation::continuous ? "continuous"
                                                        : "boolean",
                info.min_dimension, info.constrained ? "yes" : "no",
                info.description.c_str());
  }
  return kExitOk;
}

int do_run(const RunOptions& opt) {
  const Problem problem = make_problem(opt.problem, opt.dim);
  const GAConfig cfg = resolve_run_config(opt, problem);
  validate_config(problem, cfg);

  std::ofstream gen_log;
  GenerationObserver observer;
  if (!opt.gen_log.empty()) {
    gen_log.open(opt.gen_log, std::ios::binary);
    if (!gen_log) throw IoError("cannot write --gen-log file: " + opt.gen_log);
    gen_log << "generation,fes,best_error,best_fitness,mean_fitness,"
               "worst_fitness\n";
    observer = [&gen_log](const GenerationStats& s) {
      gen_log << s.generation << ',' << s.fes_used << ','
              << format_double(s.best_error) << ','
              << format_double(s.best_fitness) << ','
              << format_double(s.mean_fitness) << ','
              << format_double(s.worst_fitness) << '\n';
    };
  }

  const RunResult result = run_ga(problem, cfg, observer);

  std::printf("problem:      %s (D=%d)\n", problem.id.c_str(),
              problem.dimension);
  if (cfg.max_fes != 0) {
    std::printf("budget:       %llu FEs\n",
                static_cast<unsigned long long>(cfg.max_fes));
  } else {
    std::printf("budget:       unlimited (cap %llu FEs)\n",
                static_cast<unsigned long long>(cfg.unlimited_cap));
  }
  std::printf("seed:         %llu\n", static_cast<unsigned long long>(cfg.seed));
  std::printf("solved:       %s\n", result.solved ? "yes" : "no");
  std::printf("final error:  %s\n", format_double(result.final_error).c_str());
  std::printf("best value:   %s\n",
              format_double(result.best.objective).c_str());
  if (problem.constrained()) {
    std::printf("feasible:     %s\n", result.best.feasible ? "yes" : "no");
    std::printf("violation:    %s\n",
                format_double(result.best.total_violation).c_str());
  }
  std::printf("FEs used:     %llu\n",
              static_cast<unsigned long long>(result.fes_used));
  std::printf("generations:  %d\n", result.generations);
  if (!result.best.phenotype.empty()) {
    std::string point = "(";
    for (std::size_t i = 0; i < result.best.phenotype.size(); ++i) {
      if (i > 0) point += ", ";
      point += format_double(result.best.phenotype[i]);
      if (i >= 7 && result.best.phenotype.size() > 8) {
        point += ", ...";
        break;
      }
    }
    point += ")";
    std::printf("best point:   %s\n", point.c_str());
  }

  if (!opt.out_dir.empty()) {
    // Persist the run as a one-cell campaign: summary, trace and manifest.
    ExperimentSpec spec;
    spec.problem = problem.id;
    spec.dims = {problem.dimension};
    spec.budgets = {cfg.max_fes};
    spec.runs = 1;
    spec.base = cfg;
    spec.master_seed = cfg.seed;

    CampaignResult campaign;
    campaign.spec = spec;
    CellResult cell;
    cell.problem = problem.id;
    cell.dim = problem.dimension;
    cell.max_fes = cfg.max_fes;
    RunRecord rec;
    rec.run_index = 1;
    rec.seed = cfg.seed;
    rec.final_error = result.final_error;
    rec.fes_used = result.fes_used;
    rec.generations = result.generations;
    rec.solved = result.solved;
    rec.feasible = result.best.feasible;
    rec.trace = result.trace;
    cell.stats = aggregate(std::vector<double>{result.final_error});
    cell.stats.solved_count = result.solved ? 1 : 0;
    cell.runs.push_back(std::move(rec));
    campaign.cells.push_back(std::move(cell));

    const std::vector<CampaignResult> results = {std::move(campaign)};
    write_outputs(results, opt.out_dir);
    std::printf("outputs:      %s\n", opt.out_dir.c_str());
  }
  return kExitOk;
}

int do_bench(const std::string& spec_path, const std::string& out_dir,
             int jobs) {
  const ExperimentSpec spec = parse_spec_file(spec_path);
  const fs::path dir = out_dir.empty() ? default_out_dir() : fs::path(out_dir);
  prepare_output_dir(dir);  // fail fast, before hours of runs

  const std::vector<CampaignResult> results = {run_experiment(spec, jobs)};
  write_outputs(results, dir);

  for (const CellResult& cell : results.front().cells) {
    std::printf("%s D%d fes=%llu: mean %s, median %s, solved %d/%d\n",
                cell.problem.c_str(), cell.dim,
                static_cast<unsigned long long>(cell.max_fes),
                format_double(cell.stats.mean).c_str(),
                format_double(cell.stats.median).c_str(),
                cell.stats.solved_count, cell.stats.count + cell.failed);
  }
  std::printf("outputs: %s\n", dir.string().c_str());
  return kExitOk;
}

int do_repro(const std::string& table, int scale, const std::string& out_dir,
             int jobs) {
  const std::vector<ExperimentSpec> specs = repro_specs(table, scale);
  const fs::path dir = out_dir.empty() ? default_out_dir() : fs::path(out_dir);
  prepare_output_dir(dir);

  std::vector<CampaignResult> results;
  results.reserve(specs.size());
  for (const ExperimentSpec& spec : specs) {
    std::printf("running %s: %d dims x %zu budgets x %d runs\n",
                spec.problem.c_str(), static_cast<int>(spec.dims.size()),
                spec.budgets.empty() ? std::size_t{1} : spec.budgets.size(),
                spec.runs);
    std::fflush(stdout);
    results.push_back(run_experiment(spec, jobs));
  }
  write_outputs(results, dir);
  std::printf("outputs: %s\n", dir.string().c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gray-coded grid GA: benchmark runs and experiment campaigns"};
  app.require_subcommand(1);

  CLI::App* list_cmd = app.add_subcommand("list", "list the problem catalog");
  (void)list_cmd;

  RunOptions run_opt;
  CLI::App* run_cmd = app.add_subcommand("run", "one GA run");
  run_cmd->add_option("--problem", run_opt.problem, "problem id (see list)")
      ->required();
  run_cmd->add_option("--dim", run_opt.dim, "dimension / bitstring length")
      ->required()
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--max-fes", run_opt.max_fes,
                      "evaluation budget; 0 = run until solved");
  run_cmd->add_option("--unlimited-cap", run_opt.unlimited_cap,
                      "safety cap for --max-fes 0 (default 10000*D)");
  run_cmd->add_option("--seed", run_opt.seed, "run seed (default 1)");
  run_cmd->add_option("--pop", run_opt.pop, "population size")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--selection", run_opt.selection,
                      "tournament[:k] | ranked | roulette");
  run_cmd->add_option("--crossover", run_opt.crossover,
                      "one_point | two_point | uniform");
  run_cmd->add_option("--mutation-rate", run_opt.mutation_rate,
                      "per-bit flip probability (default: rule-based)");
  run_cmd->add_option("--elitism", run_opt.elitism,
                      "elite fraction in [0, 1)");
  run_cmd->add_option("--genome", run_opt.genome, "gray | binary");
  run_cmd->add_option("--grid-lower", run_opt.grid_lower, "grid lower bound");
  run_cmd->add_option("--grid-upper", run_opt.grid_upper, "grid upper bound");
  run_cmd->add_option("--grid-step", run_opt.grid_step, "grid step size");
  run_cmd->add_option("--penalty", run_opt.penalty,
                      "none | static[:w] | dynamic[:c,a,b] | adaptive[:...]");
  run_cmd->add_option("--stop-error", run_opt.stop_error,
                      "error threshold that counts as solved");
  run_cmd->add_option("--out", run_opt.out_dir,
                      "write summary/trace/manifest to this directory");
  run_cmd->add_option("--gen-log", run_opt.gen_log,
                      "write per-generation fitness CSV to this file");

  std::string bench_spec, bench_out;
  int bench_jobs = 1;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "run a campaign from a spec file");
  bench_cmd->add_option("--spec", bench_spec, "key = value experiment file")
      ->required()
      ->check(CLI::ExistingFile);
  bench_cmd->add_option("--out", bench_out,
                        "output directory (default $GRIDGA_OUT or ./results)");
  bench_cmd->add_option("--jobs", bench_jobs, "parallel runs (default 1)")
      ->check(CLI::PositiveNumber);

  std::string repro_table, repro_out;
  int repro_scale = 1, repro_jobs = 1;
  CLI::App* repro_cmd =
      app.add_subcommand("repro", "run a built-in reproduction campaign");
  repro_cmd
      ->add_option("table", repro_table, "table1 | table4 | table5")
      ->required();
  repro_cmd->add_option("--scale", repro_scale,
                        "divide run counts and drop large dimensions")
      ->check(CLI::PositiveNumber);
  repro_cmd->add_option("--out", repro_out,
                        "output directory (default $GRIDGA_OUT or ./results)");
  repro_cmd->add_option("--jobs", repro_jobs, "parallel runs (default 1)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0 via CLI11; real parse errors map to config errors.
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  run_opt.has_mutation_rate = run_cmd->count("--mutation-rate") > 0;
  run_opt.has_grid_lower = run_cmd->count("--grid-lower") > 0;
  run_opt.has_grid_upper = run_cmd->count("--grid-upper") > 0;

  try {
    if (app.got_subcommand("list")) return do_list();
    if (app.got_subcommand("run")) return do_run(run_opt);
    if (app.got_subcommand("bench")) {
      return do_bench(bench_spec, bench_out, bench_jobs);
    }
    if (app.got_subcommand("repro")) {
      return do_repro(repro_table, repro_scale, repro_out, repro_jobs);
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitConfig;
}
