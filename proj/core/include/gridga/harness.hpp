#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridga/engine.hpp"

namespace gridga {

// A campaign: `runs` independent GA runs for every (dimension, budget) cell
// of one problem. Budgets may be absolute, the per-dimension rule
// budget = budget_per_dim_factor * D, or 0 for unlimited.
struct ExperimentSpec {
  std::string problem;
  std::vector<int> dims;
  std::vector<std::uint64_t> budgets;      // absolute; 0 = unlimited
  std::uint64_t budget_per_dim_factor = 0; // when nonzero, replaces `budgets`
  int runs = 1;
  GAConfig base;                 // per-run seed is overwritten; see derive_seed
  std::uint64_t master_seed = 1;
  std::string shift_file;        // optional, co1 only

  // Safety cap for unlimited cells, as a multiple of the dimension. A run
  // that has not solved after cap_factor * D evaluations is recorded with
  // its best-so-far state instead of looping forever. 0 disables the cap.
  std::uint64_t unlimited_cap_factor = 10000;
};

struct RunRecord {
  int run_index = 0;             // 1-based
  std::uint64_t seed = 0;
  double final_error = kInfError;
  std::uint64_t fes_used = 0;
  int generations = 0;
  bool solved = false;
  bool feasible = false;
  bool failed = false;           // evaluation error; excluded from stats
  std::string fail_reason;
  RunTrace trace;
};

struct SummaryStats {
  double best = 0.0;    // min of the aggregated values
  double worst = 0.0;   // max
  double mean = 0.0;
  double median = 0.0;  // mean of the middle two for even counts
  double stddev = 0.0;  // sample standard deviation (N - 1); 0 for N = 1
  int count = 0;

  int solved_count = 0;
  // FEs-to-solve statistics over the solved runs; meaningful when
  // solved_count > 0 (the Boolean campaigns report these).
  std::uint64_t fes_min = 0;
  std::uint64_t fes_max = 0;
  double fes_mean = 0.0;
  double fes_median = 0.0;
  double fes_std = 0.0;
};

// Value statistics over per-run final values. Throws ConfigError on empty
// input. solved_count and the FEs block are left zero; run_experiment fills
// them from the run records.
SummaryStats aggregate(std::span<const double> final_values);

// One (problem, dimension, budget) cell with its per-run records, sorted by
// run_index, and the aggregate over non-failed runs.
struct CellResult {
  std::string problem;
  int dim = 0;
  std::uint64_t max_fes = 0;     // 0 = unlimited
  std::vector<RunRecord> runs;
  SummaryStats stats;
  int failed = 0;
};

struct CampaignResult {
  ExperimentSpec spec;
  std::vector<CellResult> cells;
};

// Executes every run of the campaign, up to `jobs` concurrently. Each run is
// seeded by derive_seed(master_seed, problem, dim, budget, run_index), so
// results are a pure function of the spec: any jobs value yields the same
// bytes. A run that throws an evaluation error is recorded as failed; the
// campaign continues.
CampaignResult run_experiment(const ExperimentSpec& spec, int jobs = 1);

// Creates dir (and dir/traces) and probes writability. Throws IoError so
// campaigns fail before any run starts rather than after hours of work.
void prepare_output_dir(const std::filesystem::path& dir);

// Writes summary.csv, traces/<problem>_<dim>_<budget>_run<k>.csv, a
// manifest.json with the fully-resolved spec including every per-run seed,
// and fes_summary.csv when any cell ran without a budget. Reals are
// serialized in shortest round-trip form so identical results are identical
// bytes.
void write_outputs(std::span<const CampaignResult> results,
                   const std::filesystem::path& dir);

// key = value experiment files; '#' starts a comment. See the README for the
// schema. parse_spec_text is the same parser on an in-memory string.
ExperimentSpec parse_spec_file(const std::filesystem::path& path);
ExperimentSpec parse_spec_text(std::string_view text);

// Built-in campaign sets: "table1" (co1 across dims and budgets), "table4"
// (the 14 continuous functions at D10), "table5" (the Boolean suite,
// unlimited budget). scale >= 1 divides run counts (floor, minimum 5) and
// drops the dimensions that make full campaigns hours-long: above 30 for
// continuous problems, above 200 for Boolean ones.
std::vector<ExperimentSpec> repro_specs(std::string_view name, int scale = 1);

// Shortest round-trip decimal form, identical across platforms ("0.25",
// "1e-08", "inf"). Used for every real written to CSV or JSON output.
std::string format_double(double value);

// Configuration-schema names used by spec files, the manifest, and the CLI:
// selection "tournament:3" / "ranked" / "roulette"; crossover "one_point" /
// "two_point" / "uniform" / "order"; mutation "normal" / "strong" / a literal
// rate; penalty "none" / "static:<w>" / "dynamic[:<c>,<alpha>,<beta>]" /
// "adaptive[:<lambda0>,<shrink>,<grow>,<window>]"; genome "gray" / "binary" /
// "permutation". Parsers throw ConfigError on unknown names.
std::string selection_name(const SelectionKind& kind);
SelectionKind parse_selection(std::string_view text);
std::string crossover_name(CrossoverKind kind);
CrossoverKind parse_crossover(std::string_view text);
std::string mutation_name(const MutationSpec& spec);
MutationSpec parse_mutation(std::string_view text);
std::string penalty_name(const PenaltySpec& spec);
PenaltySpec parse_penalty(std::string_view text);
std::string genome_name(GenomeKind kind);
GenomeKind parse_genome(std::string_view text);

}  // namespace gridga
