#include "gridga/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gridga/errors.hpp"

namespace gridga {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

// ----------------------------------------------------------------------------
// Formatting and schema names
// ----------------------------------------------------------------------------

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string selection_name(const SelectionKind& kind) {
  switch (kind.method) {
    case SelectionKind::Method::tournament:
      return "tournament:" + std::to_string(kind.tournament_size);
    case SelectionKind::Method::ranked:
      return "ranked";
    case SelectionKind::Method::roulette:
      return "roulette";
  }
  return "?";
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      return parts;
    }
    parts.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

double parse_real(const std::string& token, const std::string& what) {
  const std::string t = trim(token);
  double v = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
    throw ConfigError(what + ": not a real number: '" + t + "'");
  }
  return v;
}

std::int64_t parse_int(const std::string& token, const std::string& what) {
  const std::string t = trim(token);
  std::int64_t v = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
    throw ConfigError(what + ": not an integer: '" + t + "'");
  }
  return v;
}

}  // namespace

SelectionKind parse_selection(std::string_view text) {
  const std::string t = trim(text);
  if (t == "ranked") return SelectionKind::ranked();
  if (t == "roulette") return SelectionKind::roulette();
  if (t == "tournament") return SelectionKind::tournament_of(3);
  if (t.rfind("tournament:", 0) == 0) {
    const auto size = parse_int(t.substr(11), "tournament size");
    if (size < 2) throw ConfigError("tournament size must be >= 2");
    return SelectionKind::tournament_of(static_cast<int>(size));
  }
  throw ConfigError("unknown selection: '" + t + "'");
}

std::string crossover_name(CrossoverKind kind) {
  switch (kind) {
    case CrossoverKind::one_point:
      return "one_point";
    case CrossoverKind::two_point:
      return "two_point";
    case CrossoverKind::uniform:
      return "uniform";
    case CrossoverKind::order:
      return "order";
  }
  return "?";
}

CrossoverKind parse_crossover(std::string_view text) {
  const std::string t = trim(text);
  if (t == "one_point") return CrossoverKind::one_point;
  if (t == "two_point") return CrossoverKind::two_point;
  if (t == "uniform") return CrossoverKind::uniform;
  if (t == "order") return CrossoverKind::order;
  throw ConfigError("unknown crossover: '" + t + "'");
}

std::string mutation_name(const MutationSpec& spec) {
  switch (spec.rate) {
    case MutationSpec::Rate::normal:
      return "normal";
    case MutationSpec::Rate::strong:
      return "strong";
    case MutationSpec::Rate::custom:
      return format_double(spec.custom_rate);
  }
  return "?";
}

MutationSpec parse_mutation(std::string_view text) {
  const std::string t = trim(text);
  MutationSpec spec;
  spec.kind = MutationKind::bitflip;
  if (t == "normal") {
    spec.rate = MutationSpec::Rate::normal;
    return spec;
  }
  if (t == "strong") {
    spec.rate = MutationSpec::Rate::strong;
    return spec;
  }
  spec.rate = MutationSpec::Rate::custom;
  spec.custom_rate = parse_real(t, "mutation rate");
  if (!(spec.custom_rate > 0.0) || spec.custom_rate > 1.0) {
    throw ConfigError("mutation rate must lie in (0, 1]");
  }
  return spec;
}

std::string penalty_name(const PenaltySpec& spec) {
  switch (spec.kind) {
    case PenaltySpec::Kind::none:
      return "none";
    case PenaltySpec::Kind::static_weight:
      return "static:" + format_double(spec.weight);
    case PenaltySpec::Kind::dynamic:
      return "dynamic:" + format_double(spec.c) + "," +
             format_double(spec.alpha) + "," + format_double(spec.beta);
    case PenaltySpec::Kind::adaptive:
      return "adaptive:" + format_double(spec.lambda0) + "," +
             format_double(spec.shrink) + "," + format_double(spec.grow) + "," +
             std::to_string(spec.window);
  }
  return "?";
}

PenaltySpec parse_penalty(std::string_view text) {
  const std::string t = trim(text);
  PenaltySpec spec;
  if (t == "none") {
    spec.kind = PenaltySpec::Kind::none;
    return spec;
  }
  const auto colon = t.find(':');
  const std::string head = colon == std::string::npos ? t : t.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : t.substr(colon + 1);

  if (head == "static") {
    spec.kind = PenaltySpec::Kind::static_weight;
    if (!args.empty()) spec.weight = parse_real(args, "static penalty weight");
  } else if (head == "dynamic") {
    spec.kind = PenaltySpec::Kind::dynamic;
    if (!args.empty()) {
      const auto parts = split(args, ',');
      if (parts.size() != 3) {
        throw ConfigError("dynamic penalty takes c,alpha,beta");
      }
      spec.c = parse_real(parts[0], "dynamic penalty c");
      spec.alpha = parse_real(parts[1], "dynamic penalty alpha");
      spec.beta = parse_real(parts[2], "dynamic penalty beta");
    }
  } else if (head == "adaptive") {
    spec.kind = PenaltySpec::Kind::adaptive;
    if (!args.empty()) {
      const auto parts = split(args, ',');
      if (parts.size() != 4) {
        throw ConfigError("adaptive penalty takes lambda0,shrink,grow,window");
      }
      spec.lambda0 = parse_real(parts[0], "adaptive penalty lambda0");
      spec.shrink = parse_real(parts[1], "adaptive penalty shrink");
      spec.grow = parse_real(parts[2], "adaptive penalty grow");
      spec.window =
          static_cast<int>(parse_int(parts[3], "adaptive penalty window"));
    }
  } else {
    throw ConfigError("unknown penalty: '" + t + "'");
  }
  spec.validate();
  return spec;
}

std::string genome_name(GenomeKind kind) {
  switch (kind) {
    case GenomeKind::gray_binary:
      return "gray";
    case GenomeKind::plain_binary:
      return "binary";
    case GenomeKind::permutation:
      return "permutation";
  }
  return "?";
}

GenomeKind parse_genome(std::string_view text) {
  const std::string t = trim(text);
  if (t == "gray") return GenomeKind::gray_binary;
  if (t == "binary") return GenomeKind::plain_binary;
  if (t == "permutation") return GenomeKind::permutation;
  throw ConfigError("unknown genome kind: '" + t + "'");
}

// ----------------------------------------------------------------------------
// Aggregation
// ----------------------------------------------------------------------------

SummaryStats aggregate(std::span<const double> final_values) {
  if (final_values.empty()) {
    throw ConfigError("aggregate: empty input");
  }
  SummaryStats s;
  s.count = static_cast<int>(final_values.size());

  std::vector<double> sorted(final_values.begin(), final_values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  s.best = sorted.front();
  s.worst = sorted.back();
  s.median = n % 2 == 1 ? sorted[n / 2]
                        : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

  double total = 0.0;
  for (double v : sorted) total += v;
  s.mean = total / static_cast<double>(n);

  if (n > 1) {
    double ss = 0.0;
    for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return s;
}

namespace {

// FEs-to-solve statistics over solved runs, folded into an existing summary.
void fill_fes_stats(SummaryStats& stats, std::vector<std::uint64_t> fes) {
  if (fes.empty()) return;
  std::sort(fes.begin(), fes.end());
  const std::size_t n = fes.size();
  stats.fes_min = fes.front();
  stats.fes_max = fes.back();
  stats.fes_median =
      n % 2 == 1 ? static_cast<double>(fes[n / 2])
                 : 0.5 * (static_cast<double>(fes[n / 2 - 1]) +
                          static_cast<double>(fes[n / 2]));
  double total = 0.0;
  for (std::uint64_t f : fes) total += static_cast<double>(f);
  stats.fes_mean = total / static_cast<double>(n);
  if (n > 1) {
    double ss = 0.0;
    for (std::uint64_t f : fes) {
      const double d = static_cast<double>(f) - stats.fes_mean;
      ss += d * d;
    }
    stats.fes_std = std::sqrt(ss / static_cast<double>(n - 1));
  }
}

}  // namespace

// ----------------------------------------------------------------------------
// Campaign execution
// ----------------------------------------------------------------------------

namespace {

std::vector<std::uint64_t> budgets_for_dim(const ExperimentSpec& spec,
                                           int dim) {
  if (spec.budget_per_dim_factor != 0) {
    return {spec.budget_per_dim_factor * static_cast<std::uint64_t>(dim)};
  }
  if (spec.budgets.empty()) {
    throw ConfigError("experiment: no budgets given "
                      "(use budgets=..., a *D rule, or 0 for unlimited)");
  }
  return spec.budgets;
}

GAConfig cell_config(const ExperimentSpec& spec, int dim,
                     std::uint64_t budget) {
  GAConfig cfg = spec.base;
  cfg.max_fes = budget;
  if (budget == 0 && cfg.unlimited_cap == 0 &&
      spec.unlimited_cap_factor != 0) {
    cfg.unlimited_cap =
        spec.unlimited_cap_factor * static_cast<std::uint64_t>(dim);
  }
  return cfg;
}

Problem cell_problem(const ExperimentSpec& spec, int dim) {
  if (spec.problem == "co1" && !spec.shift_file.empty()) {
    return make_co1(dim, load_shift_file(spec.shift_file, dim));
  }
  return make_problem(spec.problem, dim);
}

}  // namespace

CampaignResult run_experiment(const ExperimentSpec& spec, int jobs) {
  if (spec.runs < 1) throw ConfigError("experiment: runs must be >= 1");
  if (spec.dims.empty()) throw ConfigError("experiment: no dimensions given");
  if (jobs < 1) jobs = 1;

  CampaignResult out;
  out.spec = spec;

  // Resolve every cell up front so configuration errors abort before any
  // run starts.
  std::vector<Problem> problems;
  std::vector<GAConfig> configs;
  for (int dim : spec.dims) {
    for (std::uint64_t budget : budgets_for_dim(spec, dim)) {
      Problem problem = cell_problem(spec, dim);
      GAConfig cfg = cell_config(spec, dim, budget);
      validate_config(problem, cfg);

      CellResult cell;
      cell.problem = problem.id;
      cell.dim = dim;
      cell.max_fes = budget;
      cell.runs.resize(static_cast<std::size_t>(spec.runs));
      out.cells.push_back(std::move(cell));
      problems.push_back(std::move(problem));
      configs.push_back(cfg);
    }
  }

  struct Task {
    std::size_t cell;
    int run_index;  // 1-based
  };
  std::vector<Task> tasks;
  tasks.reserve(out.cells.size() * static_cast<std::size_t>(spec.runs));
  for (std::size_t c = 0; c < out.cells.size(); ++c) {
    for (int r = 1; r <= spec.runs; ++r) tasks.push_back({c, r});
  }

  std::atomic<std::size_t> cursor{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  const auto worker = [&] {
    while (true) {
      const std::size_t t = cursor.fetch_add(1);
      if (t >= tasks.size()) return;
      {
        std::scoped_lock lock(error_mutex);
        if (first_error) return;
      }
      const Task task = tasks[t];
      CellResult& cell = out.cells[task.cell];

      GAConfig cfg = configs[task.cell];
      cfg.seed = derive_seed(spec.master_seed, cell.problem,
                             static_cast<std::uint64_t>(cell.dim),
                             cell.max_fes,
                             static_cast<std::uint64_t>(task.run_index));

      RunRecord rec;
      rec.run_index = task.run_index;
      rec.seed = cfg.seed;
      try {
        RunResult run = run_ga(problems[task.cell], cfg);
        rec.final_error = run.final_error;
        rec.fes_used = run.fes_used;
        rec.generations = run.generations;
        rec.solved = run.solved;
        rec.feasible = run.best.feasible;
        rec.trace = std::move(run.trace);
      } catch (const EvaluationError& e) {
        rec.failed = true;
        rec.fail_reason = e.what();
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
      cell.runs[static_cast<std::size_t>(task.run_index - 1)] = std::move(rec);
    }
  };

  const std::size_t thread_count =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size());
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (std::size_t i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  for (CellResult& cell : out.cells) {
    std::vector<double> values;
    std::vector<std::uint64_t> solved_fes;
    for (const RunRecord& rec : cell.runs) {
      if (rec.failed) {
        ++cell.failed;
        continue;
      }
      values.push_back(rec.final_error);
      if (rec.solved) {
        ++cell.stats.solved_count;
        solved_fes.push_back(rec.fes_used);
      }
    }
    if (!values.empty()) {
      const int solved = cell.stats.solved_count;
      cell.stats = aggregate(values);
      cell.stats.solved_count = solved;
      fill_fes_stats(cell.stats, std::move(solved_fes));
    }
  }
  return out;
}

// ----------------------------------------------------------------------------
// Output emission
// ----------------------------------------------------------------------------

void prepare_output_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir / "traces", ec);
  if (ec) {
    throw IoError("cannot create output directory " + dir.string() + ": " +
                  ec.message());
  }
  const fs::path probe = dir / ".write_probe";
  {
    std::ofstream f(probe);
    if (!f) throw IoError("output directory not writable: " + dir.string());
  }
  fs::remove(probe, ec);
}

namespace {

// Percent (or 1000-FEs block) index for a terminal trace row.
int terminal_index(const RunRecord& rec, std::uint64_t max_fes) {
  if (max_fes != 0) {
    const auto pct = static_cast<unsigned __int128>(rec.fes_used) * 100 / max_fes;
    return static_cast<int>(std::min<std::uint64_t>(
        100, static_cast<std::uint64_t>(pct)));
  }
  return static_cast<int>(rec.fes_used / 1000);
}

void write_trace(const fs::path& path, const RunRecord& rec,
                 std::uint64_t max_fes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write trace file: " + path.string());
  f << "checkpoint_pct,fes,error\n";
  for (const TraceCheckpoint& cp : rec.trace.checkpoints) {
    f << cp.index << ',' << cp.fes << ',' << format_double(cp.error) << '\n';
  }
  // Terminal record: where the run actually stopped, unless a checkpoint
  // already landed on that exact evaluation.
  if (!rec.failed &&
      (rec.trace.checkpoints.empty() ||
       rec.trace.checkpoints.back().fes != rec.fes_used)) {
    f << terminal_index(rec, max_fes) << ',' << rec.fes_used << ','
      << format_double(rec.final_error) << '\n';
  }
}

ordered_json config_json(const GAConfig& cfg) {
  ordered_json j;
  j["population"] = cfg.population_size;
  j["selection"] = selection_name(cfg.selection);
  j["crossover"] = crossover_name(cfg.crossover);
  j["mutation"] = mutation_name(cfg.mutation);
  j["elitism_fraction"] = cfg.elitism_fraction;
  j["elitism_random_transfer"] = cfg.elitism_random_transfer;
  j["genome"] = genome_name(cfg.genome);
  j["grid"] = {{"lower", cfg.grid.lower},
               {"upper", cfg.grid.upper},
               {"step", cfg.grid.step}};
  j["penalty"] = penalty_name(cfg.penalty);
  j["stop_error"] = cfg.stop_error;
  return j;
}

ordered_json stats_json(const SummaryStats& s) {
  ordered_json j;
  j["count"] = s.count;
  j["best"] = s.best;
  j["worst"] = s.worst;
  j["mean"] = s.mean;
  j["median"] = s.median;
  j["std"] = s.stddev;
  j["solved"] = s.solved_count;
  if (s.solved_count > 0) {
    j["fes_min"] = s.fes_min;
    j["fes_max"] = s.fes_max;
    j["fes_mean"] = s.fes_mean;
    j["fes_median"] = s.fes_median;
    j["fes_std"] = s.fes_std;
  }
  return j;
}

}  // namespace

void write_outputs(std::span<const CampaignResult> results,
                   const fs::path& dir) {
  if (results.empty()) throw ConfigError("write_outputs: no results");
  prepare_output_dir(dir);

  std::ofstream summary(dir / "summary.csv", std::ios::binary);
  if (!summary) throw IoError("cannot write summary.csv");
  summary << "problem,dimension,max_fes,runs,best,worst,mean,median,std,"
             "solved\n";

  bool any_unlimited = false;
  for (const CampaignResult& campaign : results) {
    for (const CellResult& cell : campaign.cells) {
      any_unlimited |= cell.max_fes == 0;
      summary << cell.problem << ',' << cell.dim << ',' << cell.max_fes << ','
              << cell.stats.count << ',' << format_double(cell.stats.best)
              << ',' << format_double(cell.stats.worst) << ','
              << format_double(cell.stats.mean) << ','
              << format_double(cell.stats.median) << ','
              << format_double(cell.stats.stddev) << ','
              << cell.stats.solved_count << '\n';

      for (const RunRecord& rec : cell.runs) {
        const std::string name = cell.problem + "_" +
                                 std::to_string(cell.dim) + "_" +
                                 std::to_string(cell.max_fes) + "_run" +
                                 std::to_string(rec.run_index) + ".csv";
        write_trace(dir / "traces" / name, rec, cell.max_fes);
      }
    }
  }
  summary.close();

  if (any_unlimited) {
    std::ofstream fes(dir / "fes_summary.csv", std::ios::binary);
    if (!fes) throw IoError("cannot write fes_summary.csv");
    fes << "problem,dimension,max_fes,runs,solved,fes_min,fes_max,fes_mean,"
           "fes_median,fes_std\n";
    for (const CampaignResult& campaign : results) {
      for (const CellResult& cell : campaign.cells) {
        if (cell.max_fes != 0) continue;
        fes << cell.problem << ',' << cell.dim << ',' << cell.max_fes << ','
            << cell.stats.count << ',' << cell.stats.solved_count << ','
            << cell.stats.fes_min << ',' << cell.stats.fes_max << ','
            << format_double(cell.stats.fes_mean) << ','
            << format_double(cell.stats.fes_median) << ','
            << format_double(cell.stats.fes_std) << '\n';
      }
    }
  }

  ordered_json manifest = ordered_json::array();
  for (const CampaignResult& campaign : results) {
    const ExperimentSpec& spec = campaign.spec;
    ordered_json c;
    c["problem"] = spec.problem;
    c["runs"] = spec.runs;
    c["master_seed"] = spec.master_seed;
    c["config"] = config_json(spec.base);
    if (!spec.shift_file.empty()) c["shift_file"] = spec.shift_file;
    if (spec.budget_per_dim_factor != 0) {
      c["budget_per_dim_factor"] = spec.budget_per_dim_factor;
    }
    c["unlimited_cap_factor"] = spec.unlimited_cap_factor;

    ordered_json cells = ordered_json::array();
    for (const CellResult& cell : campaign.cells) {
      ordered_json jc;
      jc["dimension"] = cell.dim;
      jc["max_fes"] = cell.max_fes;
      jc["failed"] = cell.failed;
      jc["stats"] = stats_json(cell.stats);
      ordered_json runs = ordered_json::array();
      for (const RunRecord& rec : cell.runs) {
        ordered_json jr;
        jr["run"] = rec.run_index;
        jr["seed"] = rec.seed;
        if (rec.failed) {
          jr["failed"] = true;
          jr["reason"] = rec.fail_reason;
        } else {
          jr["fes"] = rec.fes_used;
          jr["final_error"] = rec.final_error;
          jr["solved"] = rec.solved;
          jr["feasible"] = rec.feasible;
        }
        runs.push_back(std::move(jr));
      }
      jc["runs"] = std::move(runs);
      cells.push_back(std::move(jc));
    }
    c["cells"] = std::move(cells);
    manifest.push_back(std::move(c));
  }

  std::ofstream mf(dir / "manifest.json", std::ios::binary);
  if (!mf) throw IoError("cannot write manifest.json");
  mf << manifest.dump(2) << '\n';
}

// ----------------------------------------------------------------------------
// Spec files
// ----------------------------------------------------------------------------

ExperimentSpec parse_spec_text(std::string_view text) {
  ExperimentSpec spec;
  bool have_problem = false, have_dims = false;

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;

    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("spec line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    const std::string where = "spec line " + std::to_string(line_no);

    if (key == "problem") {
      spec.problem = value;
      have_problem = true;
    } else if (key == "dims") {
      spec.dims.clear();
      for (const auto& part : split(value, ',')) {
        const auto d = parse_int(part, where + " (dims)");
        if (d < 1) throw ConfigError(where + ": dimensions must be >= 1");
        spec.dims.push_back(static_cast<int>(d));
      }
      have_dims = !spec.dims.empty();
    } else if (key == "budgets") {
      spec.budgets.clear();
      spec.budget_per_dim_factor = 0;
      for (const auto& raw : split(value, ',')) {
        const std::string tok = trim(raw);
        if (tok == "unlimited") {
          spec.budgets.push_back(0);
        } else if (tok.size() > 2 && tok.substr(tok.size() - 2) == "*D") {
          const auto f = parse_int(tok.substr(0, tok.size() - 2),
                                   where + " (budget factor)");
          if (f < 1) throw ConfigError(where + ": budget factor must be >= 1");
          spec.budget_per_dim_factor = static_cast<std::uint64_t>(f);
        } else {
          const auto b = parse_int(tok, where + " (budget)");
          if (b < 0) throw ConfigError(where + ": budgets must be >= 0");
          spec.budgets.push_back(static_cast<std::uint64_t>(b));
        }
      }
      if (spec.budget_per_dim_factor != 0 && !spec.budgets.empty()) {
        throw ConfigError(where +
                          ": a *D budget rule cannot mix with absolute budgets");
      }
    } else if (key == "runs") {
      spec.runs = static_cast<int>(parse_int(value, where));
    } else if (key == "pop") {
      spec.base.population_size = static_cast<int>(parse_int(value, where));
    } else if (key == "selection") {
      spec.base.selection = parse_selection(value);
    } else if (key == "crossover") {
      spec.base.crossover = parse_crossover(value);
    } else if (key == "mutation") {
      spec.base.mutation = parse_mutation(value);
    } else if (key == "elitism") {
      spec.base.elitism_fraction = parse_real(value, where);
    } else if (key == "elitism_random") {
      if (value == "true") {
        spec.base.elitism_random_transfer = true;
      } else if (value == "false") {
        spec.base.elitism_random_transfer = false;
      } else {
        throw ConfigError(where + ": elitism_random must be true or false");
      }
    } else if (key == "genome") {
      spec.base.genome = parse_genome(value);
    } else if (key == "grid_lower") {
      spec.base.grid.lower = parse_real(value, where);
    } else if (key == "grid_upper") {
      spec.base.grid.upper = parse_real(value, where);
    } else if (key == "grid_step") {
      spec.base.grid.step = parse_real(value, where);
    } else if (key == "penalty") {
      spec.base.penalty = parse_penalty(value);
    } else if (key == "stop_error") {
      spec.base.stop_error = parse_real(value, where);
    } else if (key == "seed") {
      const auto s = parse_int(value, where);
      if (s < 0) throw ConfigError(where + ": seed must be >= 0");
      spec.master_seed = static_cast<std::uint64_t>(s);
    } else if (key == "shift_file") {
      spec.shift_file = value;
    } else if (key == "unlimited_cap_factor") {
      const auto f = parse_int(value, where);
      if (f < 0) throw ConfigError(where + ": cap factor must be >= 0");
      spec.unlimited_cap_factor = static_cast<std::uint64_t>(f);
    } else {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }

  if (!have_problem) throw ConfigError("spec: missing 'problem'");
  if (!have_dims) throw ConfigError("spec: missing 'dims'");
  if (spec.budgets.empty() && spec.budget_per_dim_factor == 0) {
    throw ConfigError("spec: missing 'budgets'");
  }
  if (spec.runs < 1) throw ConfigError("spec: runs must be >= 1");
  return spec;
}

ExperimentSpec parse_spec_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open spec file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str());
}

// ----------------------------------------------------------------------------
// Built-in reproduction campaigns
// ----------------------------------------------------------------------------

namespace {

int scaled_runs(int full, int scale) {
  if (scale <= 1) return full;
  return std::max(5, full / scale);
}

std::vector<int> capped_dims(std::vector<int> dims, int scale, int cap) {
  if (scale <= 1) return dims;
  std::vector<int> kept;
  for (int d : dims) {
    if (d <= cap) kept.push_back(d);
  }
  return kept;
}

constexpr std::uint64_t kReproSeed = 2024;

}  // namespace

std::vector<ExperimentSpec> repro_specs(std::string_view name, int scale) {
  if (scale < 1) throw ConfigError("repro: scale must be >= 1");
  std::vector<ExperimentSpec> specs;

  if (name == "table1") {
    ExperimentSpec spec;
    spec.problem = "co1";
    spec.dims = capped_dims({10, 30, 50, 100}, scale, 30);
    spec.budgets = {20000, 100000, 200000};
    spec.runs = scaled_runs(30, scale);
    spec.master_seed = kReproSeed;
    spec.base.population_size = 25;
    spec.base.selection = SelectionKind::ranked();
    spec.base.crossover = CrossoverKind::two_point;
    spec.base.mutation.rate = MutationSpec::Rate::strong;
    spec.base.elitism_fraction = 0.05;
    spec.base.genome = GenomeKind::gray_binary;
    spec.base.grid = {-100.0, 100.0, 1e-4};
    spec.base.penalty.kind = PenaltySpec::Kind::dynamic;
    spec.base.stop_error = 1e-4;
    specs.push_back(std::move(spec));
    return specs;
  }

  if (name == "table4") {
    for (const ProblemInfo& info : problem_catalog()) {
      if (info.repr != Representation::continuous || info.constrained) continue;
      ExperimentSpec spec;
      spec.problem = info.id;
      spec.dims = {10};
      spec.budget_per_dim_factor = 10000;
      spec.runs = scaled_runs(51, scale);
      spec.master_seed = kReproSeed;
      spec.base.population_size = 25;
      spec.base.selection = SelectionKind::tournament_of(3);
      spec.base.crossover = CrossoverKind::one_point;
      spec.base.mutation.rate = MutationSpec::Rate::strong;
      spec.base.elitism_fraction = 0.05;
      spec.base.genome = GenomeKind::gray_binary;
      spec.base.grid = {-100.0, 100.0, 1e-8};
      spec.base.penalty.kind = PenaltySpec::Kind::none;
      spec.base.stop_error = 1e-8;
      specs.push_back(std::move(spec));
    }
    return specs;
  }

  if (name == "table5") {
    for (const char* problem : {"onemax", "leadingones", "trap"}) {
      ExperimentSpec spec;
      spec.problem = problem;
      spec.dims = capped_dims({50, 100, 200, 500, 1000}, scale, 200);
      spec.budgets = {0};
      spec.runs = scaled_runs(51, scale);
      spec.master_seed = kReproSeed;
      spec.base.population_size = 10;
      spec.base.selection = SelectionKind::tournament_of(3);
      spec.base.crossover = CrossoverKind::uniform;
      spec.base.mutation.rate = MutationSpec::Rate::normal;
      spec.base.elitism_fraction = 0.05;
      spec.base.genome = GenomeKind::plain_binary;
      spec.base.penalty.kind = PenaltySpec::Kind::none;
      spec.base.stop_error = 1e-8;
      spec.unlimited_cap_factor = 10000;
      specs.push_back(std::move(spec));
    }
    return specs;
  }

  throw ConfigError("repro: unknown campaign '" + std::string(name) +
                    "' (expected table1, table4, or table5)");
}

}  // namespace gridga
