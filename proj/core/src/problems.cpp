#include "gridga/problems.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gridga/errors.hpp"

namespace gridga {

namespace {

constexpr double kPi = std::numbers::pi;

double sq(double v) { return v * v; }

double sum_sq(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double sum(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

// 1. Bent Cigar
double bent_cigar(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += sq(x[i]);
  return sq(x[0]) + 1e6 * s;
}

// 2. Zakharov
double zakharov(std::span<const double> x) {
  double half = 0.0;
  for (double v : x) half += 0.5 * v;
  return sum_sq(x) + sq(half) + sq(sq(half));
}

// 3. Rosenbrock
double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    s += 100.0 * sq(sq(x[i]) - x[i + 1]) + sq(x[i] - 1.0);
  }
  return s;
}

// 4. Rastrigin
double rastrigin(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += sq(v) - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
  return s;
}

// 5. Expanded Schaffer F6: pairwise g over consecutive coordinates, wrapping
// from the last back to the first.
double schaffer_pair(double a, double b) {
  const double ss = sq(a) + sq(b);
  return 0.5 + (sq(std::sin(std::sqrt(ss))) - 0.5) / sq(1.0 + 0.001 * ss);
}

double schaffer_f6(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    s += schaffer_pair(x[i], x[i + 1]);
  }
  return s + schaffer_pair(x[x.size() - 1], x[0]);
}

// 6. Levy
double levy(std::span<const double> x) {
  const auto w = [&](std::size_t i) { return 1.0 + (x[i] - 1.0) / 4.0; };
  const std::size_t d = x.size();
  double s = sq(std::sin(kPi * w(0)));
  for (std::size_t i = 0; i + 1 < d; ++i) {
    s += sq(w(i) - 1.0) * (1.0 + 10.0 * sq(std::sin(kPi * w(i) + 1.0)));
  }
  s += sq(w(d - 1) - 1.0) * (1.0 + sq(std::sin(2.0 * kPi * w(d - 1))));
  return s;
}

// 7. High Conditioned Elliptic
double elliptic(std::span<const double> x) {
  const double d = static_cast<double>(x.size());
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += std::pow(1e6, static_cast<double>(i) / (d - 1.0)) * sq(x[i]);
  }
  return s;
}

// 8. Discus
double discus(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += sq(x[i]);
  return 1e6 * sq(x[0]) + s;
}

// 9. Ackley
double ackley(std::span<const double> x) {
  const double d = static_cast<double>(x.size());
  double cos_sum = 0.0;
  for (double v : x) cos_sum += std::cos(2.0 * kPi * v);
  return -20.0 * std::exp(-0.2 * std::sqrt(sum_sq(x) / d)) -
         std::exp(cos_sum / d) + 20.0 + std::numbers::e;
}

// 10. Weierstrass, a = 0.5, b = 3, k_max = 20
double weierstrass(std::span<const double> x) {
  constexpr int kMax = 20;
  struct Tables {
    std::array<double, kMax + 1> ak{}, bk{};
    double offset = 0.0;  // inner sum at x = 0: sum a^k cos(pi b^k)
    Tables() {
      for (int k = 0; k <= kMax; ++k) {
        ak[k] = std::pow(0.5, k);
        bk[k] = std::pow(3.0, k);
        offset += ak[k] * std::cos(2.0 * kPi * bk[k] * 0.5);
      }
    }
  };
  static const Tables t;

  double s = 0.0;
  for (double v : x) {
    for (int k = 0; k <= kMax; ++k) {
      s += t.ak[k] * std::cos(2.0 * kPi * t.bk[k] * (v + 0.5));
    }
  }
  return s - static_cast<double>(x.size()) * t.offset;
}

// 11. Griewank
double griewank(std::span<const double> x) {
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sum_sq(x) / 4000.0 - prod + 1.0;
}

// 12. Katsuura; round() is half-away-from-zero. The dyadic sum uses the
// absolute distance to the nearest integer so the term is well defined for
// negative coordinates.
double katsuura(std::span<const double> x) {
  const double d = static_cast<double>(x.size());
  const double exponent = 10.0 / std::pow(d, 1.2);
  const double scale = 10.0 / (d * d);
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double inner = 0.0;
    double two_j = 2.0;
    for (int j = 1; j <= 32; ++j, two_j *= 2.0) {
      const double t = two_j * x[i];
      inner += std::abs(t - std::round(t)) / two_j;
    }
    prod *= std::pow(1.0 + static_cast<double>(i + 1) * inner, exponent);
  }
  return scale * prod - scale;
}

// 13. HappyCat
double happycat(std::span<const double> x) {
  const double d = static_cast<double>(x.size());
  const double ss = sum_sq(x);
  return std::pow(std::abs(ss - d), 0.25) + (0.5 * ss + sum(x)) / d + 0.5;
}

// 14. HGBat
double hgbat(std::span<const double> x) {
  const double d = static_cast<double>(x.size());
  const double ss = sum_sq(x);
  const double sx = sum(x);
  return std::sqrt(std::abs(sq(ss) - sq(sx))) + (0.5 * ss + sx) / d + 0.5;
}

struct ContinuousEntry {
  const char* name;
  const char* description;
  double (*fn)(std::span<const double>);
  int min_dim;
};

constexpr std::array<ContinuousEntry, 14> kContinuous = {{
    {"bent_cigar", "Bent Cigar (unimodal, ill-conditioned)", bent_cigar, 1},
    {"zakharov", "Zakharov (unimodal)", zakharov, 1},
    {"rosenbrock", "Rosenbrock (narrow curved valley)", rosenbrock, 2},
    {"rastrigin", "Rastrigin (highly multimodal)", rastrigin, 1},
    {"schaffer", "Expanded Schaffer F6 (multimodal, wrapped pairs)", schaffer_f6, 2},
    {"levy", "Levy (multimodal)", levy, 1},
    {"elliptic", "High Conditioned Elliptic (unimodal)", elliptic, 2},
    {"discus", "Discus (unimodal, one heavy axis)", discus, 1},
    {"ackley", "Ackley (multimodal, flat outer region)", ackley, 1},
    {"weierstrass", "Weierstrass (continuous, nowhere differentiable)", weierstrass, 1},
    {"griewank", "Griewank (multimodal, product term)", griewank, 1},
    {"katsuura", "Katsuura (rugged, dyadic fractal)", katsuura, 1},
    {"happycat", "HappyCat (sphere/linear mix)", happycat, 1},
    {"hgbat", "HGBat (sphere/linear mix, stronger coupling)", hgbat, 1},
}};

}  // namespace

double eval_continuous(int id, std::span<const double> x) {
  if (id < 1 || id > static_cast<int>(kContinuous.size())) {
    throw ConfigError("continuous function id must lie in 1..14");
  }
  const ContinuousEntry& entry = kContinuous[static_cast<std::size_t>(id - 1)];
  if (static_cast<int>(x.size()) < entry.min_dim) {
    throw ConfigError(std::string(entry.name) + ": dimension below minimum");
  }
  return entry.fn(x);
}

Co1Value eval_co1(std::span<const double> x, std::span<const double> shift) {
  if (!shift.empty() && shift.size() != x.size()) {
    throw ConfigError("co1: shift length must equal the dimension");
  }
  Co1Value out;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double z = shift.empty() ? x[i] : x[i] - shift[i];
    cumulative += z;
    out.objective += sq(cumulative);
    out.constraint += sq(z) - 5000.0 * std::cos(0.1 * kPi * z) - 4000.0;
  }
  return out;
}

double eval_boolean(BooleanId id, std::span<const std::uint8_t> bits) {
  if (bits.empty()) throw ConfigError("boolean problem: empty bit vector");
  const double n = static_cast<double>(bits.size());
  switch (id) {
    case BooleanId::onemax: {
      double ones = 0.0;
      for (std::uint8_t b : bits) ones += b & 1u;
      return ones;
    }
    case BooleanId::leadingones: {
      double prefix = 0.0;
      for (std::uint8_t b : bits) {
        if (!(b & 1u)) break;
        prefix += 1.0;
      }
      return prefix;
    }
    case BooleanId::trap: {
      double ones = 0.0;
      for (std::uint8_t b : bits) ones += b & 1u;
      const bool all_ones = ones == n;
      return (n - ones) + (all_ones ? n + 1.0 : 0.0);
    }
  }
  throw ConfigError("boolean problem: unknown id");
}

const std::vector<ProblemInfo>& problem_catalog() {
  static const std::vector<ProblemInfo> catalog = [] {
    std::vector<ProblemInfo> c;
    for (const auto& e : kContinuous) {
      c.push_back({e.name, e.description, Representation::continuous,
                   e.min_dim, false});
    }
    c.push_back({"co1",
                 "Cumulative-sum quadratic with oscillatory inequality "
                 "constraint",
                 Representation::continuous, 1, true});
    c.push_back({"onemax", "Count of one bits (maximize)",
                 Representation::boolean_bits, 1, false});
    c.push_back({"leadingones", "Length of the leading all-ones prefix "
                 "(maximize)",
                 Representation::boolean_bits, 1, false});
    c.push_back({"trap", "Deceptive trap: rewards zeros except at all-ones "
                 "(maximize)",
                 Representation::boolean_bits, 1, false});
    return c;
  }();
  return catalog;
}

namespace {

Problem make_continuous(int id, int dim) {
  const ContinuousEntry& entry = kContinuous[static_cast<std::size_t>(id - 1)];
  if (dim < entry.min_dim) {
    throw ConfigError(std::string(entry.name) + ": dimension must be >= " +
                      std::to_string(entry.min_dim));
  }
  Problem p;
  p.id = entry.name;
  p.dimension = dim;
  p.repr = Representation::continuous;
  p.direction = Direction::minimize;
  p.lower = -100.0;
  p.upper = 100.0;
  p.optimum_value = 0.0;
  p.objective = [fn = entry.fn](std::span<const double> x) { return fn(x); };
  return p;
}

Problem make_boolean(BooleanId id, const std::string& name, int dim) {
  if (dim < 1) throw ConfigError(name + ": dimension must be >= 1");
  Problem p;
  p.id = name;
  p.dimension = dim;
  p.repr = Representation::boolean_bits;
  p.direction = Direction::maximize;
  p.lower = 0.0;
  p.upper = 1.0;
  p.optimum_value =
      id == BooleanId::trap ? static_cast<double>(dim) + 1.0
                            : static_cast<double>(dim);
  p.bit_objective = [id](std::span<const std::uint8_t> bits) {
    return eval_boolean(id, bits);
  };
  return p;
}

}  // namespace

Problem make_co1(int dim, std::vector<double> shift) {
  if (dim < 1) throw ConfigError("co1: dimension must be >= 1");
  if (!shift.empty() && static_cast<int>(shift.size()) != dim) {
    throw ConfigError("co1: shift length must equal the dimension");
  }
  Problem p;
  p.id = "co1";
  p.dimension = dim;
  p.repr = Representation::continuous;
  p.direction = Direction::minimize;
  p.lower = -100.0;
  p.upper = 100.0;
  p.optimum_value = 0.0;

  auto shared = std::make_shared<const std::vector<double>>(std::move(shift));
  p.objective = [shared](std::span<const double> x) {
    return eval_co1(x, *shared).objective;
  };
  auto cs = std::make_shared<ConstraintSet>();
  cs->inequalities.push_back([shared](std::span<const double> x) {
    return eval_co1(x, *shared).constraint;
  });
  p.constraints = std::move(cs);
  return p;
}

Problem make_problem(std::string_view id, int dim) {
  // Numeric alias f1..f14 for the continuous suite.
  if (id.size() >= 2 && (id[0] == 'f' || id[0] == 'F')) {
    int n = 0;
    bool numeric = true;
    for (std::size_t i = 1; i < id.size(); ++i) {
      if (id[i] < '0' || id[i] > '9') {
        numeric = false;
        break;
      }
      n = n * 10 + (id[i] - '0');
    }
    if (numeric && n >= 1 && n <= 14) return make_continuous(n, dim);
  }

  for (int i = 0; i < static_cast<int>(kContinuous.size()); ++i) {
    if (id == kContinuous[static_cast<std::size_t>(i)].name) {
      return make_continuous(i + 1, dim);
    }
  }
  if (id == "co1") return make_co1(dim, {});
  if (id == "onemax") return make_boolean(BooleanId::onemax, "onemax", dim);
  if (id == "leadingones") {
    return make_boolean(BooleanId::leadingones, "leadingones", dim);
  }
  if (id == "trap") return make_boolean(BooleanId::trap, "trap", dim);
  throw ConfigError("unknown problem id: " + std::string(id));
}

std::vector<double> load_shift_file(const std::filesystem::path& path, int dim) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open shift file: " + path.string());
  std::vector<double> shift;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(start, end - start + 1);
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      shift.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("shift file line " + std::to_string(line_no) +
                        ": not a real number: " + token);
    }
  }
  if (static_cast<int>(shift.size()) != dim) {
    throw ConfigError("shift file holds " + std::to_string(shift.size()) +
                      " values, expected " + std::to_string(dim));
  }
  return shift;
}

}  // namespace gridga
