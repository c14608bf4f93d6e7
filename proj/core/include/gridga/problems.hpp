#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridga/penalty.hpp"

namespace gridga {

enum class Representation { continuous, boolean_bits };
enum class Direction { minimize, maximize };

// A fully-instantiated optimization problem: objective, bounds, constraints
// and the known optimum value used for error reporting. Continuous problems
// evaluate `objective` on a decoded point; Boolean problems evaluate
// `bit_objective` directly on the genome's bits.
struct Problem {
  std::string id;
  int dimension = 0;
  Representation repr = Representation::continuous;
  Direction direction = Direction::minimize;
  double lower = -100.0;
  double upper = 100.0;
  double optimum_value = 0.0;
  bool optimum_known = true;

  std::function<double(std::span<const double>)> objective;
  std::function<double(std::span<const std::uint8_t>)> bit_objective;
  std::shared_ptr<const ConstraintSet> constraints;

  bool constrained() const { return constraints && !constraints->empty(); }
};

// Continuous benchmark suite, ids 1..14, all minimized with optimum 0 over
// [-100, 100]^D:
//   1 bent cigar      2 zakharov     3 rosenbrock   4 rastrigin
//   5 schaffer f6     6 levy         7 elliptic     8 discus
//   9 ackley         10 weierstrass 11 griewank    12 katsuura
//  13 happycat       14 hgbat
// Ids 3, 5, 7 need D >= 2 (their sums run over consecutive pairs or divide
// by D - 1).
double eval_continuous(int id, std::span<const double> x);

// Constrained problem: minimize the cumulative-sum quadratic
//   f(z) = sum_i (sum_{j<=i} z_j)^2,  z = x - shift,
// subject to  g(z) = sum_i [z_i^2 - 5000 cos(0.1 pi z_i) - 4000] <= 0.
struct Co1Value {
  double objective = 0.0;
  double constraint = 0.0;
};
Co1Value eval_co1(std::span<const double> x, std::span<const double> shift);

// Boolean suite over bit strings of length n, all maximized:
//   onemax       f = number of ones           optimum n
//   leadingones  f = length of the 1-prefix   optimum n
//   trap         f = (n - ones) + (n + 1) * [all ones]   optimum n + 1
enum class BooleanId { onemax, leadingones, trap };
double eval_boolean(BooleanId id, std::span<const std::uint8_t> bits);

struct ProblemInfo {
  std::string id;
  std::string description;
  Representation repr = Representation::continuous;
  int min_dimension = 1;
  bool constrained = false;
};

// Every problem the library knows by name, in catalog order.
const std::vector<ProblemInfo>& problem_catalog();

// Instantiate a catalog problem at the given dimension. Throws ConfigError
// for unknown ids or dimensions below the problem's minimum.
Problem make_problem(std::string_view id, int dim);

// co1 with an explicit shift vector (empty means the zero shift).
Problem make_co1(int dim, std::vector<double> shift);

// Reads one real number per line; blank lines and lines starting with '#'
// are skipped. Throws ConfigError if the count does not match dim.
std::vector<double> load_shift_file(const std::filesystem::path& path, int dim);

}  // namespace gridga
