#pragma once

#include <functional>
#include <span>
#include <vector>

namespace gridga {

// Constraints for a minimization problem. Inequalities are feasible when
// g(x) <= 0. Equalities h(x) = 0 are relaxed to |h(x)| - epsilon <= 0 before
// any violation is measured, so feasibility is always a finite-volume set.
struct ConstraintSet {
  using Fn = std::function<double(std::span<const double>)>;
  std::vector<Fn> inequalities;
  std::vector<Fn> equalities;
  double epsilon = 1e-4;

  bool empty() const { return inequalities.empty() && equalities.empty(); }
};

// Per-constraint violation magnitudes: max(0, g(x)) for inequalities and
// max(0, |h(x)| - epsilon) for equalities, in that order.
std::vector<double> violations(std::span<const double> x,
                               const ConstraintSet& constraints);

struct PenaltySpec {
  enum class Kind { none, static_weight, dynamic, adaptive };
  Kind kind = Kind::none;

  // static: f + weight * sum(v_i^2)
  double weight = 1000.0;

  // dynamic: f + (c * t)^alpha * sum(v_i^beta), t = generation number
  double c = 0.5;
  double alpha = 2.0;
  double beta = 2.0;

  // adaptive: f + lambda * sum(v_i^2) with lambda steered by a feasibility
  // window: lambda shrinks by `shrink` after `window` consecutive
  // generations whose best individual was feasible, grows by `grow` after
  // `window` consecutive infeasible ones.
  double lambda0 = 10.0;
  double shrink = 2.0;
  double grow = 2.0;
  int window = 5;

  void validate() const;  // throws ConfigError on out-of-range parameters
};

// Tracks the feasibility window for the adaptive penalty. One instance lives
// for the duration of a single run.
class AdaptivePenaltyState {
 public:
  AdaptivePenaltyState() = default;
  explicit AdaptivePenaltyState(const PenaltySpec& spec);

  // Call once per generation with whether the generation's fittest
  // individual was feasible.
  void observe_generation(bool best_feasible);

  double lambda() const { return lambda_; }

 private:
  double lambda_ = 10.0;
  double shrink_ = 2.0;
  double grow_ = 2.0;
  int window_ = 5;
  int feasible_streak_ = 0;
  int infeasible_streak_ = 0;
};

// Penalized objective for one individual. `generation` feeds the dynamic
// penalty's time term; `adaptive` must be non-null when spec.kind is
// adaptive. Feasible points (all violations zero) pass through unchanged
// under every penalty kind.
double penalized_objective(double objective, std::span<const double> violation,
                           const PenaltySpec& spec, int generation,
                           const AdaptivePenaltyState* adaptive = nullptr);

// Scalar fitness from a penalized objective: 1 / (1 + |value - reference|).
// Equals 1 exactly at the reference and stays in (0, 1] for any finite
// value, which keeps roulette selection's positive-fitness requirement
// satisfied without rescaling.
double hyperbolic_fitness(double value, double reference);

}  // namespace gridga
