#include "gridga/penalty.hpp"

#include <cmath>

#include "gridga/errors.hpp"

namespace gridga {

std::vector<double> violations(std::span<const double> x,
                               const ConstraintSet& constraints) {
  std::vector<double> v;
  v.reserve(constraints.inequalities.size() + constraints.equalities.size());
  for (const auto& g : constraints.inequalities) {
    const double gv = g(x);
    if (!std::isfinite(gv)) {
      throw EvaluationError("constraint returned a non-finite value");
    }
    v.push_back(std::max(0.0, gv));
  }
  for (const auto& h : constraints.equalities) {
    const double hv = h(x);
    if (!std::isfinite(hv)) {
      throw EvaluationError("constraint returned a non-finite value");
    }
    v.push_back(std::max(0.0, std::abs(hv) - constraints.epsilon));
  }
  return v;
}

void PenaltySpec::validate() const {
  switch (kind) {
    case Kind::none:
      return;
    case Kind::static_weight:
      if (!(weight > 0.0) || !std::isfinite(weight)) {
        throw ConfigError("static penalty: weight must be positive and finite");
      }
      return;
    case Kind::dynamic:
      if (!(c > 0.0) || !(alpha > 0.0) || !(beta > 0.0)) {
        throw ConfigError("dynamic penalty: c, alpha, beta must be positive");
      }
      return;
    case Kind::adaptive:
      if (!(lambda0 > 0.0) || !(shrink > 1.0) || !(grow > 1.0) || window < 1) {
        throw ConfigError(
            "adaptive penalty: need lambda0 > 0, shrink > 1, grow > 1, window >= 1");
      }
      return;
  }
  throw ConfigError("penalty: unknown kind");
}

AdaptivePenaltyState::AdaptivePenaltyState(const PenaltySpec& spec)
    : lambda_(spec.lambda0),
      shrink_(spec.shrink),
      grow_(spec.grow),
      window_(spec.window) {}

void AdaptivePenaltyState::observe_generation(bool best_feasible) {
  if (best_feasible) {
    ++feasible_streak_;
    infeasible_streak_ = 0;
    if (feasible_streak_ >= window_) {
      lambda_ /= shrink_;
      feasible_streak_ = 0;
    }
  } else {
    ++infeasible_streak_;
    feasible_streak_ = 0;
    if (infeasible_streak_ >= window_) {
      lambda_ *= grow_;
      infeasible_streak_ = 0;
    }
  }
}

double penalized_objective(double objective, std::span<const double> violation,
                           const PenaltySpec& spec, int generation,
                           const AdaptivePenaltyState* adaptive) {
  if (violation.empty()) return objective;

  switch (spec.kind) {
    case PenaltySpec::Kind::none:
      return objective;
    case PenaltySpec::Kind::static_weight: {
      double sum = 0.0;
      for (double v : violation) sum += v * v;
      return objective + spec.weight * sum;
    }
    case PenaltySpec::Kind::dynamic: {
      double sum = 0.0;
      for (double v : violation) sum += std::pow(v, spec.beta);
      const double scale =
          std::pow(spec.c * static_cast<double>(generation), spec.alpha);
      return objective + scale * sum;
    }
    case PenaltySpec::Kind::adaptive: {
      if (adaptive == nullptr) {
        throw ConfigError("adaptive penalty: missing state");
      }
      double sum = 0.0;
      for (double v : violation) sum += v * v;
      return objective + adaptive->lambda() * sum;
    }
  }
  throw ConfigError("penalty: unknown kind");
}

double hyperbolic_fitness(double value, double reference) {
  return 1.0 / (1.0 + std::abs(value - reference));
}

}  // namespace gridga
