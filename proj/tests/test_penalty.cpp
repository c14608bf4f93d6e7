#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "gridga/errors.hpp"
#include "gridga/penalty.hpp"

using namespace gridga;

TEST_CASE("violations: inequalities clamp at zero") {
  ConstraintSet cs;
  cs.inequalities.push_back([](std::span<const double> x) { return x[0] - 1.0; });

  const double feasible_pt[] = {0.5};
  auto v = violations(feasible_pt, cs);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == 0.0);

  const double violating_pt[] = {2.0};
  v = violations(violating_pt, cs);
  CHECK(v[0] == doctest::Approx(1.0));
}

TEST_CASE("violations: equalities use the epsilon band") {
  ConstraintSet cs;
  cs.equalities.push_back([](std::span<const double> x) { return x[0]; });
  cs.epsilon = 1e-4;

  const double inside[] = {5e-5};
  auto v = violations(inside, cs);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == 0.0);

  const double outside[] = {2e-3};
  v = violations(outside, cs);
  CHECK(v[0] == doctest::Approx(1.9e-3));

  const double negative[] = {-2e-3};
  v = violations(negative, cs);
  CHECK(v[0] == doctest::Approx(1.9e-3));
}

TEST_CASE("violations: order is inequalities then equalities") {
  ConstraintSet cs;
  cs.inequalities.push_back([](std::span<const double>) { return 3.0; });
  cs.inequalities.push_back([](std::span<const double>) { return -1.0; });
  cs.equalities.push_back([](std::span<const double>) { return 0.5; });

  const double x[] = {0.0};
  const auto v = violations(x, cs);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == doctest::Approx(3.0));
  CHECK(v[1] == 0.0);
  CHECK(v[2] == doctest::Approx(0.5 - 1e-4));
}

TEST_CASE("violations: non-finite constraint value is an evaluation error") {
  ConstraintSet cs;
  cs.inequalities.push_back([](std::span<const double>) {
    return std::numeric_limits<double>::quiet_NaN();
  });
  const double x[] = {0.0};
  CHECK_THROWS_AS(violations(x, cs), EvaluationError);
}

TEST_CASE("penalty spec validation") {
  PenaltySpec spec;
  spec.kind = PenaltySpec::Kind::none;
  CHECK_NOTHROW(spec.validate());

  spec.kind = PenaltySpec::Kind::static_weight;
  spec.weight = 0.0;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.weight = 1000.0;
  CHECK_NOTHROW(spec.validate());

  spec.kind = PenaltySpec::Kind::dynamic;
  spec.c = -0.5;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.c = 0.5;
  spec.alpha = 0.0;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.alpha = 2.0;
  CHECK_NOTHROW(spec.validate());

  spec.kind = PenaltySpec::Kind::adaptive;
  spec.shrink = 1.0;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.shrink = 2.0;
  spec.window = 0;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.window = 5;
  CHECK_NOTHROW(spec.validate());
}

TEST_CASE("static penalty adds weight * sum of squared violations") {
  PenaltySpec spec;
  spec.kind = PenaltySpec::Kind::static_weight;
  spec.weight = 10.0;
  const double v[] = {3.0};
  CHECK(penalized_objective(7.0, v, spec, 0) == doctest::Approx(7.0 + 90.0));

  const double two[] = {1.0, 2.0};
  CHECK(penalized_objective(0.0, two, spec, 0) == doctest::Approx(50.0));
}

TEST_CASE("dynamic penalty grows with the generation counter") {
  PenaltySpec spec;
  spec.kind = PenaltySpec::Kind::dynamic;
  spec.c = 0.5;
  spec.alpha = 2.0;
  spec.beta = 2.0;
  const double v[] = {2.0};
  // (0.5 * 10)^2 * 2^2 = 25 * 4 = 100.
  CHECK(penalized_objective(1.0, v, spec, 10) == doctest::Approx(101.0));
  // Later generations penalize harder.
  CHECK(penalized_objective(1.0, v, spec, 20) > penalized_objective(1.0, v, spec, 10));
}

TEST_CASE("feasible points pass through every penalty unchanged") {
  const double none[] = {0.0, 0.0};
  for (auto kind : {PenaltySpec::Kind::none, PenaltySpec::Kind::static_weight,
                    PenaltySpec::Kind::dynamic}) {
    PenaltySpec spec;
    spec.kind = kind;
    CHECK(penalized_objective(4.25, none, spec, 17) == 4.25);
  }
  PenaltySpec spec;
  spec.kind = PenaltySpec::Kind::adaptive;
  AdaptivePenaltyState state(spec);
  CHECK(penalized_objective(4.25, none, spec, 17, &state) == 4.25);
  // Empty violation vector means an unconstrained problem.
  CHECK(penalized_objective(4.25, {}, spec, 17, &state) == 4.25);
}

TEST_CASE("adaptive penalty requires its state") {
  PenaltySpec spec;
  spec.kind = PenaltySpec::Kind::adaptive;
  const double v[] = {1.0};
  CHECK_THROWS_AS(penalized_objective(0.0, v, spec, 0, nullptr), ConfigError);

  AdaptivePenaltyState state(spec);
  CHECK(penalized_objective(0.0, v, spec, 0, &state) ==
        doctest::Approx(spec.lambda0));
}

TEST_CASE("adaptive lambda shrinks and grows with feasibility windows") {
  PenaltySpec spec;
  spec.kind = PenaltySpec::Kind::adaptive;
  spec.lambda0 = 10.0;
  spec.shrink = 2.0;
  spec.grow = 2.0;
  spec.window = 3;

  AdaptivePenaltyState state(spec);
  CHECK(state.lambda() == 10.0);

  state.observe_generation(true);
  state.observe_generation(true);
  CHECK(state.lambda() == 10.0);  // window not complete
  state.observe_generation(true);
  CHECK(state.lambda() == doctest::Approx(5.0));

  // A mixed stretch never fires: the streak resets on every flip.
  state.observe_generation(false);
  state.observe_generation(true);
  state.observe_generation(false);
  state.observe_generation(true);
  CHECK(state.lambda() == doctest::Approx(5.0));

  state.observe_generation(false);
  state.observe_generation(false);
  state.observe_generation(false);
  CHECK(state.lambda() == doctest::Approx(10.0));

  // The streak restarts after firing: three more needed, not one.
  state.observe_generation(false);
  CHECK(state.lambda() == doctest::Approx(10.0));
  state.observe_generation(false);
  state.observe_generation(false);
  CHECK(state.lambda() == doctest::Approx(20.0));
}

TEST_CASE("hyperbolic fitness peaks at the reference") {
  CHECK(hyperbolic_fitness(3.0, 3.0) == 1.0);
  CHECK(hyperbolic_fitness(4.0, 3.0) == doctest::Approx(0.5));
  CHECK(hyperbolic_fitness(2.0, 3.0) == doctest::Approx(0.5));
  CHECK(hyperbolic_fitness(1e12, 0.0) > 0.0);
  // Strictly decreasing in the distance from the reference.
  double prev = 1.0;
  for (double d = 0.5; d < 100.0; d *= 2.0) {
    const double f = hyperbolic_fitness(d, 0.0);
    CHECK(f < prev);
    CHECK(f > 0.0);
    CHECK(f <= 1.0);
    prev = f;
  }
}
