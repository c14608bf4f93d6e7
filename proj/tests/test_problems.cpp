#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "gridga/errors.hpp"
#include "gridga/problems.hpp"

using namespace gridga;

namespace {

// Reference values computed independently with high-precision arithmetic and
// rounded to the nearest double.
constexpr double kP2[] = {0.5, -1.5};
constexpr double kP4[] = {0.5, -1.5, 2.25, -0.75};

void check_value(int id, std::span<const double> x, double expected) {
  const double got = eval_continuous(id, x);
  if (expected == 0.0) {
    CHECK(std::abs(got) < 1e-12);
  } else {
    CHECK(got == doctest::Approx(expected).epsilon(1e-10));
  }
}

}  // namespace

TEST_CASE("continuous suite matches reference values at a 2-D probe point") {
  check_value(1, kP2, 2250000.25);             // bent cigar
  check_value(2, kP2, 2.8125);                 // zakharov
  check_value(3, kP2, 306.5);                  // rosenbrock
  check_value(4, kP2, 42.5);                   // rastrigin
  check_value(5, kP2, 1.9948058262118528);     // expanded schaffer f6
  check_value(6, kP2, 0.79889113077140562);    // levy
  check_value(7, kP2, 2250000.25);             // elliptic
  check_value(8, kP2, 250002.25);              // discus
  check_value(9, kP2, 6.3578126137468947);     // ackley
  check_value(10, kP2, 7.9999961853027344);    // weierstrass
  check_value(11, kP2, 0.572104883139299);     // griewank
  check_value(12, kP2, 0.0);                   // katsuura (dyadic point)
  check_value(13, kP2, 1.4658964152537145);    // happycat
  check_value(14, kP2, 2.91628784747792);      // hgbat
}

TEST_CASE("continuous suite matches reference values at a 4-D probe point") {
  check_value(4, kP4, 68.125);
  check_value(6, kP4, 4.3755885716149332);
  check_value(10, kP4, 11.999994277954102);
  check_value(12, kP4, 6.0845933953425099);
  check_value(13, kP4, 3.0657599413858991);
}

TEST_CASE("continuous suite in one dimension") {
  const double x[] = {0.5};
  check_value(4, x, 20.25);  // rastrigin
}

TEST_CASE("every continuous optimum evaluates to zero") {
  for (int dim : {2, 10, 30}) {
    const std::vector<double> zeros(static_cast<std::size_t>(dim), 0.0);
    const std::vector<double> ones(static_cast<std::size_t>(dim), 1.0);
    const std::vector<double> neg_ones(static_cast<std::size_t>(dim), -1.0);
    for (int id : {1, 2, 4, 5, 7, 8, 9, 10, 11, 12}) {
      CHECK(std::abs(eval_continuous(id, zeros)) < 1e-12);
    }
    for (int id : {3, 6}) {
      CHECK(std::abs(eval_continuous(id, ones)) < 1e-12);
    }
    for (int id : {13, 14}) {
      CHECK(std::abs(eval_continuous(id, neg_ones)) < 1e-12);
    }
  }
}

TEST_CASE("continuous ids and dimensions are validated") {
  const double x[] = {1.0, 2.0};
  CHECK_THROWS_AS(eval_continuous(0, x), ConfigError);
  CHECK_THROWS_AS(eval_continuous(15, x), ConfigError);

  const double one_d[] = {1.0};
  CHECK_THROWS_AS(eval_continuous(3, one_d), ConfigError);  // rosenbrock
  CHECK_THROWS_AS(eval_continuous(5, one_d), ConfigError);  // schaffer
  CHECK_THROWS_AS(eval_continuous(7, one_d), ConfigError);  // elliptic
}

TEST_CASE("co1 objective is the cumulative-sum quadratic") {
  const double single[] = {1.0};
  CHECK(eval_co1(single, {}).objective == doctest::Approx(1.0));

  const double pair[] = {1.0, 1.0};
  CHECK(eval_co1(pair, {}).objective == doctest::Approx(5.0));  // 1^2 + 2^2

  const std::vector<double> zeros(10, 0.0);
  const Co1Value at_origin = eval_co1(zeros, {});
  CHECK(at_origin.objective == 0.0);
  CHECK(at_origin.constraint == doctest::Approx(-90000.0));  // 10 * (-9000)
}

TEST_CASE("co1 shift moves the optimum") {
  const std::vector<double> shift = {3.5, -12.25, 0.75};
  const Co1Value at_shift = eval_co1(shift, shift);
  CHECK(at_shift.objective == 0.0);
  CHECK(at_shift.constraint == doctest::Approx(-27000.0));

  const double wrong_len[] = {1.0, 2.0};
  CHECK_THROWS_AS(eval_co1(wrong_len, shift), ConfigError);
}

TEST_CASE("boolean suite worked examples") {
  const std::vector<std::uint8_t> b0000 = {0, 0, 0, 0};
  const std::vector<std::uint8_t> b0010 = {0, 0, 1, 0};
  const std::vector<std::uint8_t> b1010 = {1, 0, 1, 0};
  const std::vector<std::uint8_t> b1011 = {1, 0, 1, 1};
  const std::vector<std::uint8_t> b1111 = {1, 1, 1, 1};

  CHECK(eval_boolean(BooleanId::onemax, b0000) == 0.0);
  CHECK(eval_boolean(BooleanId::onemax, b1011) == 3.0);
  CHECK(eval_boolean(BooleanId::onemax, b1111) == 4.0);

  CHECK(eval_boolean(BooleanId::leadingones, b0010) == 0.0);
  CHECK(eval_boolean(BooleanId::leadingones, b1011) == 1.0);
  const std::vector<std::uint8_t> b1101 = {1, 1, 0, 1};
  CHECK(eval_boolean(BooleanId::leadingones, b1101) == 2.0);
  CHECK(eval_boolean(BooleanId::leadingones, b1111) == 4.0);

  // Trap rewards zeros everywhere except the isolated all-ones optimum.
  CHECK(eval_boolean(BooleanId::trap, b0000) == 4.0);
  CHECK(eval_boolean(BooleanId::trap, b0010) == 3.0);
  CHECK(eval_boolean(BooleanId::trap, b1010) == 2.0);
  CHECK(eval_boolean(BooleanId::trap, b1011) == 1.0);
  CHECK(eval_boolean(BooleanId::trap, b1111) == 5.0);

  CHECK_THROWS_AS(eval_boolean(BooleanId::onemax, {}), ConfigError);
}

TEST_CASE("catalog lists every problem once") {
  const auto& catalog = problem_catalog();
  REQUIRE(catalog.size() == 18);
  CHECK(catalog[0].id == "bent_cigar");

  int constrained = 0, boolean = 0;
  for (const auto& info : catalog) {
    constrained += info.constrained;
    boolean += info.repr == Representation::boolean_bits;
    CHECK(!info.description.empty());
  }
  CHECK(constrained == 1);
  CHECK(boolean == 3);

  for (const auto& info : catalog) {
    if (info.id == "rosenbrock" || info.id == "schaffer" ||
        info.id == "elliptic") {
      CHECK(info.min_dimension == 2);
    } else {
      CHECK(info.min_dimension == 1);
    }
  }
}

TEST_CASE("make_problem instantiates continuous problems") {
  const Problem p = make_problem("rastrigin", 1);
  CHECK(p.id == "rastrigin");
  CHECK(p.dimension == 1);
  CHECK(p.direction == Direction::minimize);
  CHECK(p.lower == -100.0);
  CHECK(p.upper == 100.0);
  CHECK(p.optimum_value == 0.0);
  CHECK(!p.constrained());
  const double x[] = {0.5};
  CHECK(p.objective(x) == doctest::Approx(20.25));

  // f1..f14 alias the suite by index.
  CHECK(make_problem("f1", 2).id == "bent_cigar");
  CHECK(make_problem("f14", 2).id == "hgbat");

  CHECK_THROWS_AS(make_problem("f15", 2), ConfigError);
  CHECK_THROWS_AS(make_problem("nope", 2), ConfigError);
  CHECK_THROWS_AS(make_problem("rosenbrock", 1), ConfigError);
}

TEST_CASE("make_problem instantiates boolean problems") {
  const Problem p = make_problem("trap", 5);
  CHECK(p.repr == Representation::boolean_bits);
  CHECK(p.direction == Direction::maximize);
  CHECK(p.optimum_value == 6.0);  // n + 1
  CHECK(p.lower == 0.0);
  CHECK(p.upper == 1.0);
  const std::vector<std::uint8_t> bits = {1, 1, 1, 1, 1};
  CHECK(p.bit_objective(bits) == 6.0);

  CHECK(make_problem("onemax", 50).optimum_value == 50.0);
  CHECK(make_problem("leadingones", 7).optimum_value == 7.0);
  CHECK_THROWS_AS(make_problem("onemax", 0), ConfigError);
}

TEST_CASE("make_co1 wires the constraint") {
  const Problem p = make_problem("co1", 10);
  REQUIRE(p.constrained());
  REQUIRE(p.constraints->inequalities.size() == 1);

  const std::vector<double> zeros(10, 0.0);
  CHECK(p.objective(zeros) == 0.0);
  CHECK(p.constraints->inequalities[0](zeros) == doctest::Approx(-90000.0));

  const Problem shifted = make_co1(2, {3.0, -4.0});
  const double at_shift[] = {3.0, -4.0};
  CHECK(shifted.objective(at_shift) == 0.0);
  CHECK(shifted.constraints->inequalities[0](at_shift) ==
        doctest::Approx(-18000.0));

  CHECK_THROWS_AS(make_co1(3, {1.0}), ConfigError);
}

TEST_CASE("shift files parse one real per line") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "gridga_shift_test.txt";
  {
    std::ofstream out(path);
    out << "# header comment\n";
    out << "1.5\n";
    out << "\n";
    out << "  -2.25  \n";
    out << "3e0\n";
  }

  const auto shift = load_shift_file(path, 3);
  REQUIRE(shift.size() == 3);
  CHECK(shift[0] == 1.5);
  CHECK(shift[1] == -2.25);
  CHECK(shift[2] == 3.0);

  CHECK_THROWS_AS(load_shift_file(path, 2), ConfigError);
  CHECK_THROWS_AS(load_shift_file(path / "missing", 3), IoError);

  {
    std::ofstream out(path);
    out << "1.5\nnot-a-number\n";
  }
  CHECK_THROWS_AS(load_shift_file(path, 2), ConfigError);
  fs::remove(path);
}
