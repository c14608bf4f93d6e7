// Microbenchmarks for the hot per-evaluation paths: encoding, variation
// operators, selection and the benchmark objectives themselves.

#include <cstdint>
#include <utility>
#include <vector>

#include <benchmark/benchmark.h>

#include "gridga/encoding.hpp"
#include "gridga/operators.hpp"
#include "gridga/problems.hpp"
#include "gridga/rng.hpp"

using namespace gridga;

namespace {

constexpr GridSpec kFineGrid{-100.0, 100.0, 1e-8};  // 35 bits per variable

Genome random_genome(int dim, const GridSpec& grid, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t length =
      static_cast<std::size_t>(dim) * static_cast<std::size_t>(bits_per_var(grid));
  return random_bit_genome(GenomeKind::gray_binary, length, rng);
}

std::vector<double> random_point(int dim, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> x(static_cast<std::size_t>(dim));
  for (double& v : x) v = rng.uniform_real(-100.0, 100.0);
  return x;
}

void BM_GrayRoundTrip(benchmark::State& state) {
  std::uint64_t v = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gray_to_binary(binary_to_gray(v)));
    ++v;
  }
}
BENCHMARK(BM_GrayRoundTrip);

void BM_DecodeGenome(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const Genome genome = random_genome(dim, kFineGrid, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode_genome(genome, kFineGrid, dim));
  }
  state.SetItemsProcessed(state.iterations() * dim);
}
BENCHMARK(BM_DecodeGenome)->Arg(10)->Arg(30)->Arg(100);

void BM_Crossover(benchmark::State& state) {
  const auto kind = static_cast<CrossoverKind>(state.range(0));
  const Genome a = random_genome(10, kFineGrid, 21);
  const Genome b = random_genome(10, kFineGrid, 22);
  Rng rng(23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(crossover(kind, a, b, rng));
  }
}
BENCHMARK(BM_Crossover)
    ->Arg(static_cast<int>(CrossoverKind::one_point))
    ->Arg(static_cast<int>(CrossoverKind::two_point))
    ->Arg(static_cast<int>(CrossoverKind::uniform));

void BM_MutateBits(benchmark::State& state) {
  Genome genome = random_genome(10, kFineGrid, 31);
  const double rate = 2.0 / static_cast<double>(genome.length());
  Rng rng(32);
  for (auto _ : state) {
    mutate_bits(genome, rate, rng);
    benchmark::DoNotOptimize(genome.bits.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(genome.length()));
}
BENCHMARK(BM_MutateBits);

void BM_SelectParents(benchmark::State& state) {
  const auto method = static_cast<SelectionKind::Method>(state.range(0));
  SelectionKind kind;
  kind.method = method;
  Rng fit_rng(41);
  std::vector<double> fitness(100);
  for (double& f : fitness) f = 0.01 + fit_rng.uniform01();
  Rng rng(42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        select_parents(kind, fitness, fitness.size(), rng));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(fitness.size()));
}
BENCHMARK(BM_SelectParents)
    ->Arg(static_cast<int>(SelectionKind::Method::tournament))
    ->Arg(static_cast<int>(SelectionKind::Method::ranked))
    ->Arg(static_cast<int>(SelectionKind::Method::roulette));

// The cheapest and the three most expensive continuous objectives.
void BM_EvalContinuous(benchmark::State& state) {
  const int id = static_cast<int>(state.range(0));
  const int dim = static_cast<int>(state.range(1));
  const std::vector<double> x = random_point(dim, 51);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_continuous(id, x));
  }
}
BENCHMARK(BM_EvalContinuous)
    ->ArgsProduct({{4 /*rastrigin*/, 10 /*weierstrass*/, 12 /*katsuura*/},
                   {10, 30}});

void BM_EvalCo1(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const std::vector<double> x = random_point(dim, 61);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_co1(x, {}));
  }
}
BENCHMARK(BM_EvalCo1)->Arg(10)->Arg(100);

void BM_EvalBoolean(benchmark::State& state) {
  Rng rng(71);
  std::vector<std::uint8_t> bits(1000);
  for (auto& b : bits) b = rng.flip(0.5) ? 1 : 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_boolean(BooleanId::onemax, bits));
  }
}
BENCHMARK(BM_EvalBoolean);

}  // namespace
