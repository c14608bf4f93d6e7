#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gridga/encoding.hpp"
#include "gridga/errors.hpp"
#include "gridga/rng.hpp"

namespace gridga {

// ----------------------------------------------------------------------------
// Selection
// ----------------------------------------------------------------------------

struct SelectionKind {
  enum class Method { tournament, ranked, roulette };
  Method method = Method::tournament;
  int tournament_size = 3;

  static SelectionKind tournament_of(int size) {
    return {Method::tournament, size};
  }
  static SelectionKind ranked() { return {Method::ranked, 0}; }
  static SelectionKind roulette() { return {Method::roulette, 0}; }
};

// Per-individual selection probability under ranked or roulette selection.
//
// Roulette: p_i = f_i / sum(f); every fitness must be strictly positive.
// Ranked:   p_i = r_i / sum(r) with ranks 1 (worst) .. N (best); individuals
//           with equal fitness share the mean of the ranks they occupy, so
//           equal fitness always means equal probability.
std::vector<double> selection_probabilities(const SelectionKind& kind,
                                            std::span<const double> fitness);

// Draw `count` parent indices, independently and with replacement. Tournament
// picks `tournament_size` contestants uniformly with replacement and returns
// the fittest; ties are broken uniformly at random among the tied contestants.
std::vector<std::size_t> select_parents(const SelectionKind& kind,
                                        std::span<const double> fitness,
                                        std::size_t count, Rng& rng);

// ----------------------------------------------------------------------------
// Crossover
// ----------------------------------------------------------------------------

enum class CrossoverKind { one_point, two_point, uniform, order };

// Deterministic-cut variants. These carry the whole recombination semantics;
// the Rng overloads below only choose the cut points. Exposed so tests can
// pin exact outputs.
//
// one_point_at: cut after position `cut` (1 <= cut < L); children swap tails.
// two_point_at: swap the segment [i, j], inclusive, 0 <= i <= j < L.
std::pair<Genome, Genome> one_point_at(const Genome& a, const Genome& b,
                                       std::size_t cut);
std::pair<Genome, Genome> two_point_at(const Genome& a, const Genome& b,
                                       std::size_t i, std::size_t j);

// Uniform crossover against an explicit mask: mask[k] == 1 swaps locus k.
std::pair<Genome, Genome> uniform_with_mask(const Genome& a, const Genome& b,
                                            std::span<const std::uint8_t> mask);

// Order crossover (OX1) for permutations: child 1 keeps a's segment [i, j]
// in place and fills the remaining slots with b's genes in b's order,
// starting after the segment and wrapping around; child 2 swaps the roles.
std::pair<Genome, Genome> order_crossover_at(const Genome& a, const Genome& b,
                                             std::size_t i, std::size_t j);

// Randomized entry points used by the engine. Binary kinds accept one_point,
// two_point and uniform; permutations accept order.
std::pair<Genome, Genome> crossover(CrossoverKind kind, const Genome& a,
                                    const Genome& b, Rng& rng);

// ----------------------------------------------------------------------------
// Mutation
// ----------------------------------------------------------------------------

enum class MutationKind { bitflip, inversion, swap, shift, movement };

// Independent per-bit flip with the given probability. Binary genomes only.
void mutate_bits(Genome& genome, double rate, Rng& rng);

// Deterministic-index permutation mutations, acting in place.
//
// inversion_at: reverse the segment [i, j].
// swap_at:      exchange positions i and j.
// shift_at:     remove the gene at `from` and reinsert it at `to`.
// movement_at:  remove the segment [i, j] and reinsert it so that it starts
//               at position `dest` of the shortened permutation,
//               0 <= dest <= n - (j - i + 1).
void inversion_at(std::vector<std::int32_t>& p, std::size_t i, std::size_t j);
void swap_at(std::vector<std::int32_t>& p, std::size_t i, std::size_t j);
void shift_at(std::vector<std::int32_t>& p, std::size_t from, std::size_t to);
void movement_at(std::vector<std::int32_t>& p, std::size_t i, std::size_t j,
                 std::size_t dest);

// Randomized permutation mutation: draws the indices uniformly and applies
// the corresponding *_at operation once.
void mutate_permutation(MutationKind kind, Genome& genome, Rng& rng);

// ----------------------------------------------------------------------------
// Elitism
// ----------------------------------------------------------------------------

// Carry k = max(1, floor(fraction * N)) individuals from the previous
// generation into the offspring, replacing the k worst offspring (by
// fitness; ties resolved by lower index). Normally the k carried individuals
// are the k best of the previous generation; with random_transfer they are
// drawn uniformly without replacement instead, which requires an Rng.
//
// Works with any individual type exposing a `fitness` member.
template <typename Ind>
std::vector<Ind> apply_elitism(const std::vector<Ind>& previous,
                               std::vector<Ind> offspring, double fraction,
                               bool random_transfer = false,
                               Rng* rng = nullptr) {
  const std::size_t n = previous.size();
  if (n == 0 || offspring.size() != n) {
    throw OperatorError("elitism: population sizes must match and be nonzero");
  }
  if (!(fraction >= 0.0) || fraction >= 1.0) {
    throw OperatorError("elitism: fraction must lie in [0, 1)");
  }
  const std::size_t k =
      std::max<std::size_t>(1, static_cast<std::size_t>(fraction * static_cast<double>(n)));

  std::vector<std::size_t> carried(n);
  for (std::size_t i = 0; i < n; ++i) carried[i] = i;
  if (random_transfer) {
    if (rng == nullptr) {
      throw OperatorError("elitism: random transfer needs an Rng");
    }
    // Partial Fisher-Yates: the first k entries become a uniform sample
    // without replacement.
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(carried[i], carried[i + rng->below(n - i)]);
    }
  } else {
    std::stable_sort(carried.begin(), carried.end(),
                     [&](std::size_t a, std::size_t b) {
                       return previous[a].fitness > previous[b].fitness;
                     });
  }

  std::vector<std::size_t> victims(n);
  for (std::size_t i = 0; i < n; ++i) victims[i] = i;
  std::stable_sort(victims.begin(), victims.end(),
                   [&](std::size_t a, std::size_t b) {
                     return offspring[a].fitness < offspring[b].fitness;
                   });

  for (std::size_t i = 0; i < k; ++i) {
    offspring[victims[i]] = previous[carried[i]];
  }
  return offspring;
}

}  // namespace gridga
