#include "gridga/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gridga {

namespace {

void require_binary_pair(const Genome& a, const Genome& b) {
  if (a.kind == GenomeKind::permutation || b.kind == GenomeKind::permutation) {
    throw OperatorError("crossover: binary operator applied to a permutation");
  }
  if (a.kind != b.kind || a.bits.size() != b.bits.size() || a.bits.empty()) {
    throw OperatorError("crossover: parents must share kind and nonzero length");
  }
}

void require_perm_pair(const Genome& a, const Genome& b) {
  if (a.kind != GenomeKind::permutation || b.kind != GenomeKind::permutation) {
    throw OperatorError("crossover: order crossover needs permutations");
  }
  if (a.perm.size() != b.perm.size() || a.perm.size() < 2) {
    throw OperatorError("crossover: permutations must share length >= 2");
  }
}

}  // namespace

// ----------------------------------------------------------------------------
// Selection
// ----------------------------------------------------------------------------

std::vector<double> selection_probabilities(const SelectionKind& kind,
                                            std::span<const double> fitness) {
  const std::size_t n = fitness.size();
  if (n == 0) throw OperatorError("selection: empty population");

  std::vector<double> p(n);
  switch (kind.method) {
    case SelectionKind::Method::roulette: {
      double total = 0.0;
      for (double f : fitness) {
        if (!(f > 0.0)) {
          throw OperatorError("roulette selection needs strictly positive fitness");
        }
        total += f;
      }
      for (std::size_t i = 0; i < n; ++i) p[i] = fitness[i] / total;
      return p;
    }
    case SelectionKind::Method::ranked: {
      // Ranks 1 (worst) .. n (best); a block of equal fitness gets the mean
      // of the ranks it spans, so equal fitness means equal probability.
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return fitness[a] < fitness[b];
      });
      const double total = static_cast<double>(n) * static_cast<double>(n + 1) / 2.0;
      std::size_t i = 0;
      while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && fitness[order[j + 1]] == fitness[order[i]]) ++j;
        const double mean_rank = static_cast<double>(i + 1 + j + 1) / 2.0;
        for (std::size_t k = i; k <= j; ++k) p[order[k]] = mean_rank / total;
        i = j + 1;
      }
      return p;
    }
    case SelectionKind::Method::tournament:
      throw OperatorError("tournament selection has no per-individual closed form here");
  }
  throw OperatorError("selection: unknown method");
}

namespace {

std::size_t sample_cdf(const std::vector<double>& cumulative, Rng& rng) {
  const double r = rng.uniform01() * cumulative.back();
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
  std::size_t i = static_cast<std::size_t>(it - cumulative.begin());
  if (i >= cumulative.size()) i = cumulative.size() - 1;  // r == back() guard
  return i;
}

}  // namespace

std::vector<std::size_t> select_parents(const SelectionKind& kind,
                                        std::span<const double> fitness,
                                        std::size_t count, Rng& rng) {
  const std::size_t n = fitness.size();
  if (n == 0) throw OperatorError("selection: empty population");

  std::vector<std::size_t> picked;
  picked.reserve(count);

  if (kind.method == SelectionKind::Method::tournament) {
    if (kind.tournament_size < 2) {
      throw OperatorError("tournament size must be >= 2");
    }
    std::vector<std::size_t> contestants(static_cast<std::size_t>(kind.tournament_size));
    for (std::size_t c = 0; c < count; ++c) {
      for (auto& slot : contestants) slot = rng.below(n);
      double best = -1.0;
      for (std::size_t idx : contestants) best = std::max(best, fitness[idx]);
      std::size_t ties = 0;
      for (std::size_t idx : contestants) ties += fitness[idx] == best;
      std::size_t pick = ties > 1 ? rng.below(ties) : 0;
      for (std::size_t idx : contestants) {
        if (fitness[idx] == best && pick-- == 0) {
          picked.push_back(idx);
          break;
        }
      }
    }
    return picked;
  }

  const std::vector<double> p = selection_probabilities(kind, fitness);
  std::vector<double> cumulative(n);
  std::partial_sum(p.begin(), p.end(), cumulative.begin());
  for (std::size_t c = 0; c < count; ++c) {
    picked.push_back(sample_cdf(cumulative, rng));
  }
  return picked;
}

// ----------------------------------------------------------------------------
// Crossover
// ----------------------------------------------------------------------------

std::pair<Genome, Genome> one_point_at(const Genome& a, const Genome& b,
                                       std::size_t cut) {
  require_binary_pair(a, b);
  const std::size_t len = a.bits.size();
  if (cut < 1 || cut >= len) {
    throw OperatorError("one-point crossover: cut must lie strictly inside");
  }
  Genome c1 = a, c2 = b;
  for (std::size_t k = cut; k < len; ++k) {
    std::swap(c1.bits[k], c2.bits[k]);
  }
  return {std::move(c1), std::move(c2)};
}

std::pair<Genome, Genome> two_point_at(const Genome& a, const Genome& b,
                                       std::size_t i, std::size_t j) {
  require_binary_pair(a, b);
  if (i > j || j >= a.bits.size()) {
    throw OperatorError("two-point crossover: need 0 <= i <= j < length");
  }
  Genome c1 = a, c2 = b;
  for (std::size_t k = i; k <= j; ++k) {
    std::swap(c1.bits[k], c2.bits[k]);
  }
  return {std::move(c1), std::move(c2)};
}

std::pair<Genome, Genome> uniform_with_mask(const Genome& a, const Genome& b,
                                            std::span<const std::uint8_t> mask) {
  require_binary_pair(a, b);
  if (mask.size() != a.bits.size()) {
    throw OperatorError("uniform crossover: mask length mismatch");
  }
  Genome c1 = a, c2 = b;
  for (std::size_t k = 0; k < mask.size(); ++k) {
    if (mask[k]) std::swap(c1.bits[k], c2.bits[k]);
  }
  return {std::move(c1), std::move(c2)};
}

namespace {

// Gene used as an index into the presence table; permutations hold 0..n-1.
std::size_t checked_gene(std::int32_t gene, std::size_t n) {
  if (gene < 0 || static_cast<std::size_t>(gene) >= n) {
    throw OperatorError("order crossover: genes must lie in [0, n)");
  }
  return static_cast<std::size_t>(gene);
}

// OX1 fill for one child: keep `keeper`'s segment [i, j]; the remaining
// slots, walked from j+1 with wraparound, take `donor`'s genes in donor
// order starting after position j, skipping genes already present.
Genome ox1_child(const Genome& keeper, const Genome& donor, std::size_t i,
                 std::size_t j) {
  const std::size_t n = keeper.perm.size();
  Genome child = keeper;
  std::vector<std::uint8_t> in_segment(n, 0);
  for (std::size_t k = i; k <= j; ++k) {
    in_segment[checked_gene(keeper.perm[k], n)] = 1;
  }
  std::size_t write = (j + 1) % n;
  for (std::size_t step = 0; step < n && write != i; ++step) {
    const std::int32_t gene = donor.perm[(j + 1 + step) % n];
    if (in_segment[checked_gene(gene, n)]) continue;
    child.perm[write] = gene;
    write = (write + 1) % n;
  }
  return child;
}

}  // namespace

std::pair<Genome, Genome> order_crossover_at(const Genome& a, const Genome& b,
                                             std::size_t i, std::size_t j) {
  require_perm_pair(a, b);
  if (i > j || j >= a.perm.size()) {
    throw OperatorError("order crossover: need 0 <= i <= j < length");
  }
  return {ox1_child(a, b, i, j), ox1_child(b, a, i, j)};
}

std::pair<Genome, Genome> crossover(CrossoverKind kind, const Genome& a,
                                    const Genome& b, Rng& rng) {
  switch (kind) {
    case CrossoverKind::one_point: {
      require_binary_pair(a, b);
      const std::size_t len = a.bits.size();
      if (len < 2) throw OperatorError("one-point crossover needs length >= 2");
      return one_point_at(a, b, 1 + rng.below(len - 1));
    }
    case CrossoverKind::two_point: {
      require_binary_pair(a, b);
      const std::size_t len = a.bits.size();
      if (len < 3) throw OperatorError("two-point crossover needs length >= 3");
      // i uniform in [1, L-2], j uniform in [i+1, L-1]; the inclusive
      // segment [i, j] is exchanged.
      const std::size_t i = 1 + rng.below(len - 2);
      const std::size_t j = i + 1 + rng.below(len - 1 - i);
      return two_point_at(a, b, i, j);
    }
    case CrossoverKind::uniform: {
      require_binary_pair(a, b);
      std::vector<std::uint8_t> mask(a.bits.size());
      for (auto& m : mask) m = static_cast<std::uint8_t>(rng.next_u64() & 1u);
      return uniform_with_mask(a, b, mask);
    }
    case CrossoverKind::order: {
      require_perm_pair(a, b);
      const std::size_t n = a.perm.size();
      std::size_t i = rng.below(n);
      std::size_t j = rng.below(n);
      if (i > j) std::swap(i, j);
      return order_crossover_at(a, b, i, j);
    }
  }
  throw OperatorError("crossover: unknown kind");
}

// ----------------------------------------------------------------------------
// Mutation
// ----------------------------------------------------------------------------

void mutate_bits(Genome& genome, double rate, Rng& rng) {
  if (genome.kind == GenomeKind::permutation) {
    throw OperatorError("bitflip mutation applied to a permutation");
  }
  if (!(rate >= 0.0) || rate > 1.0) {
    throw OperatorError("bitflip mutation: rate must lie in [0, 1]");
  }
  for (auto& b : genome.bits) {
    if (rng.flip(rate)) b ^= 1u;
  }
}

void inversion_at(std::vector<std::int32_t>& p, std::size_t i, std::size_t j) {
  if (i > j || j >= p.size()) {
    throw OperatorError("inversion: need 0 <= i <= j < length");
  }
  std::reverse(p.begin() + static_cast<std::ptrdiff_t>(i),
               p.begin() + static_cast<std::ptrdiff_t>(j) + 1);
}

void swap_at(std::vector<std::int32_t>& p, std::size_t i, std::size_t j) {
  if (i >= p.size() || j >= p.size()) {
    throw OperatorError("swap: index out of range");
  }
  std::swap(p[i], p[j]);
}

void shift_at(std::vector<std::int32_t>& p, std::size_t from, std::size_t to) {
  if (from >= p.size() || to >= p.size()) {
    throw OperatorError("shift: index out of range");
  }
  const std::int32_t gene = p[from];
  p.erase(p.begin() + static_cast<std::ptrdiff_t>(from));
  p.insert(p.begin() + static_cast<std::ptrdiff_t>(to), gene);
}

void movement_at(std::vector<std::int32_t>& p, std::size_t i, std::size_t j,
                 std::size_t dest) {
  if (i > j || j >= p.size()) {
    throw OperatorError("movement: need 0 <= i <= j < length");
  }
  const std::size_t seg_len = j - i + 1;
  if (dest > p.size() - seg_len) {
    throw OperatorError("movement: destination out of range");
  }
  std::vector<std::int32_t> segment(p.begin() + static_cast<std::ptrdiff_t>(i),
                                    p.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  p.erase(p.begin() + static_cast<std::ptrdiff_t>(i),
          p.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  p.insert(p.begin() + static_cast<std::ptrdiff_t>(dest), segment.begin(),
           segment.end());
}

void mutate_permutation(MutationKind kind, Genome& genome, Rng& rng) {
  if (genome.kind != GenomeKind::permutation) {
    throw OperatorError("permutation mutation applied to a binary genome");
  }
  const std::size_t n = genome.perm.size();
  if (n < 2) return;

  // Draws distinct second indices with a single call: j uniform over
  // [0, n-1] \ {i} via the shift-past-i trick. Keeps the stream length fixed.
  const auto distinct_from = [&](std::size_t i) {
    std::size_t j = rng.below(n - 1);
    return j >= i ? j + 1 : j;
  };

  switch (kind) {
    case MutationKind::inversion: {
      std::size_t i = rng.below(n), j = rng.below(n);
      if (i > j) std::swap(i, j);
      inversion_at(genome.perm, i, j);
      return;
    }
    case MutationKind::swap: {
      const std::size_t i = rng.below(n);
      swap_at(genome.perm, i, distinct_from(i));
      return;
    }
    case MutationKind::shift: {
      const std::size_t i = rng.below(n);
      shift_at(genome.perm, i, distinct_from(i));
      return;
    }
    case MutationKind::movement: {
      // Segment shorter than the whole permutation, destination different
      // from the segment's current position.
      const std::size_t seg_len = 1 + rng.below(n - 1);
      const std::size_t i = rng.below(n - seg_len + 1);
      std::size_t dest = rng.below(n - seg_len);
      if (dest >= i) ++dest;
      movement_at(genome.perm, i, i + seg_len - 1, dest);
      return;
    }
    case MutationKind::bitflip:
      throw OperatorError("bitflip is not a permutation mutation");
  }
  throw OperatorError("mutation: unknown kind");
}

}  // namespace gridga
