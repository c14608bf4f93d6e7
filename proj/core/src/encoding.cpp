#include "gridga/encoding.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "gridga/errors.hpp"

namespace gridga {

std::uint64_t point_count(const GridSpec& grid) {
  if (!std::isfinite(grid.lower) || !std::isfinite(grid.upper) ||
      !std::isfinite(grid.step) || !(grid.step > 0.0)) {
    throw ConfigError("grid: bounds must be finite and step positive");
  }
  if (!(grid.upper > grid.lower)) {
    throw ConfigError("grid: upper must exceed lower");
  }

  double q = (grid.upper - grid.lower) / grid.step;

  // Snap to the nearest integer when the quotient is within a few ulps of
  // it: (200 / 1e-4) evaluates to 1999999.9999999998 in binary and would
  // otherwise lose the top lattice point.
  const double r = std::nearbyint(q);
  constexpr double kUlp = std::numeric_limits<double>::epsilon();
  if (r >= 1.0 && std::abs(q - r) <= 4.0 * kUlp * std::max(q, 1.0)) {
    q = r;
  }

  if (q >= 9.0e18) {  // codes must fit a 63-bit index
    throw ConfigError("grid: step too small for the range (too many points)");
  }
  const std::uint64_t count = static_cast<std::uint64_t>(q) + 1;
  if (count < 2) {
    throw ConfigError("grid: range must contain at least two lattice points");
  }
  return count;
}

int bits_per_var(const GridSpec& grid) {
  const std::uint64_t top = point_count(grid) - 1;  // >= 1
  return std::bit_width(top);
}

double decode_var(std::span<const std::uint8_t> bits, const GridSpec& grid,
                  GenomeKind kind) {
  if (bits.empty() || bits.size() > 63) {
    throw ConfigError("decode: variable slice must hold 1..63 bits");
  }
  std::uint64_t code = 0;
  for (std::uint8_t b : bits) code = (code << 1) | (b & 1u);
  if (kind == GenomeKind::gray_binary) code = gray_to_binary(code);

  const std::uint64_t top = point_count(grid) - 1;
  if (code > top) code = top;
  return grid.lower + static_cast<double>(code) * grid.step;
}

std::vector<double> decode_genome(const Genome& genome, const GridSpec& grid,
                                  int dim) {
  if (genome.kind == GenomeKind::permutation) {
    throw ConfigError("decode: permutation genomes have no grid decoding");
  }
  if (dim < 1) throw ConfigError("decode: dimension must be positive");

  const int width = bits_per_var(grid);
  const std::size_t expected = static_cast<std::size_t>(dim) * width;
  if (genome.bits.size() != expected) {
    throw ConfigError("decode: genome length does not match dim * bits_per_var");
  }

  const std::uint64_t top = point_count(grid) - 1;
  std::vector<double> x(static_cast<std::size_t>(dim));
  const std::uint8_t* p = genome.bits.data();
  for (int v = 0; v < dim; ++v, p += width) {
    std::uint64_t code = 0;
    for (int b = 0; b < width; ++b) code = (code << 1) | (p[b] & 1u);
    if (genome.kind == GenomeKind::gray_binary) code = gray_to_binary(code);
    if (code > top) code = top;
    x[static_cast<std::size_t>(v)] = grid.lower + static_cast<double>(code) * grid.step;
  }
  return x;
}

Genome random_bit_genome(GenomeKind kind, std::size_t length, Rng& rng) {
  if (kind == GenomeKind::permutation) {
    throw ConfigError("random_bit_genome: use random_permutation for permutations");
  }
  Genome g;
  g.kind = kind;
  g.bits.resize(length);
  for (std::size_t i = 0; i < length; ++i) {
    g.bits[i] = static_cast<std::uint8_t>(rng.next_u64() & 1u);
  }
  return g;
}

Genome random_permutation(std::size_t n, Rng& rng) {
  Genome g;
  g.kind = GenomeKind::permutation;
  g.perm.resize(n);
  std::iota(g.perm.begin(), g.perm.end(), 0);
  rng.shuffle(g.perm);
  return g;
}

}  // namespace gridga
