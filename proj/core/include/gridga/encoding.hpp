#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gridga/rng.hpp"

namespace gridga {

// Uniform lattice over [lower, upper] with spacing `step` for one decision
// variable. Every variable of a problem shares the same grid.
struct GridSpec {
  double lower = -100.0;
  double upper = 100.0;
  double step = 1e-8;
};

// Number of lattice points M = floor((upper - lower) / step) + 1.
//
// The quotient is snapped to the nearest integer when it lands within a few
// ulps of one, so decimal steps such as 1e-4 over [-100, 100] give the
// intended 2000001 points instead of losing the top point to floating-point
// round-off. Throws ConfigError for degenerate grids (step <= 0, empty range,
// fewer than two points, or more points than a 63-bit code can index).
std::uint64_t point_count(const GridSpec& grid);

// Minimal code width: the unique b with 2^(b-1) < M <= 2^b.
int bits_per_var(const GridSpec& grid);

// Reflected binary Gray code. Adjacent integers map to codes that differ in
// exactly one bit, so a single bit flip in a coded variable moves the decoded
// value by at most one grid step near the code boundary.
constexpr std::uint64_t binary_to_gray(std::uint64_t v) { return v ^ (v >> 1); }

constexpr std::uint64_t gray_to_binary(std::uint64_t g) {
  for (int shift = 1; shift < 64; shift <<= 1) g ^= g >> shift;
  return g;
}

enum class GenomeKind { plain_binary, gray_binary, permutation };

// One individual's chromosome. Binary kinds store each variable as a
// fixed-width bit slice, most significant bit first; the permutation kind
// stores an ordering of 0..n-1.
struct Genome {
  GenomeKind kind = GenomeKind::gray_binary;
  std::vector<std::uint8_t> bits;
  std::vector<std::int32_t> perm;

  std::size_t length() const {
    return kind == GenomeKind::permutation ? perm.size() : bits.size();
  }
};

// Decode one variable's bit slice to its lattice value. Codes beyond the last
// lattice point clamp to M-1, so every bit pattern decodes inside the bounds.
double decode_var(std::span<const std::uint8_t> bits, const GridSpec& grid,
                  GenomeKind kind);

// Decode a full binary genome into its real-valued point. The genome must
// hold exactly dim * bits_per_var(grid) bits.
std::vector<double> decode_genome(const Genome& genome, const GridSpec& grid,
                                  int dim);

Genome random_bit_genome(GenomeKind kind, std::size_t length, Rng& rng);
Genome random_permutation(std::size_t n, Rng& rng);

}  // namespace gridga
