#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace gridga {

// Deterministic random source for the whole library.
//
// mt19937_64 produces the same raw stream on every conforming platform, but
// std::uniform_int_distribution and friends do not, so all derived draws are
// implemented by hand here. Two builds with the same seed therefore produce
// bit-identical runs regardless of compiler or standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Unbiased integer in [0, n) via rejection sampling. n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = gen_();
    while (x >= limit) x = gen_();
    return x % n;
  }

  // Integer in [lo, hi], both ends inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform in [0, 1) with full 53-bit mantissa resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  bool flip(double p) { return uniform01() < p; }

  // Fisher-Yates; consumes one draw per element beyond the first.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Seed for one run of a campaign. Depends only on the identifying tuple, so
// the same run gets the same stream no matter how work is scheduled across
// threads or how the surrounding campaign is sliced.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view problem_id,
                          std::uint64_t dimension, std::uint64_t budget,
                          std::uint64_t run_index);

}  // namespace gridga
