#include "gridga/rng.hpp"

namespace gridga {

namespace {

// splitmix64 finalizer; good avalanche, cheap, stable everywhere.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view problem_id,
                          std::uint64_t dimension, std::uint64_t budget,
                          std::uint64_t run_index) {
  // FNV-1a over the id, then fold the numeric fields in one at a time.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : problem_id) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::uint64_t s = mix(master_seed ^ h);
  s = mix(s ^ dimension);
  s = mix(s ^ budget);
  s = mix(s ^ run_index);
  return s;
}

}  // namespace gridga
