#pragma once

#include <cstdint>
#include <random>

namespace cpsample {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to decorrelate seeds derived from small integers.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent generator for work item `index` of a run seeded with `seed`.
/// Serial and parallel runs use the same stream per item.
inline Rng stream_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(mix_seed(mix_seed(seed) ^ mix_seed(index + 0x632BE59BD9B4E019ULL)));
}

/// Uniform integer in [0, n). n must be positive.
template <typename Int>
Int uniform_index(Rng& rng, Int n) {
  return std::uniform_int_distribution<Int>(0, n - 1)(rng);
}

inline double uniform_unit(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace cpsample
