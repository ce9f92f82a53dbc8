#pragma once

#include <cstdint>
#include <random>

namespace histcode {

// All randomness in the toolkit flows through these helpers. std::mt19937_64
// output is pinned by the standard; the distribution helpers are hand-rolled
// because std::uniform_*_distribution is implementation-defined and would
// break bitwise reproducibility across toolchains.
using Rng = std::mt19937_64;

// Uniform in [0, n).
inline std::uint64_t rand_index(Rng& rng, std::uint64_t n) { return rng() % n; }

// Uniform double in [0, 1) with 53 bits of precision.
inline double rand_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi).
inline double rand_range(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * rand_unit(rng);
}

// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle(Rng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rand_index(rng, i)]);
  }
}

// splitmix64 step; used to derive independent sub-seeds from one seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace histcode
