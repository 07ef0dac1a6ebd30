#ifndef FOLGIT_RANDOM_HPP
#define FOLGIT_RANDOM_HPP

#include <cstdint>
#include <random>

namespace folgit {

/// mt19937_64 is bit-specified by the standard; the distribution helpers
/// below are written out so sampled values do not depend on the standard
/// library vendor.
using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

inline bool bernoulli(Rng& rng, int numerator, int denominator) {
  return uniform_int(rng, 0, denominator - 1) < numerator;
}

/// splitmix64 finalizer, used to derive independent sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace folgit

#endif  // FOLGIT_RANDOM_HPP
