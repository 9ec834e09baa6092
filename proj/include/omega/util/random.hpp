#pragma once

#include <cstdint>
#include <random>

namespace omega::util {

/// Every random draw in the library goes through std::mt19937_64, whose
/// output sequence is fixed by the standard. Distribution objects from
/// <random> are avoided because their algorithms are implementation-defined.
using Rng = std::mt19937_64;

inline constexpr const char* kRngAlgorithm = "mt19937_64+splitmix64-streams";

/// SplitMix64 finalizer; derives independent stream seeds from (seed, stream).
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31U);
}

/// Generator for sub-stream `stream` of `seed`. Streams are what parallel
/// kernels hand to workers, so results do not depend on the thread count.
inline Rng stream_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(seed ^ splitmix64(stream + 0x632BE59BD9B4E019ULL)));
}

/// Uniform integer in [0, bound), bound > 0, by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

/// True with probability numerator / denominator.
inline bool chance(Rng& rng, std::uint64_t numerator, std::uint64_t denominator) {
  return uniform_below(rng, denominator) < numerator;
}

}  // namespace omega::util
