#pragma once

#include <cstdint>
#include <string>

#include "omega/exact/rational.hpp"
#include "omega/prefixfree/string_set.hpp"

namespace omega::measures {

struct McReport {
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  exact::Rational estimate;  // hits / trials
  exact::Rational target;    // Omega_S
  std::uint64_t seed = 0;
  std::string rng;
};

/// Draws the binary expansion of a uniform real one coin flip at a time
/// (tails = 1, heads = 0) until it is known whether the expansion starts
/// with an element of S. Trials are split into fixed blocks, block b drawing
/// from stream b of the seed, so the result does not depend on the thread
/// count. Throws NotPrefixFreeError, or DomainError for zero trials.
McReport sample_real_prefix(const prefixfree::StringSet& set, std::uint64_t trials, std::uint64_t seed);
McReport sample_real_prefix_serial(const prefixfree::StringSet& set, std::uint64_t trials, std::uint64_t seed);

}  // namespace omega::measures
