#pragma once

#include <string>
#include <vector>

#include "omega/exact/rational.hpp"
#include "omega/minilang/census.hpp"
#include "omega/prefixfree/string_set.hpp"
#include "omega/util/random.hpp"

namespace omega::measures {

using exact::Rational;

/// Probability pi_l for each string of length l = 1..L, with
/// sum_l 2^l pi_l = 1 exactly.
class LengthMeasure {
 public:
  /// pi_m = 2^-m, all other lengths 0.
  static LengthMeasure point_mass(std::size_t m, std::size_t support);
  /// Length l with probability proportional to (1 - q)^(l-1) q on 1..L,
  /// then pi_l = P(l) / 2^l. Requires 0 < q <= 1.
  static LengthMeasure stop_probability(const Rational& q, std::size_t support);
  /// pi_1..pi_L given directly. Throws DomainError unless the total
  /// sum 2^l pi_l is 1, or rescales to 1 when `renormalize` is set.
  static LengthMeasure explicit_table(std::vector<Rational> pi, bool renormalize = false);
  /// From a length distribution P(1..L) summing to 1 (or rescaled).
  static LengthMeasure from_length_distribution(std::vector<Rational> p, bool renormalize = false);

  std::size_t support() const noexcept { return pi_.size(); }
  /// pi_l for 1 <= l <= L. Throws DomainError outside the support.
  const Rational& pi(std::size_t length) const;
  const std::vector<Rational>& table() const noexcept { return pi_; }
  const std::string& description() const noexcept { return description_; }

 private:
  LengthMeasure(std::vector<Rational> pi, std::string description);

  std::vector<Rational> pi_;
  std::string description_;
};

/// Random length distribution on 1..L: integer weights in [0, 16] with a
/// guaranteed positive total.
LengthMeasure random_length_measure(util::Rng& rng, std::size_t support);

/// sum over S of pi_|s|. Throws DomainError for strings longer than L.
Rational set_probability(const prefixfree::StringSet& set, const LengthMeasure& pi);

struct DominanceReport {
  Rational halting_probability;  // sum_l N(l) pi_l
  Rational omega_partial;        // sum_l N(l) 2^-l
  bool strict = false;           // halting_probability < omega_partial
  bool hypothesis_met = false;   // two distinct lengths with N > 0
};

/// Throws DomainError when the measure's support misses census lengths.
DominanceReport dominance_check(const minilang::EnumerationReport& census, const LengthMeasure& pi);

/// N(l) / 2^l. Throws DomainError when l is not a census length.
Rational fixed_length_halting(const minilang::EnumerationReport& census, std::size_t bit_length);

}  // namespace omega::measures
