#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "omega/exact/dyadic_sum.hpp"
#include "omega/exact/rational.hpp"
#include "omega/minilang/census.hpp"
#include "omega/prefixfree/string_set.hpp"

namespace omega::measures {

using exact::Rational;

/// [lower, upper] around a value that may not be rational.
struct Enclosure {
  Rational lower;
  Rational upper;

  static Enclosure exact(const Rational& v) { return {v, v}; }
  bool is_exact() const { return lower == upper; }
  bool contains(const Rational& v) const { return lower <= v && v <= upper; }
  Rational width() const { return upper - lower; }
  Enclosure& operator+=(const Enclosure& o) {
    lower += o.lower;
    upper += o.upper;
    return *this;
  }
  /// "p/q" when exact, "[lower, upper]" otherwise.
  std::string str() const;
};

/// e^x for rational x >= 0.
Enclosure exp_enclosure(const Rational& x);

/// A set of positive integers: finite, periodic (n mod period in residues),
/// or an arbitrary predicate evaluated up to a bound.
class NatSet {
 public:
  enum class Kind { Finite, Periodic, Predicate };

  static NatSet finite(std::set<std::uint64_t> members);
  static NatSet periodic(std::uint64_t period, std::set<std::uint64_t> residues);
  static NatSet evens() { return periodic(2, {0}); }
  static NatSet odds() { return periodic(2, {1}); }
  static NatSet all() { return periodic(1, {0}); }
  static NatSet predicate(std::function<bool(std::uint64_t)> member, std::string name);

  Kind kind() const noexcept { return kind_; }
  bool contains(std::uint64_t n) const;
  const std::set<std::uint64_t>& members() const noexcept { return members_; }
  std::uint64_t period() const noexcept { return period_; }
  const std::set<std::uint64_t>& residues() const noexcept { return members_; }
  std::string str() const;

 private:
  Kind kind_ = Kind::Finite;
  std::set<std::uint64_t> members_;  // elements, or residues when periodic
  std::uint64_t period_ = 0;
  std::function<bool(std::uint64_t)> predicate_;
  std::string name_;
};

/// Probability weights alpha_n on the positive integers summing to 1.
class IndexMeasure {
 public:
  enum class Kind { Geometric, FinitePrefix, PoissonNormalized, PoissonAsWritten };

  /// alpha_n = (1 - r) r^(n-1), 0 < r < 1; r = 1/2 gives 2^-n.
  static IndexMeasure geometric(const Rational& ratio);
  /// alpha_1..alpha_m explicit; `tail` is the mass left for n > m, spread in
  /// an unspecified way. Requires the alphas to be positive and the total 1.
  static IndexMeasure finite_prefix(std::vector<Rational> alphas, const Rational& tail);
  /// alpha_n = lambda^n / n! / (e^lambda - 1): the Poisson law conditioned
  /// on n >= 1.
  static IndexMeasure poisson_normalized(const Rational& lambda);
  /// alpha_n = e^-lambda lambda^-n / n! exactly as the formula is printed.
  /// Its total mass is e^-lambda (e^(1/lambda) - 1), not 1 in general.
  static IndexMeasure poisson_as_written(const Rational& lambda);

  Kind kind() const noexcept { return kind_; }
  const Rational& parameter() const noexcept { return param_; }
  Enclosure alpha(std::uint64_t n) const;
  /// Enclosure of sum_{n>N} alpha_n.
  Enclosure tail(std::uint64_t n) const;
  Enclosure total_mass() const;
  std::string str() const;

 private:
  Kind kind_ = Kind::Geometric;
  Rational param_;
  std::vector<Rational> prefix_;
  Rational prefix_tail_;
  Enclosure scale_;  // 1/(e^lambda - 1) or e^-lambda for the Poisson kinds
};

/// sum_{n in H} alpha_n. Exact for finite sets, and for periodic sets under
/// geometric weights; otherwise terms up to `bound` plus the tail enclosure.
Enclosure alpha_halting(const IndexMeasure& alpha, const NatSet& h, std::uint64_t bound = 64);

/// sum_{n in S} 2^-n.
Enclosure p_nat(const NatSet& s, std::uint64_t bound = 64);

/// sum over programs halting in the census of 2^-(integer code of the
/// program's binary code). A lower bound on the full sum.
exact::DyadicSum k_number(const minilang::EnumerationReport& census);

/// sum_{s in S} r^-|s|. Throws DomainError for r < 2.
Rational generalized_omega(const prefixfree::StringSet& set, std::uint64_t base);

}  // namespace omega::measures
