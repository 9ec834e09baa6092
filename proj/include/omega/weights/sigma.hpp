#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "omega/exact/rational.hpp"
#include "omega/logic/theory.hpp"

namespace omega::weights {

using exact::Rational;
using logic::Theory;

/// Bits 1..k of sigma(T): bit n is 1 iff T |= psi_n.
std::vector<bool> sigma_prefix(const Theory& t, std::size_t k);

/// Certified interval [lower, upper] around an infinite sum, from the
/// first `terms` summands plus an exact tail bound.
struct WeightEnclosure {
  Rational lower;
  Rational upper;
  std::size_t terms = 0;

  Rational width() const { return upper - lower; }
  bool contains(const WeightEnclosure& inner) const { return lower <= inner.lower && inner.upper <= upper; }
  bool disjoint_from(const WeightEnclosure& other) const { return upper < other.lower || other.upper < lower; }
  std::string str() const;
};

/// V(T) = sum 2^-n sigma_n(T) enclosed by [partial, partial + 2^-k].
WeightEnclosure v_weight(const Theory& t, std::size_t k);
WeightEnclosure v_weight_from_bits(const std::vector<bool>& bits);

/// Coefficients alpha_n with their validity check against the weights a < b.
class AlphaSpec {
 public:
  /// alpha_n = c^-n. Throws DomainError unless b > a >= 0 and c > 1 + b/(b-a).
  static AlphaSpec geometric(Rational c, Rational a, Rational b);
  /// alpha_1..alpha_m given explicitly, with `tail` bounding sum_{i>m} alpha_i.
  /// Throws DomainError naming the first n that breaks
  /// sum_{i>n} alpha_i < alpha_n (1 - a/b). Defined only up to precision m.
  static AlphaSpec explicit_prefix(std::vector<Rational> alphas, Rational tail, Rational a, Rational b);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  bool is_geometric() const noexcept { return explicit_.empty(); }
  const Rational& ratio() const noexcept { return c_; }
  /// Largest usable precision; 0 means unbounded.
  std::size_t max_terms() const noexcept { return explicit_.size(); }

  /// alpha_n, n >= 1.
  Rational alpha(std::size_t n) const;
  /// sum_{i>n} alpha_i for geometric specs, an upper bound for explicit ones.
  Rational tail(std::size_t n) const;
  /// alpha_{n+i} / alpha_n (independent of n for geometric specs).
  Rational relative(std::size_t n, std::size_t i) const;
  /// tail(n + i) / alpha_n.
  Rational relative_tail(std::size_t n, std::size_t i) const;
  std::string str() const;

 private:
  AlphaSpec(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  Rational a_;
  Rational b_;
  Rational c_ = 0;
  std::vector<Rational> explicit_;
  std::vector<Rational> suffix_;  // suffix_[n] = sum_{i>n} alpha_i (upper bound)
};

/// V^<a,b>_alpha(T) enclosed by [sum_{n<=k} alpha_n s_n, that + b tail(k)]
/// where s_n is b when T |= psi_n and a otherwise.
WeightEnclosure v_ab(const Theory& t, const AlphaSpec& spec, std::size_t k);
WeightEnclosure v_ab_from_bits(const std::vector<bool>& bits, const AlphaSpec& spec);

}  // namespace omega::weights
