#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "omega/exact/rational.hpp"

namespace omega::exact {

/// Exact finite sum of powers 2^-e (e >= 0), kept as an integer part plus
/// the set of fractional binary positions holding a 1 bit.
///
/// Sums like sum_{n in H} 2^-n over integer codes reach exponents in the
/// millions, where a Rational would carry a multi-megabit denominator. The
/// sparse form stays proportional to the number of terms.
class DyadicSum {
 public:
  DyadicSum() = default;

  /// Adds 2^-exponent, propagating carries.
  void add_power(std::uint64_t exponent);

  std::uint64_t whole_part() const noexcept { return whole_; }
  const std::set<std::uint64_t>& fraction_bits() const noexcept { return ones_; }
  bool is_zero() const noexcept { return whole_ == 0 && ones_.empty(); }

  /// Exact Rational, or nullopt when the largest exponent exceeds the limit.
  std::optional<Rational> to_rational(std::uint64_t max_exponent = 4096) const;
  /// Approximate value; labelled as such wherever it is printed.
  double to_double() const;
  /// "0", or "w + 2^-a + 2^-b + ..." in increasing exponent order.
  std::string str() const;

  friend bool operator==(const DyadicSum&, const DyadicSum&) = default;
  friend std::strong_ordering operator<=>(const DyadicSum& lhs, const DyadicSum& rhs);

 private:
  std::uint64_t whole_ = 0;
  std::set<std::uint64_t> ones_;
};

}  // namespace omega::exact
