#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "omega/error.hpp"
#include "omega/exact/bitstring.hpp"
#include "omega/exact/rational.hpp"

namespace omega::exact {

/// Half-open subinterval (lower, upper] of (0, 1].
class DyadicInterval {
 public:
  /// Throws DomainError unless 0 <= lower < upper <= 1.
  DyadicInterval(Rational lower, Rational upper);

  const Rational& lower() const noexcept { return lower_; }
  const Rational& upper() const noexcept { return upper_; }
  Rational width() const { return upper_ - lower_; }

  bool contains(const Rational& x) const { return lower_ < x && x <= upper_; }
  bool overlaps(const DyadicInterval& other) const { return lower_ < other.upper_ && other.lower_ < upper_; }

  /// "(lower, upper]"
  std::string str() const;

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;

 private:
  Rational lower_;
  Rational upper_;
};

/// The reals in (0, 1] whose binary expansion after the point starts with s:
/// (v / 2^n, (v + 1) / 2^n] where v = value(s), n = |s|.
DyadicInterval interval_of(const BitString& s);

/// Thrown by measure_of_disjoint_union; names the first overlapping pair.
class OverlapError : public DomainError {
 public:
  OverlapError(std::size_t first, std::size_t second, const std::string& message)
      : DomainError(message), first_(first), second_(second) {}
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// Lebesgue measure of a union of pairwise disjoint intervals (sum of widths).
/// Throws OverlapError with the indices of an overlapping pair.
Rational measure_of_disjoint_union(std::span<const DyadicInterval> intervals);

}  // namespace omega::exact
