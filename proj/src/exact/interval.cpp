#include "omega/exact/interval.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace omega::exact {

DyadicInterval::DyadicInterval(Rational lower, Rational upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_ < 0 || upper_ > 1 || !(lower_ < upper_)) {
    throw DomainError("interval (" + lower_.str() + ", " + upper_.str() + "] is not a nonempty subinterval of (0, 1]");
  }
}

std::string DyadicInterval::str() const { return "(" + lower_.str() + ", " + upper_.str() + "]"; }

DyadicInterval interval_of(const BitString& s) {
  const BigInt v = binary_value(s);
  const Rational scale = pow2(-static_cast<std::int64_t>(s.size()));
  return {Rational(v) * scale, Rational(BigInt(v + 1)) * scale};
}

Rational measure_of_disjoint_union(std::span<const DyadicInterval> intervals) {
  std::vector<std::size_t> order(intervals.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (intervals[a].lower() != intervals[b].lower()) return intervals[a].lower() < intervals[b].lower();
    return a < b;
  });
  // After sorting by lower end, any overlap shows up between neighbours.
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto& prev = intervals[order[k - 1]];
    const auto& cur = intervals[order[k]];
    if (prev.overlaps(cur)) {
      const std::size_t i = std::min(order[k - 1], order[k]);
      const std::size_t j = std::max(order[k - 1], order[k]);
      throw OverlapError(i, j,
                         "intervals " + intervals[i].str() + " and " + intervals[j].str() + " overlap (indices " +
                             std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  Rational total = 0;
  for (const auto& interval : intervals) total += interval.width();
  return total;
}

}  // namespace omega::exact
