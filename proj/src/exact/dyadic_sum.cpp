#include "omega/exact/dyadic_sum.hpp"

#include <cmath>

namespace omega::exact {

void DyadicSum::add_power(std::uint64_t exponent) {
  // 2^-e + 2^-e = 2^-(e-1): carry towards the binary point.
  while (exponent > 0 && ones_.contains(exponent)) {
    ones_.erase(exponent);
    --exponent;
  }
  if (exponent == 0) {
    ++whole_;
    return;
  }
  ones_.insert(exponent);
}

std::optional<Rational> DyadicSum::to_rational(std::uint64_t max_exponent) const {
  if (!ones_.empty() && *ones_.rbegin() > max_exponent) return std::nullopt;
  Rational total = Rational(whole_);
  for (const auto e : ones_) total += pow2(-static_cast<std::int64_t>(e));
  return total;
}

double DyadicSum::to_double() const {
  double total = static_cast<double>(whole_);
  for (const auto e : ones_) {
    if (e > 1100) break;
    total += std::ldexp(1.0, -static_cast<int>(e));
  }
  return total;
}

std::string DyadicSum::str() const {
  if (is_zero()) return "0";
  std::string out = whole_ == 0 ? std::string() : std::to_string(whole_);
  for (const auto e : ones_) {
    if (!out.empty()) out += " + ";
    out += "2^-" + std::to_string(e);
  }
  return out;
}

std::strong_ordering operator<=>(const DyadicSum& lhs, const DyadicSum& rhs) {
  if (lhs.whole_ != rhs.whole_) return lhs.whole_ <=> rhs.whole_;
  // Compare binary expansions from the most significant bit down.
  auto a = lhs.ones_.begin();
  auto b = rhs.ones_.begin();
  for (; a != lhs.ones_.end() && b != rhs.ones_.end(); ++a, ++b) {
    if (*a != *b) return *a < *b ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (a != lhs.ones_.end()) return std::strong_ordering::greater;
  if (b != rhs.ones_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

}  // namespace omega::exact
