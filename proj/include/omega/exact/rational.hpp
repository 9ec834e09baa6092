#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace omega::exact {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction in lowest terms with a positive denominator.
///
/// Every measure, weight and interval endpoint in the library is a Rational;
/// nothing is ever rounded. Textual form is "p/q", or "p" when q = 1.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)

  /// Throws DomainError when `denominator` is zero.
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p/q" or "p" (optional leading '-'). Throws InputError.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

  std::string str() const;
  /// Nearest double; only for CSV export and labelled approximations.
  double to_double() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on a zero divisor.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

  boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// 2^e for any integer exponent (negative exponents give 1/2^|e|).
Rational pow2(std::int64_t e);

/// base^e, e >= 0.
Rational pow(const Rational& base, std::uint64_t e);

/// Midpoint (a + b) / 2.
Rational midpoint(const Rational& a, const Rational& b);

}  // namespace omega::exact
