#include "omega/exact/rational.hpp"

#include <ostream>

#include "omega/error.hpp"

namespace omega::exact {

namespace mp = boost::multiprecision;

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  // Boost rejects a negative denominator, so the sign moves to the numerator.
  if (denominator < 0) {
    value_ = mp::cpp_rational(-numerator, -denominator);
  } else {
    value_ = mp::cpp_rational(numerator, denominator);
  }
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw InputError("malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw InputError("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("rational '" + std::string(text) + "' has zero denominator");
  return Rational(num, den);
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

std::string Rational::str() const {
  const BigInt den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

double Rational::to_double() const { return value_.convert_to<double>(); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mp::cpp_rational(-value_)); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow2(std::int64_t e) {
  const std::uint64_t magnitude = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  BigInt p = 1;
  p <<= magnitude;
  if (e >= 0) return Rational(p);
  return Rational(BigInt(1), p);
}

Rational pow(const Rational& base, std::uint64_t e) {
  Rational result = 1;
  Rational square = base;
  while (e != 0) {
    if (e & 1U) result *= square;
    e >>= 1U;
    if (e != 0) square *= square;
  }
  return result;
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

}  // namespace omega::exact
