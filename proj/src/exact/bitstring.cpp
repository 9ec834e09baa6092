#include "omega/exact/bitstring.hpp"

#include <algorithm>
#include <ostream>

#include "omega/error.hpp"

namespace omega::exact {

BitString::BitString(std::vector<bool> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw DomainError("bit strings must be nonempty");
}

BitString BitString::parse(std::string_view text) {
  if (text.empty()) throw InputError("empty bit string");
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (const char c : text) {
    if (c != '0' && c != '1') throw InputError("bit string '" + std::string(text) + "' contains '" + c + "'");
    bits.push_back(c == '1');
  }
  return BitString(std::move(bits));
}

std::string BitString::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (const bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

bool BitString::is_prefix_of(const BitString& other) const {
  if (size() > other.size()) return false;
  return std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

BitString operator+(const BitString& lhs, const BitString& rhs) {
  std::vector<bool> bits = lhs.bits_;
  bits.insert(bits.end(), rhs.bits_.begin(), rhs.bits_.end());
  return BitString(std::move(bits));
}

std::strong_ordering operator<=>(const BitString& lhs, const BitString& rhs) {
  const std::size_t n = std::min(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (lhs.bits_[i] != rhs.bits_[i]) return lhs.bits_[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return lhs.size() <=> rhs.size();
}

bool shortlex_less(const BitString& lhs, const BitString& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return lhs < rhs;
}

std::ostream& operator<<(std::ostream& os, const BitString& s) { return os << s.str(); }

BitString nat_to_binary(const BigInt& n) {
  if (n < 1) throw DomainError("nat_to_binary needs n >= 1, got " + n.str());
  const std::size_t width = boost::multiprecision::msb(n) + 1;
  std::vector<bool> bits(width);
  for (std::size_t i = 0; i < width; ++i) bits[width - 1 - i] = boost::multiprecision::bit_test(n, static_cast<unsigned>(i));
  return BitString(std::move(bits));
}

BigInt binary_value(const BitString& s) {
  BigInt v = 0;
  for (const bool b : s.bits()) {
    v <<= 1;
    if (b) v += 1;
  }
  return v;
}

BigInt integer_code(const BitString& s) {
  BigInt v = 1;
  for (const bool b : s.bits()) {
    v <<= 1;
    if (b) v += 1;
  }
  return v - 1;
}

BitString from_integer_code(const BigInt& code) {
  if (code < 1) throw DomainError("integer codes start at 1, got " + code.str());
  const BitString with_marker = nat_to_binary(code + 1);
  std::vector<bool> bits(with_marker.bits().begin() + 1, with_marker.bits().end());
  return BitString(std::move(bits));
}

}  // namespace omega::exact
