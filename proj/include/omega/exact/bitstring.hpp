#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "omega/exact/rational.hpp"

namespace omega::exact {

/// Nonempty finite sequence of bits. Leading zeros are significant, so
/// "0" and "00" are different strings.
class BitString {
 public:
  /// Throws DomainError on an empty sequence.
  explicit BitString(std::vector<bool> bits);

  /// Parses a raw 0/1 string. Throws InputError on other characters or "".
  static BitString parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<bool>& bits() const noexcept { return bits_; }

  std::string str() const;

  /// True when this string is a prefix of `other` (possibly equal).
  bool is_prefix_of(const BitString& other) const;

  friend BitString operator+(const BitString& lhs, const BitString& rhs);

  friend bool operator==(const BitString& lhs, const BitString& rhs) = default;
  /// Plain lexicographic order ("0" < "00" < "01" < "1").
  friend std::strong_ordering operator<=>(const BitString& lhs, const BitString& rhs);

 private:
  std::vector<bool> bits_;
};

/// Orders by length first, then lexicographically.
bool shortlex_less(const BitString& lhs, const BitString& rhs);

std::ostream& operator<<(std::ostream& os, const BitString& s);

/// Base-2 expansion of n >= 1; the result starts with 1.
BitString nat_to_binary(const BigInt& n);

/// Positional base-2 value of the bits (most significant first).
BigInt binary_value(const BitString& s);

/// Integer code ((1s))_2 - 1; a bijection between bit strings and n >= 1.
BigInt integer_code(const BitString& s);

/// Inverse of integer_code. Throws DomainError for code < 1.
BitString from_integer_code(const BigInt& code);

}  // namespace omega::exact
