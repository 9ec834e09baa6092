#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "omega/exact/rational.hpp"
#include "omega/logic/formula.hpp"

namespace omega::logic {

using exact::BigInt;

/// Identifies the sentence order below; embedded in every report that
/// depends on it.
inline constexpr const char* kEnumerationVersion = "psi-lenlex-v1";

/// Token alphabet in its declared order:
///   ⊥ ⊤ p 0 1 2 3 4 5 6 7 8 9 ¬ ∧ ∨ → ↔ ( )
/// Sentences are serialized fully parenthesized:
///   F := ⊥ | ⊤ | p N | ¬F | (F op F),  N := 0 | [1-9][0-9]*
/// and ordered by (token length, lexicographic token order), 1-indexed.
namespace token {
inline constexpr std::uint8_t kFalse = 0;
inline constexpr std::uint8_t kTrue = 1;
inline constexpr std::uint8_t kP = 2;
inline constexpr std::uint8_t kDigit0 = 3;
inline constexpr std::uint8_t kNot = 13;
inline constexpr std::uint8_t kAnd = 14;
inline constexpr std::uint8_t kOr = 15;
inline constexpr std::uint8_t kImplies = 16;
inline constexpr std::uint8_t kIff = 17;
inline constexpr std::uint8_t kLeft = 18;
inline constexpr std::uint8_t kRight = 19;
inline constexpr std::uint8_t kCount = 20;
}  // namespace token

using TokenString = std::vector<std::uint8_t>;

TokenString canonical_tokens(const Formula& f);
/// Unicode rendering of a token string, e.g. "(p0∧¬p1)".
std::string render_tokens(const TokenString& tokens);
/// The formula a well-formed token string denotes, or nullopt.
std::optional<Formula> formula_from_tokens(const TokenString& tokens);
bool is_well_formed(const TokenString& tokens);

/// Number of well-formed token strings of exactly `length` tokens.
BigInt sentences_of_length(std::size_t length);
/// 1-based index n with psi_n = f.
BigInt sentence_rank(const Formula& f);
BigInt token_rank(const TokenString& tokens);
/// psi_n. Throws DomainError for n < 1.
TokenString token_unrank(const BigInt& n);
Formula sentence_unrank(const BigInt& n);
/// The well-formed token string right after `tokens` in the order.
/// Throws DomainError when `tokens` is not well formed.
TokenString next_sentence(const TokenString& tokens);

/// Cached prefix psi_1, psi_2, ... of the enumeration. Thread-safe: the
/// cache only grows, and readers always see a consistent prefix.
class SentenceEnumeration {
 public:
  /// psi_n for n >= 1. Indices past the cache limit are unranked directly.
  Formula sentence(std::uint64_t n);
  TokenString tokens(std::uint64_t n);
  /// psi_1 .. psi_k.
  std::vector<Formula> first(std::size_t k);

  static SentenceEnumeration& shared();

 private:
  static constexpr std::size_t kCacheLimit = 1U << 20;
  void extend_to(std::size_t k);

  std::mutex mutex_;
  std::vector<TokenString> token_cache_;
  std::vector<Formula> formula_cache_;
};

}  // namespace omega::logic
