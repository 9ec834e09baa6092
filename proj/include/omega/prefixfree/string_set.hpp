#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <vector>

#include "omega/error.hpp"
#include "omega/exact/bitstring.hpp"
#include "omega/exact/rational.hpp"
#include "omega/util/random.hpp"

namespace omega::prefixfree {

using exact::BitString;
using exact::Rational;

/// Finite deduplicated set of bit strings, stored in lexicographic order.
class StringSet {
 public:
  StringSet() = default;
  explicit StringSet(std::vector<BitString> elements);

  const std::vector<BitString>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(const BitString& s) const;

  /// Union; duplicates collapse.
  StringSet merged(const StringSet& other) const;

  friend bool operator==(const StringSet&, const StringSet&) = default;

 private:
  std::vector<BitString> elements_;
};

/// `prefix` is a proper prefix of `extension`.
struct PrefixWitness {
  BitString prefix;
  BitString extension;
};

/// |s| < |t| and t starts with s.
bool is_proper_prefix(const BitString& s, const BitString& t);

/// nullopt when no element is a proper prefix of another; otherwise one
/// offending pair (the lexicographically first prefix and its first extension).
std::optional<PrefixWitness> check_prefix_free(const StringSet& set);

/// Raised where prefix-freeness is a precondition.
class NotPrefixFreeError : public PreconditionError {
 public:
  explicit NotPrefixFreeError(PrefixWitness witness);
  const PrefixWitness& witness() const noexcept { return witness_; }

 private:
  PrefixWitness witness_;
};

/// Omega_S = sum over s in S of 2^-|s|. No prefix-freeness required.
Rational omega(const StringSet& set);

/// Deterministic single-consumer enumerator of distinct bit strings.
class StreamedFamily {
 public:
  using Generator = std::function<std::optional<BitString>()>;

  explicit StreamedFamily(Generator generator) : generator_(std::move(generator)) {}

  /// Next string, or nullopt once the family is exhausted.
  std::optional<BitString> next();
  std::size_t emitted() const noexcept { return emitted_; }

 private:
  Generator generator_;
  std::size_t emitted_ = 0;
};

/// The infinite prefix-free family {1, 00, 010, 0110, 01110, ...}.
StreamedFamily chain_family();

/// A StreamedFamily over a fixed list.
StreamedFamily finite_family(std::vector<BitString> strings);

struct PartialOmega {
  Rational value;
  std::size_t terms = 0;   // strings actually summed
  bool exhausted = false;  // family ended before the requested count
};

/// Exact Omega of the next k strings the family emits.
PartialOmega omega_partial(StreamedFamily& family, std::size_t k);

struct IntervalIdentityReport {
  Rational interval_measure;  // Lebesgue measure of the union of I_s
  Rational omega;             // Omega_S
  bool equal = false;
};

/// Computes both sides of L(union I_s) = Omega_S independently.
/// Throws NotPrefixFreeError when S is not prefix-free.
IntervalIdentityReport interval_measure_equals_omega(const StringSet& set);

/// Leaves of a random binary trie of depth <= max_depth, each leaf kept with
/// probability keep_num / keep_den. Prefix-free by construction.
StringSet random_prefix_free_set(util::Rng& rng, std::size_t max_depth, std::uint64_t keep_num = 3,
                                 std::uint64_t keep_den = 4);

/// One 0/1 string per line; '#' starts a comment; blank lines are skipped.
/// Throws InputError (with line number) on garbage or when no string is given.
StringSet parse_string_set(std::istream& in);
StringSet read_string_set(const std::filesystem::path& path);

}  // namespace omega::prefixfree
