#include "omega/prefixfree/string_set.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <string>

#include "omega/exact/interval.hpp"

namespace omega::prefixfree {

StringSet::StringSet(std::vector<BitString> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool StringSet::contains(const BitString& s) const { return std::binary_search(elements_.begin(), elements_.end(), s); }

StringSet StringSet::merged(const StringSet& other) const {
  std::vector<BitString> all = elements_;
  all.insert(all.end(), other.elements_.begin(), other.elements_.end());
  return StringSet(std::move(all));
}

bool is_proper_prefix(const BitString& s, const BitString& t) { return s.size() < t.size() && s.is_prefix_of(t); }

std::optional<PrefixWitness> check_prefix_free(const StringSet& set) {
  // In lexicographic order every extension of s sits right after s.
  const auto& e = set.elements();
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (is_proper_prefix(e[i - 1], e[i])) return PrefixWitness{e[i - 1], e[i]};
  }
  return std::nullopt;
}

NotPrefixFreeError::NotPrefixFreeError(PrefixWitness witness)
    : PreconditionError("set is not prefix-free: " + witness.prefix.str() + " is a proper prefix of " +
                        witness.extension.str()),
      witness_(std::move(witness)) {}

Rational omega(const StringSet& set) {
  std::map<std::size_t, std::size_t> per_length;
  for (const auto& s : set.elements()) ++per_length[s.size()];
  Rational total = 0;
  for (const auto& [length, count] : per_length) {
    total += Rational(count) * exact::pow2(-static_cast<std::int64_t>(length));
  }
  return total;
}

std::optional<BitString> StreamedFamily::next() {
  auto s = generator_();
  if (s) ++emitted_;
  return s;
}

StreamedFamily chain_family() {
  std::size_t n = 0;
  return StreamedFamily([n]() mutable -> std::optional<BitString> {
    const std::size_t k = n++;
    if (k == 0) return BitString::parse("1");
    // k-th member after "1" is 0 1^(k-1) 0.
    std::vector<bool> bits(k + 1, true);
    bits.front() = false;
    bits.back() = false;
    return BitString(std::move(bits));
  });
}

StreamedFamily finite_family(std::vector<BitString> strings) {
  std::size_t next = 0;
  return StreamedFamily([strings = std::move(strings), next]() mutable -> std::optional<BitString> {
    if (next >= strings.size()) return std::nullopt;
    return strings[next++];
  });
}

PartialOmega omega_partial(StreamedFamily& family, std::size_t k) {
  PartialOmega out;
  out.value = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto s = family.next();
    if (!s) {
      out.exhausted = true;
      break;
    }
    out.value += exact::pow2(-static_cast<std::int64_t>(s->size()));
    ++out.terms;
  }
  return out;
}

IntervalIdentityReport interval_measure_equals_omega(const StringSet& set) {
  if (auto witness = check_prefix_free(set)) throw NotPrefixFreeError(*witness);
  std::vector<exact::DyadicInterval> intervals;
  intervals.reserve(set.size());
  for (const auto& s : set.elements()) intervals.push_back(exact::interval_of(s));
  IntervalIdentityReport report;
  report.interval_measure = exact::measure_of_disjoint_union(intervals);
  report.omega = omega(set);
  report.equal = report.interval_measure == report.omega;
  return report;
}

namespace {

void grow_trie(util::Rng& rng, std::vector<bool>& path, std::size_t max_depth, std::uint64_t keep_num,
               std::uint64_t keep_den, std::vector<BitString>& leaves) {
  // The root always splits so that no leaf is the empty string.
  const bool split = path.empty() || (path.size() < max_depth && util::chance(rng, 3, 5));
  if (!split) {
    if (util::chance(rng, keep_num, keep_den)) leaves.emplace_back(path);
    return;
  }
  for (const bool bit : {false, true}) {
    path.push_back(bit);
    grow_trie(rng, path, max_depth, keep_num, keep_den, leaves);
    path.pop_back();
  }
}

}  // namespace

StringSet random_prefix_free_set(util::Rng& rng, std::size_t max_depth, std::uint64_t keep_num,
                                 std::uint64_t keep_den) {
  if (max_depth == 0) throw DomainError("trie depth must be at least 1");
  std::vector<bool> path;
  std::vector<BitString> leaves;
  grow_trie(rng, path, max_depth, keep_num, keep_den, leaves);
  return StringSet(std::move(leaves));
}

StringSet parse_string_set(std::istream& in) {
  std::vector<BitString> elements;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    try {
      elements.push_back(BitString::parse(token));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (elements.empty()) throw InputError("string set file contains no strings");
  return StringSet(std::move(elements));
}

StringSet read_string_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read string set file '" + path.string() + "'");
  try {
    return parse_string_set(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace omega::prefixfree
