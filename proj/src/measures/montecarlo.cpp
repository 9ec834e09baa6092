#include "omega/measures/montecarlo.hpp"

#include <array>
#include <vector>

#include "omega/error.hpp"
#include "omega/util/random.hpp"

namespace omega::measures {

namespace {

constexpr std::uint64_t kBlock = 4096;

// Binary trie of S; leaves are the elements.
class Trie {
 public:
  explicit Trie(const prefixfree::StringSet& set) : nodes_(1) {
    for (const auto& s : set.elements()) {
      std::size_t at = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        const int b = s[i] ? 1 : 0;
        if (nodes_[at].child[b] == 0) {
          nodes_[at].child[b] = nodes_.size();
          nodes_.push_back({});
        }
        at = nodes_[at].child[b];
      }
      nodes_[at].terminal = true;
    }
  }

  bool sample(util::Rng& rng) const {
    if (nodes_[0].child[0] == 0 && nodes_[0].child[1] == 0) return false;
    std::size_t at = 0;
    while (!nodes_[at].terminal) {
      const int bit = static_cast<int>(rng() >> 63U);  // tails = 1
      at = nodes_[at].child[bit];
      if (at == 0) return false;
    }
    return true;
  }

 private:
  struct Node {
    std::array<std::size_t, 2> child{0, 0};
    bool terminal = false;
  };
  std::vector<Node> nodes_;
};

McReport sample(const prefixfree::StringSet& set, std::uint64_t trials, std::uint64_t seed, bool parallel) {
  if (trials == 0) throw DomainError("trials must be at least 1");
  if (const auto w = prefixfree::check_prefix_free(set)) throw prefixfree::NotPrefixFreeError(*w);
  const Trie trie(set);
  const auto blocks = static_cast<std::ptrdiff_t>((trials + kBlock - 1) / kBlock);
  std::uint64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits) if (parallel)
  for (std::ptrdiff_t b = 0; b < blocks; ++b) {
    util::Rng rng = util::stream_rng(seed, static_cast<std::uint64_t>(b));
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t end = std::min(trials, begin + kBlock);
    for (std::uint64_t t = begin; t < end; ++t) hits += trie.sample(rng) ? 1 : 0;
  }
  McReport r;
  r.trials = trials;
  r.hits = hits;
  r.estimate = exact::Rational(exact::BigInt(hits), exact::BigInt(trials));
  r.target = prefixfree::omega(set);
  r.seed = seed;
  r.rng = util::kRngAlgorithm;
  return r;
}

}  // namespace

McReport sample_real_prefix(const prefixfree::StringSet& set, std::uint64_t trials, std::uint64_t seed) {
  return sample(set, trials, seed, true);
}

McReport sample_real_prefix_serial(const prefixfree::StringSet& set, std::uint64_t trials, std::uint64_t seed) {
  return sample(set, trials, seed, false);
}

}  // namespace omega::measures
