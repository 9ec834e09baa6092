#include "omega/weights/disagreement.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <optional>
#include <set>
#include <unordered_set>

#include "omega/error.hpp"
#include "omega/logic/decide.hpp"

namespace omega::weights {

using logic::Formula;
namespace tok = logic::token;

std::string Disagreement::status_name() const {
  switch (status) {
    case Status::Equivalent:
      return "equivalent";
    case Status::Found:
      return "found";
    case Status::Unresolved:
      return "unresolved";
  }
  return "unresolved";
}

bool models_entail(std::uint64_t models, const std::vector<std::uint32_t>& universe, const Formula& f) {
  std::vector<std::uint32_t> atoms = universe;
  for (const auto a : f.atoms()) {
    if (std::find(universe.begin(), universe.end(), a) == universe.end()) atoms.push_back(a);
  }
  const logic::TruthTable table(f, atoms);
  const std::size_t base_rows = std::size_t{1} << universe.size();
  const std::size_t rows = std::size_t{1} << atoms.size();
  const auto& words = table.words();
  for (std::size_t r = 0; r < rows; ++r) {
    if (((models >> (r % base_rows)) & 1U) == 0) continue;
    if (((words[r / 64] >> (r % 64)) & 1U) == 0) return false;
  }
  return true;
}

namespace {

constexpr std::array<std::uint8_t, 4> kBinaryOps = {tok::kAnd, tok::kOr, tok::kImplies, tok::kIff};

// Truth functions over at most four atoms fit a dense bitmap.
class FunctionSet {
 public:
  explicit FunctionSet(std::size_t rows) : dense_(rows <= 16) {
    if (dense_) bits_.assign(std::size_t{1} << rows, false);
  }

  bool insert(std::uint64_t f) {
    if (dense_) {
      if (bits_[f]) return false;
      bits_[f] = true;
    } else if (!hash_.insert(f).second) {
      return false;
    }
    items_.push_back(f);
    return true;
  }
  bool contains(std::uint64_t f) const { return dense_ ? static_cast<bool>(bits_[f]) : hash_.count(f) != 0; }
  bool empty() const { return items_.empty(); }
  const std::vector<std::uint64_t>& items() const { return items_; }

 private:
  bool dense_;
  std::vector<bool> bits_;
  std::unordered_set<std::uint64_t> hash_;
  std::vector<std::uint64_t> items_;
};

struct Candidate {
  TokenString tokens;
  std::uint64_t function = 0;
};

TokenString atom_tokens(std::uint32_t index) {
  TokenString out{tok::kP};
  for (const char c : std::to_string(index)) out.push_back(static_cast<std::uint8_t>(tok::kDigit0 + (c - '0')));
  return out;
}

}  // namespace

struct DisagreementFinder::Impl {
  std::size_t rows = 0;
  std::uint64_t full = 0;
  std::size_t max_length = 0;
  std::vector<std::pair<TokenString, std::uint64_t>> atoms;  // sorted by token string

  std::mutex build_mutex;
  std::vector<std::unique_ptr<FunctionSet>> levels;  // levels[l]: functions of strings of exactly l tokens
  std::atomic<std::size_t> built{1};

  std::mutex cache_mutex;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Disagreement> cache;

  std::uint64_t apply(std::uint8_t op, std::uint64_t a, std::uint64_t b) const {
    switch (op) {
      case tok::kAnd:
        return a & b;
      case tok::kOr:
        return a | b;
      case tok::kImplies:
        return (~a | b) & full;
      default:
        return ~(a ^ b) & full;
    }
  }

  const FunctionSet& level(std::size_t length) {
    if (length < built.load(std::memory_order_acquire)) return *levels[length];
    std::lock_guard lock(build_mutex);
    while (built.load(std::memory_order_relaxed) <= length) {
      const std::size_t l = built.load(std::memory_order_relaxed);
      auto set = std::make_unique<FunctionSet>(rows);
      if (l == 1) {
        set->insert(0);
        set->insert(full);
      }
      for (const auto& [tokens, f] : atoms) {
        if (tokens.size() == l) set->insert(f);
      }
      if (l >= 2) {
        for (const auto g : levels[l - 1]->items()) set->insert(~g & full);
      }
      for (std::size_t i = 1; i + 4 <= l; ++i) {
        const std::size_t j = l - 3 - i;
        for (const auto a : levels[i]->items()) {
          for (const auto b : levels[j]->items()) {
            for (const auto op : kBinaryOps) set->insert(apply(op, a, b));
          }
        }
      }
      levels[l] = std::move(set);
      built.store(l + 1, std::memory_order_release);
    }
    return *levels[length];
  }

  // Least string of exactly `length` tokens whose function lies in `target`
  // (a nonempty subset of level(length)).
  Candidate lexmin(std::size_t length, const FunctionSet& target) {
    if (length == 1) {
      if (target.contains(0)) return {{tok::kFalse}, 0};
      return {{tok::kTrue}, full};
    }
    for (const auto& [tokens, f] : atoms) {
      if (tokens.size() == length && target.contains(f)) return {tokens, f};
    }
    // ¬ precedes ( in the token order.
    {
      FunctionSet inner(rows);
      for (const auto g : level(length - 1).items()) {
        if (target.contains(~g & full)) inner.insert(g);
      }
      if (!inner.empty()) {
        Candidate c = lexmin(length - 1, inner);
        c.tokens.insert(c.tokens.begin(), tok::kNot);
        c.function = ~c.function & full;
        return c;
      }
    }
    // Splits with a constant or an atom on the left are checked first: their
    // strings start with "(⊥", "(⊤" or "(p" and beat any other left operand.
    std::optional<Candidate> best;
    const auto try_split = [&](std::size_t i, const Candidate& left) -> std::optional<Candidate> {
      const std::size_t j = length - 3 - i;
      for (const auto op : kBinaryOps) {
        FunctionSet right(rows);
        for (const auto h : level(j).items()) {
          if (target.contains(apply(op, left.function, h))) right.insert(h);
        }
        if (right.empty()) continue;
        const Candidate r = lexmin(j, right);
        Candidate c;
        c.tokens.push_back(tok::kLeft);
        c.tokens.insert(c.tokens.end(), left.tokens.begin(), left.tokens.end());
        c.tokens.push_back(op);
        c.tokens.insert(c.tokens.end(), r.tokens.begin(), r.tokens.end());
        c.tokens.push_back(tok::kRight);
        c.function = apply(op, left.function, r.function);
        return c;
      }
      return std::nullopt;
    };
    if (length >= 5) {
      for (const Candidate& constant : {Candidate{{tok::kFalse}, 0}, Candidate{{tok::kTrue}, full}}) {
        if (auto c = try_split(1, constant)) return *c;
      }
    }
    for (const auto& [tokens, f] : atoms) {
      if (tokens.size() + 4 > length) continue;
      if (auto c = try_split(tokens.size(), Candidate{tokens, f})) {
        if (!best || c->tokens < best->tokens) best = std::move(c);
      }
    }
    if (best) return *best;
    for (std::size_t i = 2; i + 4 <= length; ++i) {
      const std::size_t j = length - 3 - i;
      FunctionSet left(rows);
      const auto& rights = level(j).items();
      for (const auto g : level(i).items()) {
        bool usable = false;
        for (const auto op : kBinaryOps) {
          for (const auto h : rights) {
            if (target.contains(apply(op, g, h))) {
              usable = true;
              break;
            }
          }
          if (usable) break;
        }
        if (usable) left.insert(g);
      }
      if (left.empty()) continue;
      // Constants and atoms on the left were ruled out above, so the least
      // left operand here starts with ¬ or (.
      const Candidate a = lexmin(i, left);
      if (best && std::lexicographical_compare(best->tokens.begin() + 1, best->tokens.end(), a.tokens.begin(),
                                               a.tokens.end())) {
        continue;
      }
      if (auto c = try_split(i, a)) {
        if (!best || c->tokens < best->tokens) best = std::move(c);
      }
    }
    if (!best) throw DomainError("internal: no string of length " + std::to_string(length) + " hits the target");
    return *best;
  }
};

DisagreementFinder::DisagreementFinder(std::vector<std::uint32_t> universe, std::size_t max_length)
    : universe_(std::move(universe)), impl_(std::make_unique<Impl>()) {
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
  if (universe_.size() > kMaxUniverse) {
    throw DomainError("disagreement search handles at most " + std::to_string(kMaxUniverse) + " atoms (got " +
                      std::to_string(universe_.size()) + ")");
  }
  if (max_length < 1) throw DomainError("maximum sentence length must be positive");
  impl_->rows = std::size_t{1} << universe_.size();
  impl_->full = impl_->rows == 64 ? ~0ULL : (1ULL << impl_->rows) - 1;
  impl_->max_length = max_length;
  impl_->levels.resize(max_length + 1);
  for (const auto a : universe_) impl_->atoms.emplace_back(atom_tokens(a), table_mask(Formula::atom(a), universe_));
  std::sort(impl_->atoms.begin(), impl_->atoms.end());
}

DisagreementFinder::~DisagreementFinder() = default;

std::uint64_t DisagreementFinder::models(const logic::Theory& t) const {
  for (const auto a : t.atoms()) {
    if (!std::binary_search(universe_.begin(), universe_.end(), a)) {
      throw DomainError("atom p" + std::to_string(a) + " lies outside the search universe");
    }
  }
  return logic::table_mask(t, universe_);
}

Disagreement DisagreementFinder::find(const logic::Theory& t, const logic::Theory& u) {
  return find(models(t), models(u));
}

Disagreement DisagreementFinder::find(std::uint64_t models_t, std::uint64_t models_u) {
  const auto key = std::make_pair(models_t, models_u);
  {
    std::lock_guard lock(impl_->cache_mutex);
    if (const auto it = impl_->cache.find(key); it != impl_->cache.end()) return it->second;
  }
  Disagreement d;
  if (models_t == models_u) {
    d.status = Disagreement::Status::Equivalent;
  } else {
    // f separates when exactly one model set lies inside it.
    const auto separates = [&](std::uint64_t f) { return ((models_t & ~f) == 0) != ((models_u & ~f) == 0); };
    for (std::size_t l = 1; l <= impl_->max_length; ++l) {
      FunctionSet target(impl_->rows);
      for (const auto f : impl_->level(l).items()) {
        if (separates(f)) target.insert(f);
      }
      if (target.empty()) continue;
      const Candidate c = impl_->lexmin(l, target);
      d.status = Disagreement::Status::Found;
      d.witness = c.tokens;
      d.index = logic::token_rank(c.tokens);
      d.first_proves = (models_t & ~c.function) == 0;
      break;
    }
  }
  std::lock_guard lock(impl_->cache_mutex);
  impl_->cache.emplace(key, d);
  return d;
}

Disagreement first_disagreement_by_scan(const logic::Theory& t, const logic::Theory& u, std::uint64_t limit) {
  Disagreement d;
  if (logic::equivalent(t, u)) {
    d.status = Disagreement::Status::Equivalent;
    return d;
  }
  TokenString current{tok::kFalse};
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const Formula f = *logic::formula_from_tokens(current);
    const bool in_t = logic::entails(t, f);
    if (in_t != logic::entails(u, f)) {
      d.status = Disagreement::Status::Found;
      d.index = n;
      d.witness = current;
      d.first_proves = in_t;
      return d;
    }
    current = logic::next_sentence(current);
  }
  return d;
}

Disagreement first_disagreement(const logic::Theory& t, const logic::Theory& u, std::uint64_t scan_limit) {
  auto atoms = t.atoms();
  atoms.merge(u.atoms());
  if (atoms.size() > DisagreementFinder::kMaxUniverse) return first_disagreement_by_scan(t, u, scan_limit);
  DisagreementFinder finder({atoms.begin(), atoms.end()});
  return finder.find(t, u);
}

namespace {

// Walks psi_{n+1}, psi_{n+2}, ... and reports for each whether T and U prove it.
class Window {
 public:
  Window(const DisagreementFinder& finder, std::uint64_t models_t, std::uint64_t models_u, TokenString start)
      : finder_(finder), models_t_(models_t), models_u_(models_u), current_(std::move(start)) {}

  std::pair<bool, bool> next() {
    current_ = logic::next_sentence(current_);
    const Formula f = *logic::formula_from_tokens(current_);
    return {models_entail(models_t_, finder_.universe(), f), models_entail(models_u_, finder_.universe(), f)};
  }

 private:
  const DisagreementFinder& finder_;
  std::uint64_t models_t_;
  std::uint64_t models_u_;
  TokenString current_;
};

}  // namespace

SeparationCertificate separate_v(DisagreementFinder& finder, std::uint64_t models_t, std::uint64_t models_u,
                                 std::size_t max_window) {
  SeparationCertificate cert;
  cert.disagreement = finder.find(models_t, models_u);
  if (cert.disagreement.status != Disagreement::Status::Found) return cert;
  // Relative to 2^-n: the prover gets 1 + sum_i 2^-i (bits of its own),
  // the other sum_i 2^-i bits + 2^-j for the unknown tail.
  const bool t_heavy = cert.disagreement.first_proves;
  Window window(finder, models_t, models_u, cert.disagreement.witness);
  cert.heavier_lower = 1;
  Rational lighter_partial = 0;
  for (std::size_t j = 0; j <= max_window; ++j) {
    cert.window = j;
    cert.lighter_upper = lighter_partial + exact::pow2(-static_cast<std::int64_t>(j));
    if (cert.lighter_upper < cert.heavier_lower) {
      cert.separated = true;
      return cert;
    }
    if (j == max_window) break;
    const auto [in_t, in_u] = window.next();
    const Rational step = exact::pow2(-static_cast<std::int64_t>(j + 1));
    if (t_heavy ? in_t : in_u) cert.heavier_lower += step;
    if (t_heavy ? in_u : in_t) lighter_partial += step;
  }
  return cert;
}

SeparationCertificate separate_vab(DisagreementFinder& finder, std::uint64_t models_t, std::uint64_t models_u,
                                   const AlphaSpec& spec, std::size_t max_window) {
  SeparationCertificate cert;
  cert.disagreement = finder.find(models_t, models_u);
  if (cert.disagreement.status != Disagreement::Status::Found) return cert;
  std::size_t n = 0;
  if (spec.is_geometric()) {
    n = 1;  // relative coefficients do not depend on n
  } else {
    if (cert.disagreement.index > spec.max_terms()) return cert;
    n = static_cast<std::size_t>(cert.disagreement.index);
    max_window = std::min(max_window, spec.max_terms() - n);
  }
  const bool t_heavy = cert.disagreement.first_proves;
  Window window(finder, models_t, models_u, cert.disagreement.witness);
  cert.heavier_lower = spec.b();
  Rational lighter_partial = spec.a();
  for (std::size_t j = 0; j <= max_window; ++j) {
    cert.window = j;
    cert.lighter_upper = lighter_partial + spec.b() * spec.relative_tail(n, j);
    if (cert.lighter_upper < cert.heavier_lower) {
      cert.separated = true;
      return cert;
    }
    if (j == max_window) break;
    const auto [in_t, in_u] = window.next();
    const Rational rel = spec.relative(n, j + 1);
    cert.heavier_lower += rel * ((t_heavy ? in_t : in_u) ? spec.b() : spec.a());
    lighter_partial += rel * ((t_heavy ? in_u : in_t) ? spec.b() : spec.a());
  }
  return cert;
}

}  // namespace omega::weights
