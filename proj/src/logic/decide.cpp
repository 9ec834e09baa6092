#include "omega/logic/decide.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "omega/error.hpp"

namespace omega::logic {

namespace {

constexpr std::uint64_t kLowPatterns[6] = {0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
                                           0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};

std::uint64_t last_word_mask(std::size_t rows) { return rows % 64 == 0 ? ~0ULL : (1ULL << (rows % 64)) - 1; }

std::vector<std::uint32_t> union_atoms(const Theory& t, const Theory& u) {
  auto atoms = t.atoms();
  atoms.merge(u.atoms());
  return {atoms.begin(), atoms.end()};
}

}  // namespace

TruthTable::TruthTable(std::size_t atom_count, bool value)
    : rows_(std::size_t{1} << atom_count), words_((rows_ + 63) / 64, value ? ~0ULL : 0ULL) {
  if (value) words_.back() &= last_word_mask(rows_);
}

TruthTable TruthTable::build(const Formula& f, const std::vector<std::uint32_t>& atoms) {
  const std::size_t n = atoms.size();
  switch (f.connective()) {
    case Connective::False:
      return TruthTable(n, false);
    case Connective::True:
      return TruthTable(n, true);
    case Connective::Atom: {
      const auto it = std::find(atoms.begin(), atoms.end(), f.atom_index());
      if (it == atoms.end()) throw DomainError("atom p" + std::to_string(f.atom_index()) + " missing from table");
      const auto i = static_cast<std::size_t>(it - atoms.begin());
      TruthTable t(n, false);
      for (std::size_t w = 0; w < t.words_.size(); ++w) {
        t.words_[w] = i < 6 ? kLowPatterns[i] : (((w >> (i - 6)) & 1U) != 0 ? ~0ULL : 0ULL);
      }
      t.words_.back() &= last_word_mask(t.rows_);
      return t;
    }
    case Connective::Not: {
      TruthTable t = build(f.lhs(), atoms);
      for (auto& w : t.words_) w = ~w;
      t.words_.back() &= last_word_mask(t.rows_);
      return t;
    }
    default: {
      TruthTable a = build(f.lhs(), atoms);
      const TruthTable b = build(f.rhs(), atoms);
      for (std::size_t w = 0; w < a.words_.size(); ++w) {
        switch (f.connective()) {
          case Connective::And:
            a.words_[w] &= b.words_[w];
            break;
          case Connective::Or:
            a.words_[w] |= b.words_[w];
            break;
          case Connective::Implies:
            a.words_[w] = ~a.words_[w] | b.words_[w];
            break;
          default:
            a.words_[w] = ~(a.words_[w] ^ b.words_[w]);
        }
      }
      a.words_.back() &= last_word_mask(a.rows_);
      return a;
    }
  }
}

TruthTable::TruthTable(const Formula& f, const std::vector<std::uint32_t>& atoms) {
  if (atoms.size() > kMaxAtoms) throw DomainError("truth table limited to " + std::to_string(kMaxAtoms) + " atoms");
  *this = build(f, atoms);
}

TruthTable::TruthTable(const Theory& t, const std::vector<std::uint32_t>& atoms) : TruthTable(atoms.size(), true) {
  if (atoms.size() > kMaxAtoms) throw DomainError("truth table limited to " + std::to_string(kMaxAtoms) + " atoms");
  for (const auto& axiom : t.axioms()) {
    const TruthTable a = build(axiom, atoms);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= a.words_[w];
  }
}

bool TruthTable::subset_of(const TruthTable& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool TruthTable::all() const {
  for (std::size_t w = 0; w + 1 < words_.size(); ++w) {
    if (words_[w] != ~0ULL) return false;
  }
  return words_.back() == last_word_mask(rows_);
}

bool TruthTable::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::uint64_t table_mask(const Formula& f, const std::vector<std::uint32_t>& atoms) {
  if (atoms.size() > 6) throw DomainError("packed truth tables hold at most 6 atoms");
  return TruthTable(f, atoms).words().front();
}

std::uint64_t table_mask(const Theory& t, const std::vector<std::uint32_t>& atoms) {
  if (atoms.size() > 6) throw DomainError("packed truth tables hold at most 6 atoms");
  return TruthTable(t, atoms).words().front();
}

namespace {

class Tseitin {
 public:
  explicit Tseitin(const std::vector<std::uint32_t>& atoms) {
    for (const auto a : atoms) atom_var_[a] = fresh();
  }

  std::int32_t encode(const Formula& f) {
    switch (f.connective()) {
      case Connective::False:
      case Connective::True: {
        const std::int32_t v = fresh();
        clauses_.push_back({f.connective() == Connective::True ? v : -v});
        return v;
      }
      case Connective::Atom:
        return atom_var_.at(f.atom_index());
      case Connective::Not:
        return -encode(f.lhs());
      default: {
        const std::int32_t a = encode(f.lhs());
        const std::int32_t b = encode(f.rhs());
        const std::int32_t g = fresh();
        switch (f.connective()) {
          case Connective::And:
            clauses_.push_back({-g, a});
            clauses_.push_back({-g, b});
            clauses_.push_back({g, -a, -b});
            break;
          case Connective::Or:
            clauses_.push_back({-g, a, b});
            clauses_.push_back({g, -a});
            clauses_.push_back({g, -b});
            break;
          case Connective::Implies:
            clauses_.push_back({-g, -a, b});
            clauses_.push_back({g, a});
            clauses_.push_back({g, -b});
            break;
          default:
            clauses_.push_back({-g, -a, b});
            clauses_.push_back({-g, a, -b});
            clauses_.push_back({g, a, b});
            clauses_.push_back({g, -a, -b});
        }
        return g;
      }
    }
  }

  void assert_literal(std::int32_t lit) { clauses_.push_back({lit}); }
  void assert_clause(Clause c) { clauses_.push_back(std::move(c)); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t variables() const { return static_cast<std::size_t>(next_ - 1); }

 private:
  std::int32_t fresh() { return next_++; }

  std::map<std::uint32_t, std::int32_t> atom_var_;
  std::vector<Clause> clauses_;
  std::int32_t next_ = 1;
};

enum : std::int8_t { kUnset = 0, kTrue = 1, kFalse = -1 };

std::int8_t literal_value(const std::vector<std::int8_t>& assign, std::int32_t lit) {
  const std::int8_t v = assign[static_cast<std::size_t>(std::abs(lit)) - 1];
  return lit > 0 ? v : static_cast<std::int8_t>(-v);
}

bool dpll_search(const std::vector<Clause>& clauses, std::vector<std::int8_t>& assign) {
  // Unit propagation to a fixed point.
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& clause : clauses) {
      std::int32_t unit = 0;
      std::size_t open = 0;
      bool satisfied = false;
      for (const auto lit : clause) {
        const auto v = literal_value(assign, lit);
        if (v == kTrue) {
          satisfied = true;
          break;
        }
        if (v == kUnset) {
          ++open;
          unit = lit;
        }
      }
      if (satisfied) continue;
      if (open == 0) return false;
      if (open == 1) {
        assign[static_cast<std::size_t>(std::abs(unit)) - 1] = unit > 0 ? kTrue : kFalse;
        changed = true;
      }
    }
  }
  std::int32_t branch = 0;
  for (const auto& clause : clauses) {
    bool satisfied = false;
    std::int32_t candidate = 0;
    for (const auto lit : clause) {
      const auto v = literal_value(assign, lit);
      if (v == kTrue) {
        satisfied = true;
        break;
      }
      if (v == kUnset && candidate == 0) candidate = lit;
    }
    if (!satisfied) {
      branch = candidate;
      break;
    }
  }
  if (branch == 0) return true;
  for (const std::int8_t value : {kTrue, kFalse}) {
    std::vector<std::int8_t> trial = assign;
    trial[static_cast<std::size_t>(std::abs(branch)) - 1] = branch > 0 ? value : static_cast<std::int8_t>(-value);
    if (dpll_search(clauses, trial)) {
      assign = std::move(trial);
      return true;
    }
  }
  return false;
}

bool entails_dpll(const Theory& t, const Theory& u) {
  const auto atoms = union_atoms(t, u);
  Tseitin enc(atoms);
  for (const auto& axiom : t.axioms()) enc.assert_literal(enc.encode(axiom));
  // T and not (u1 and ... and uk) must be unsatisfiable.
  Clause some_fails;
  for (const auto& axiom : u.axioms()) some_fails.push_back(-enc.encode(axiom));
  enc.assert_clause(some_fails);
  return !dpll(enc.clauses(), enc.variables()).has_value();
}

bool entails_table(const Theory& t, const Theory& u) {
  const auto atoms = union_atoms(t, u);
  return TruthTable(t, atoms).subset_of(TruthTable(u, atoms));
}

}  // namespace

std::optional<std::vector<bool>> dpll(const std::vector<Clause>& clauses, std::size_t variables) {
  std::vector<std::int8_t> assign(variables, kUnset);
  if (!dpll_search(clauses, assign)) return std::nullopt;
  std::vector<bool> model(variables);
  for (std::size_t i = 0; i < variables; ++i) model[i] = assign[i] == kTrue;
  return model;
}

bool entails(const Theory& t, const Theory& u, EntailMethod method) {
  if (u.empty()) return true;
  switch (method) {
    case EntailMethod::TruthTable:
      return entails_table(t, u);
    case EntailMethod::Dpll:
      return entails_dpll(t, u);
    case EntailMethod::Auto:
      break;
  }
  return union_atoms(t, u).size() <= 16 ? entails_table(t, u) : entails_dpll(t, u);
}

bool entails(const Theory& t, const Formula& f, EntailMethod method) { return entails(t, Theory{f}, method); }

bool equivalent(const Theory& t, const Theory& u, EntailMethod method) {
  return entails(t, u, method) && entails(u, t, method);
}

bool consistent(const Theory& t, EntailMethod method) { return !entails(t, Formula::falsum(), method); }

Classification classify(const Theory& t, EntailMethod method) {
  if (entails(Theory{}, t, method)) return Classification::Tautological;
  if (!consistent(t, method)) return Classification::Inconsistent;
  return Classification::ConsistentNontautological;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Tautological:
      return "tautological";
    case Classification::ConsistentNontautological:
      return "consistent-nontautological";
    case Classification::Inconsistent:
      return "inconsistent";
  }
  return "?";
}

}  // namespace omega::logic
