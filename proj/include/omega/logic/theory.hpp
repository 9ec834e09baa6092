#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "omega/logic/formula.hpp"

namespace omega::logic {

/// Finite set of axioms, deduplicated up to syntactic identity.
class Theory {
 public:
  Theory() = default;
  explicit Theory(std::vector<Formula> axioms);
  Theory(std::initializer_list<Formula> axioms) : Theory(std::vector<Formula>(axioms)) {}

  const std::vector<Formula>& axioms() const noexcept { return axioms_; }
  std::size_t size() const noexcept { return axioms_.size(); }
  bool empty() const noexcept { return axioms_.empty(); }

  std::set<std::uint32_t> atoms() const;
  /// Conjunction of the axioms in stored order; T for the empty theory.
  Formula conjunction() const;
  /// "{a; b; c}"
  std::string str() const;

  friend bool operator==(const Theory&, const Theory&) = default;

 private:
  std::vector<Formula> axioms_;
};

/// One formula per line; '#' starts a comment; blank lines are skipped.
/// Throws InputError carrying the line number.
Theory parse_theory(std::istream& in);
Theory read_theory(const std::filesystem::path& path);
/// Semicolon-separated formulas, e.g. "p0; p0 -> p1". Empty text gives {}.
Theory parse_theory_inline(std::string_view text);

/// Truth assignment with a default for atoms not mentioned.
class Valuation {
 public:
  explicit Valuation(bool default_value = false) : default_(default_value) {}
  Valuation(std::map<std::uint32_t, bool> values, bool default_value = false)
      : values_(std::move(values)), default_(default_value) {}

  bool operator()(std::uint32_t atom) const;
  void set(std::uint32_t atom, bool value) { values_[atom] = value; }
  /// Row `bits` of a truth table over `atoms` (bit i gives the i-th atom).
  static Valuation from_row(const std::vector<std::uint32_t>& atoms, std::uint64_t bits);
  /// "p0=1,p3=0;default=0"
  std::string str() const;
  /// Inverse of str(); also accepts "p0=1,p1=0" without a default clause.
  static Valuation parse(std::string_view text);

 private:
  std::map<std::uint32_t, bool> values_;
  bool default_;
};

bool evaluate(const Valuation& v, const Formula& f);
bool satisfies(const Valuation& v, const Theory& t);

}  // namespace omega::logic
