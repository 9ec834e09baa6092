#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "omega/logic/formula.hpp"
#include "omega/logic/theory.hpp"

namespace omega::logic {

/// First-order sentence over a relational vocabulary with built-in equality.
/// `x < y` is shorthand for the binary relation named "<".
class FoFormula {
 public:
  enum class Kind : std::uint8_t { False, True, Relation, Equal, Not, And, Or, Implies, Iff, Forall, Exists };

  static FoFormula constant(bool value);
  static FoFormula relation(std::string name, std::vector<std::string> arguments);
  static FoFormula equal(std::string x, std::string y);
  static FoFormula negation(FoFormula f);
  static FoFormula binary(Kind kind, FoFormula lhs, FoFormula rhs);
  static FoFormula quantified(Kind kind, std::string variable, FoFormula body);

  Kind kind() const { return node_->kind; }
  /// Relation name, or the bound variable of a quantifier.
  const std::string& name() const { return node_->name; }
  const std::vector<std::string>& arguments() const { return node_->arguments; }
  const FoFormula& lhs() const { return *node_->lhs; }
  const FoFormula& rhs() const { return *node_->rhs; }

  std::set<std::string> free_variables() const;
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<std::string> arguments;
    std::shared_ptr<const FoFormula> lhs;
    std::shared_ptr<const FoFormula> rhs;
  };
  explicit FoFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Propositional syntax plus `forall x. φ`, `exists x. φ` (scope extends as
/// far right as possible), `R(x, y)`, `x = y`, `x < y`, and bare identifiers
/// as nullary relations. Throws ParseError.
FoFormula parse_fo_formula(std::string_view text);

using FoTheory = std::vector<FoFormula>;
/// One sentence per line, '#' comments.
FoTheory parse_fo_theory(std::istream& in);
FoTheory read_fo_theory(const std::filesystem::path& path);

/// Atom p_i becomes the nullary relation "p<i>".
FoFormula embed(const Formula& f);
FoTheory embed(const Theory& t);

struct RelationTable {
  std::size_t arity = 0;
  std::set<std::vector<std::size_t>> tuples;  // element indices
};

/// Finite structure: a nonempty universe and relation tables.
class FiniteStructure {
 public:
  /// Throws DomainError on an empty or repeated universe.
  explicit FiniteStructure(std::vector<std::string> universe);

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_.size(); }
  const std::map<std::string, RelationTable>& relations() const noexcept { return relations_; }

  /// Declares an empty relation (replacing any previous one).
  void declare(const std::string& name, std::size_t arity);
  /// Adds a tuple of element names. Throws DomainError on undeclared
  /// relations, arity mismatches or unknown elements.
  void add(const std::string& name, const std::vector<std::string>& tuple);
  std::size_t element(const std::string& name) const;

 private:
  std::vector<std::string> universe_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, RelationTable> relations_;
};

/// ({1..n}, <).
FiniteStructure linear_order(std::size_t n);
/// One-element structure whose nullary relations p<i> follow the valuation
/// on the given atoms.
FiniteStructure valuation_structure(const Valuation& v, const std::vector<std::uint32_t>& atoms);

/// Format: "universe a b c", then blocks "relation NAME ARITY" followed by
/// one tuple per line (a nullary relation lists the single line "true").
/// '#' starts a comment. Throws InputError with a line number.
FiniteStructure parse_structure(std::istream& in);
FiniteStructure read_structure(const std::filesystem::path& path);

/// M |= φ by expanding quantifiers over the universe. Throws
/// PreconditionError for free variables, unknown relations or arity mismatch.
bool fo_models(const FiniteStructure& m, const FoFormula& phi);
bool fo_models(const FiniteStructure& m, const FoTheory& t);

}  // namespace omega::logic
