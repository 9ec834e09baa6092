#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace omega::logic {

enum class Connective : std::uint8_t { False, True, Atom, Not, And, Or, Implies, Iff };

bool is_binary(Connective c);

/// Immutable propositional formula over atoms p0, p1, ... with shared
/// subtrees. Copying is cheap.
class Formula {
 public:
  static Formula falsum();
  static Formula verum();
  static Formula atom(std::uint32_t index);
  static Formula negation(Formula operand);
  /// Throws DomainError unless `c` is a binary connective.
  static Formula binary(Connective c, Formula lhs, Formula rhs);

  Connective connective() const { return node_->connective; }
  /// Atom index; only meaningful for Connective::Atom.
  std::uint32_t atom_index() const { return node_->atom; }
  /// Operand of a negation or left side of a binary node.
  const Formula& lhs() const;
  const Formula& rhs() const;

  std::set<std::uint32_t> atoms() const;
  std::size_t depth() const;

  /// ASCII rendering in the input grammar with minimal parentheses.
  std::string str() const;

  friend bool operator==(const Formula& a, const Formula& b);
  /// Structural total order; no semantic meaning.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    Connective connective;
    std::uint32_t atom = 0;
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

Formula operator!(const Formula& f);
Formula operator&&(const Formula& a, const Formula& b);
Formula operator||(const Formula& a, const Formula& b);
Formula implies(const Formula& a, const Formula& b);
Formula iff(const Formula& a, const Formula& b);

/// Grammar: atoms p<digits>, constants T and F, operators ! & | -> <->,
/// parentheses; the glyphs ⊤ ⊥ ¬ ∧ ∨ → ↔ are accepted too. Precedence
/// ! > & > | > -> > <->; & and | associate left, -> and <-> associate right. Throws ParseError with a 1-based position.
Formula parse_formula(std::string_view text);

}  // namespace omega::logic
