#include "omega/logic/formula.hpp"

#include <cctype>
#include <limits>

#include "omega/error.hpp"

namespace omega::logic {

bool is_binary(Connective c) {
  return c == Connective::And || c == Connective::Or || c == Connective::Implies || c == Connective::Iff;
}

Formula Formula::falsum() {
  static const Formula f(std::make_shared<const Node>(Node{Connective::False}));
  return f;
}

Formula Formula::verum() {
  static const Formula f(std::make_shared<const Node>(Node{Connective::True}));
  return f;
}

Formula Formula::atom(std::uint32_t index) {
  return Formula(std::make_shared<const Node>(Node{Connective::Atom, index}));
}

Formula Formula::negation(Formula operand) {
  return Formula(
      std::make_shared<const Node>(Node{Connective::Not, 0, std::make_shared<const Formula>(std::move(operand))}));
}

Formula Formula::binary(Connective c, Formula lhs, Formula rhs) {
  if (!is_binary(c)) throw DomainError("not a binary connective");
  return Formula(std::make_shared<const Node>(Node{c, 0, std::make_shared<const Formula>(std::move(lhs)),
                                                   std::make_shared<const Formula>(std::move(rhs))}));
}

const Formula& Formula::lhs() const {
  if (!node_->lhs) throw DomainError("formula has no operand");
  return *node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!node_->rhs) throw DomainError("formula has no right operand");
  return *node_->rhs;
}

namespace {

void collect_atoms(const Formula& f, std::set<std::uint32_t>& out) {
  switch (f.connective()) {
    case Connective::False:
    case Connective::True:
      return;
    case Connective::Atom:
      out.insert(f.atom_index());
      return;
    case Connective::Not:
      collect_atoms(f.lhs(), out);
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

int precedence(Connective c) {
  switch (c) {
    case Connective::Iff:
      return 1;
    case Connective::Implies:
      return 2;
    case Connective::Or:
      return 3;
    case Connective::And:
      return 4;
    case Connective::Not:
      return 5;
    default:
      return 6;
  }
}

bool right_associative(Connective c) { return c == Connective::Implies || c == Connective::Iff; }

const char* symbol(Connective c) {
  switch (c) {
    case Connective::And:
      return " & ";
    case Connective::Or:
      return " | ";
    case Connective::Implies:
      return " -> ";
    default:
      return " <-> ";
  }
}

void render(const Formula& f, std::string& out) {
  const auto c = f.connective();
  switch (c) {
    case Connective::False:
      out += 'F';
      return;
    case Connective::True:
      out += 'T';
      return;
    case Connective::Atom:
      out += 'p';
      out += std::to_string(f.atom_index());
      return;
    case Connective::Not: {
      out += '!';
      const bool wrap = precedence(f.lhs().connective()) < precedence(c);
      if (wrap) out += '(';
      render(f.lhs(), out);
      if (wrap) out += ')';
      return;
    }
    default: {
      const int p = precedence(c);
      const int pl = precedence(f.lhs().connective());
      const int pr = precedence(f.rhs().connective());
      const bool wrap_l = pl < p || (pl == p && right_associative(c));
      const bool wrap_r = pr < p || (pr == p && !right_associative(c));
      if (wrap_l) out += '(';
      render(f.lhs(), out);
      if (wrap_l) out += ')';
      out += symbol(c);
      if (wrap_r) out += '(';
      render(f.rhs(), out);
      if (wrap_r) out += ')';
    }
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_ + 1, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (accept("<->") || accept("↔")) return Formula::binary(Connective::Iff, lhs, parse_iff());
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    // "<->" also starts with '<'; only "->" is consumed here.
    if (accept("->") || accept("→")) return Formula::binary(Connective::Implies, lhs, parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept("|") || accept("∨")) f = Formula::binary(Connective::Or, f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept("&") || accept("∧")) f = Formula::binary(Connective::And, f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept("!") || accept("¬")) return Formula::negation(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = parse_iff();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    if (accept("⊤")) return Formula::verum();
    if (accept("⊥")) return Formula::falsum();
    if (c == 'T' || c == 'F') {
      ++pos_;
      return c == 'T' ? Formula::verum() : Formula::falsum();
    }
    if (c == 'p') {
      ++pos_;
      const std::size_t start = pos_;
      std::uint64_t index = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        index = index * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (index > std::numeric_limits<std::uint32_t>::max()) fail("atom index too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected digits after 'p'");
      return Formula::atom(static_cast<std::uint32_t>(index));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::set<std::uint32_t> Formula::atoms() const {
  std::set<std::uint32_t> out;
  collect_atoms(*this, out);
  return out;
}

std::size_t Formula::depth() const {
  switch (connective()) {
    case Connective::False:
    case Connective::True:
    case Connective::Atom:
      return 0;
    case Connective::Not:
      return 1 + lhs().depth();
    default:
      return 1 + std::max(lhs().depth(), rhs().depth());
  }
}

std::string Formula::str() const {
  std::string out;
  render(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.connective() <=> b.connective(); c != 0) return c;
  switch (a.connective()) {
    case Connective::False:
    case Connective::True:
      return std::strong_ordering::equal;
    case Connective::Atom:
      return a.atom_index() <=> b.atom_index();
    case Connective::Not:
      return a.lhs() <=> b.lhs();
    default:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
}

Formula operator!(const Formula& f) { return Formula::negation(f); }
Formula operator&&(const Formula& a, const Formula& b) { return Formula::binary(Connective::And, a, b); }
Formula operator||(const Formula& a, const Formula& b) { return Formula::binary(Connective::Or, a, b); }
Formula implies(const Formula& a, const Formula& b) { return Formula::binary(Connective::Implies, a, b); }
Formula iff(const Formula& a, const Formula& b) { return Formula::binary(Connective::Iff, a, b); }

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace omega::logic
