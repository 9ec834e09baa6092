#include "omega/logic/first_order.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "omega/error.hpp"

namespace omega::logic {

namespace {

using Kind = FoFormula::Kind;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class FoParser {
 public:
  explicit FoParser(std::string_view text) : text_(text) {}

  FoFormula parse() {
    FoFormula f = parse_iff();
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

  bool peek(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  FoFormula parse_iff() {
    FoFormula lhs = parse_implies();
    if (accept("<->")) return FoFormula::binary(Kind::Iff, lhs, parse_iff());
    return lhs;
  }

  FoFormula parse_implies() {
    FoFormula lhs = parse_or();
    if (accept("->")) return FoFormula::binary(Kind::Implies, lhs, parse_implies());
    return lhs;
  }

  FoFormula parse_or() {
    FoFormula f = parse_and();
    while (accept("|")) f = FoFormula::binary(Kind::Or, f, parse_and());
    return f;
  }

  FoFormula parse_and() {
    FoFormula f = parse_unary();
    while (accept("&")) f = FoFormula::binary(Kind::And, f, parse_unary());
    return f;
  }

  FoFormula parse_unary() {
    if (accept("!")) return FoFormula::negation(parse_unary());
    skip_space();
    const std::size_t save = pos_;
    if (pos_ < text_.size() && ident_start(text_[pos_])) {
      const std::string word = identifier();
      if (word == "forall" || word == "exists") {
        const std::string var = identifier();
        if (!accept(".")) fail("expected '.' after quantified variable");
        return FoFormula::quantified(word == "forall" ? Kind::Forall : Kind::Exists, var, parse_iff());
      }
      pos_ = save;
    }
    return parse_primary();
  }

  FoFormula parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      FoFormula f = parse_iff();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    const std::string name = identifier();
    if (accept("(")) {
      std::vector<std::string> args;
      if (!accept(")")) {
        do {
          args.push_back(identifier());
        } while (accept(","));
        if (!accept(")")) fail("expected ')' after arguments");
      }
      return FoFormula::relation(name, std::move(args));
    }
    if (accept("=")) return FoFormula::equal(name, identifier());
    if (peek("<") && !peek("<->")) {
      accept("<");
      return FoFormula::relation("<", {name, identifier()});
    }
    if (name == "T" || name == "F") return FoFormula::constant(name == "T");
    return FoFormula::relation(name, {});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_free(const FoFormula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::False:
    case Kind::True:
      return;
    case Kind::Relation:
    case Kind::Equal:
      for (const auto& a : f.arguments()) {
        if (!bound.contains(a)) out.insert(a);
      }
      return;
    case Kind::Not:
      collect_free(f.lhs(), bound, out);
      return;
    case Kind::Forall:
    case Kind::Exists: {
      const bool fresh = bound.insert(f.name()).second;
      collect_free(f.lhs(), bound, out);
      if (fresh) bound.erase(f.name());
      return;
    }
    default:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
  }
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void check_vocabulary(const FiniteStructure& m, const FoFormula& f) {
  switch (f.kind()) {
    case Kind::False:
    case Kind::True:
    case Kind::Equal:
      return;
    case Kind::Relation: {
      const auto it = m.relations().find(f.name());
      if (it == m.relations().end()) throw PreconditionError("relation '" + f.name() + "' is not declared");
      if (it->second.arity != f.arguments().size()) {
        throw PreconditionError("relation '" + f.name() + "' has arity " + std::to_string(it->second.arity) +
                                ", used with " + std::to_string(f.arguments().size()) + " arguments");
      }
      return;
    }
    case Kind::Not:
    case Kind::Forall:
    case Kind::Exists:
      check_vocabulary(m, f.lhs());
      return;
    default:
      check_vocabulary(m, f.lhs());
      check_vocabulary(m, f.rhs());
  }
}

using Env = std::map<std::string, std::size_t>;

bool holds(const FiniteStructure& m, const FoFormula& f, Env& env) {
  switch (f.kind()) {
    case Kind::False:
      return false;
    case Kind::True:
      return true;
    case Kind::Relation: {
      const auto it = m.relations().find(f.name());
      std::vector<std::size_t> tuple;
      tuple.reserve(f.arguments().size());
      for (const auto& a : f.arguments()) tuple.push_back(env.at(a));
      return it->second.tuples.contains(tuple);
    }
    case Kind::Equal:
      return env.at(f.arguments()[0]) == env.at(f.arguments()[1]);
    case Kind::Not:
      return !holds(m, f.lhs(), env);
    case Kind::And:
      return holds(m, f.lhs(), env) && holds(m, f.rhs(), env);
    case Kind::Or:
      return holds(m, f.lhs(), env) || holds(m, f.rhs(), env);
    case Kind::Implies:
      return !holds(m, f.lhs(), env) || holds(m, f.rhs(), env);
    case Kind::Iff:
      return holds(m, f.lhs(), env) == holds(m, f.rhs(), env);
    case Kind::Forall:
    case Kind::Exists: {
      const bool universal = f.kind() == Kind::Forall;
      const auto previous = env.find(f.name()) == env.end() ? std::nullopt : std::optional(env[f.name()]);
      bool result = universal;
      for (std::size_t e = 0; e < m.size(); ++e) {
        env[f.name()] = e;
        if (holds(m, f.lhs(), env) != universal) {
          result = !universal;
          break;
        }
      }
      if (previous) {
        env[f.name()] = *previous;
      } else {
        env.erase(f.name());
      }
      return result;
    }
  }
  return false;
}

}  // namespace

FoFormula FoFormula::constant(bool value) {
  return FoFormula(std::make_shared<const Node>(Node{value ? Kind::True : Kind::False}));
}

FoFormula FoFormula::relation(std::string name, std::vector<std::string> arguments) {
  return FoFormula(std::make_shared<const Node>(Node{Kind::Relation, std::move(name), std::move(arguments)}));
}

FoFormula FoFormula::equal(std::string x, std::string y) {
  return FoFormula(std::make_shared<const Node>(Node{Kind::Equal, "=", {std::move(x), std::move(y)}}));
}

FoFormula FoFormula::negation(FoFormula f) {
  return FoFormula(std::make_shared<const Node>(Node{Kind::Not, {}, {}, std::make_shared<const FoFormula>(std::move(f))}));
}

FoFormula FoFormula::binary(Kind kind, FoFormula lhs, FoFormula rhs) {
  if (kind != Kind::And && kind != Kind::Or && kind != Kind::Implies && kind != Kind::Iff) {
    throw DomainError("not a binary connective");
  }
  return FoFormula(std::make_shared<const Node>(Node{kind, {}, {}, std::make_shared<const FoFormula>(std::move(lhs)),
                                                     std::make_shared<const FoFormula>(std::move(rhs))}));
}

FoFormula FoFormula::quantified(Kind kind, std::string variable, FoFormula body) {
  if (kind != Kind::Forall && kind != Kind::Exists) throw DomainError("not a quantifier");
  return FoFormula(std::make_shared<const Node>(
      Node{kind, std::move(variable), {}, std::make_shared<const FoFormula>(std::move(body))}));
}

std::set<std::string> FoFormula::free_variables() const {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(*this, bound, out);
  return out;
}

std::string FoFormula::str() const {
  switch (kind()) {
    case Kind::False:
      return "F";
    case Kind::True:
      return "T";
    case Kind::Relation:
      if (name() == "<" && arguments().size() == 2) return arguments()[0] + " < " + arguments()[1];
      return arguments().empty() ? name() : name() + "(" + join(arguments(), ", ") + ")";
    case Kind::Equal:
      return arguments()[0] + " = " + arguments()[1];
    case Kind::Not:
      return "!(" + lhs().str() + ")";
    case Kind::Forall:
      return "(forall " + name() + ". " + lhs().str() + ")";
    case Kind::Exists:
      return "(exists " + name() + ". " + lhs().str() + ")";
    default: {
      const char* op = kind() == Kind::And ? " & " : kind() == Kind::Or ? " | " : kind() == Kind::Implies ? " -> " : " <-> ";
      return "(" + lhs().str() + op + rhs().str() + ")";
    }
  }
}

FoFormula parse_fo_formula(std::string_view text) { return FoParser(text).parse(); }

FoTheory parse_fo_theory(std::istream& in) {
  FoTheory out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;
    try {
      out.push_back(parse_fo_formula(text));
    } catch (const ParseError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

FoTheory read_fo_theory(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read theory file '" + path.string() + "'");
  return parse_fo_theory(in);
}

FoFormula embed(const Formula& f) {
  switch (f.connective()) {
    case Connective::False:
      return FoFormula::constant(false);
    case Connective::True:
      return FoFormula::constant(true);
    case Connective::Atom:
      return FoFormula::relation("p" + std::to_string(f.atom_index()), {});
    case Connective::Not:
      return FoFormula::negation(embed(f.lhs()));
    case Connective::And:
      return FoFormula::binary(Kind::And, embed(f.lhs()), embed(f.rhs()));
    case Connective::Or:
      return FoFormula::binary(Kind::Or, embed(f.lhs()), embed(f.rhs()));
    case Connective::Implies:
      return FoFormula::binary(Kind::Implies, embed(f.lhs()), embed(f.rhs()));
    case Connective::Iff:
      return FoFormula::binary(Kind::Iff, embed(f.lhs()), embed(f.rhs()));
  }
  return FoFormula::constant(false);
}

FoTheory embed(const Theory& t) {
  FoTheory out;
  for (const auto& a : t.axioms()) out.push_back(embed(a));
  return out;
}

FiniteStructure::FiniteStructure(std::vector<std::string> universe) : universe_(std::move(universe)) {
  if (universe_.empty()) throw DomainError("structure universe must be nonempty");
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (!index_.emplace(universe_[i], i).second) throw DomainError("element '" + universe_[i] + "' repeated");
  }
}

void FiniteStructure::declare(const std::string& name, std::size_t arity) { relations_[name] = RelationTable{arity, {}}; }

std::size_t FiniteStructure::element(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) throw DomainError("element '" + name + "' is not in the universe");
  return it->second;
}

void FiniteStructure::add(const std::string& name, const std::vector<std::string>& tuple) {
  const auto it = relations_.find(name);
  if (it == relations_.end()) throw DomainError("relation '" + name + "' is not declared");
  if (tuple.size() != it->second.arity) {
    throw DomainError("tuple of length " + std::to_string(tuple.size()) + " for relation '" + name + "' of arity " +
                      std::to_string(it->second.arity));
  }
  std::vector<std::size_t> t;
  for (const auto& e : tuple) t.push_back(element(e));
  it->second.tuples.insert(std::move(t));
}

FiniteStructure linear_order(std::size_t n) {
  std::vector<std::string> universe;
  for (std::size_t i = 1; i <= n; ++i) universe.push_back(std::to_string(i));
  FiniteStructure m(universe);
  m.declare("<", 2);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) m.add("<", {std::to_string(i), std::to_string(j)});
  }
  return m;
}

FiniteStructure valuation_structure(const Valuation& v, const std::vector<std::uint32_t>& atoms) {
  FiniteStructure m({"*"});
  for (const auto a : atoms) {
    const std::string name = "p" + std::to_string(a);
    m.declare(name, 0);
    if (v(a)) m.add(name, {});
  }
  return m;
}

FiniteStructure parse_structure(std::istream& in) {
  std::optional<FiniteStructure> m;
  std::string current;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) { throw InputError("line " + std::to_string(line_no) + ": " + msg); };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty()) continue;
    try {
      if (w[0] == "universe") {
        if (m) fail("second universe line");
        m.emplace(std::vector<std::string>(w.begin() + 1, w.end()));
      } else if (w[0] == "relation") {
        if (!m) fail("relation before universe");
        if (w.size() != 3 || !std::all_of(w[2].begin(), w[2].end(), ::isdigit)) fail("expected 'relation NAME ARITY'");
        current = w[1];
        m->declare(current, std::stoul(w[2]));
      } else {
        if (current.empty()) fail("tuple outside a relation block");
        if (w.size() == 1 && w[0] == "true" && m->relations().at(current).arity == 0) {
          m->add(current, {});
        } else {
          m->add(current, w);
        }
      }
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }
  if (!m) throw InputError("structure file has no universe line");
  return *m;
}

FiniteStructure read_structure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read structure file '" + path.string() + "'");
  try {
    return parse_structure(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

bool fo_models(const FiniteStructure& m, const FoFormula& phi) {
  if (const auto free = phi.free_variables(); !free.empty()) {
    throw PreconditionError("sentence has free variable '" + *free.begin() + "'");
  }
  check_vocabulary(m, phi);
  Env env;
  return holds(m, phi, env);
}

bool fo_models(const FiniteStructure& m, const FoTheory& t) {
  return std::all_of(t.begin(), t.end(), [&](const FoFormula& f) { return fo_models(m, f); });
}

}  // namespace omega::logic
