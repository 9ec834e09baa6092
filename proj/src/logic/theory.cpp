#include "omega/logic/theory.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "omega/error.hpp"

namespace omega::logic {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Theory::Theory(std::vector<Formula> axioms) : axioms_(std::move(axioms)) {
  std::sort(axioms_.begin(), axioms_.end());
  axioms_.erase(std::unique(axioms_.begin(), axioms_.end()), axioms_.end());
}

std::set<std::uint32_t> Theory::atoms() const {
  std::set<std::uint32_t> out;
  for (const auto& a : axioms_) out.merge(a.atoms());
  return out;
}

Formula Theory::conjunction() const {
  if (axioms_.empty()) return Formula::verum();
  Formula f = axioms_.front();
  for (std::size_t i = 1; i < axioms_.size(); ++i) f = f && axioms_[i];
  return f;
}

std::string Theory::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < axioms_.size(); ++i) {
    if (i > 0) out += "; ";
    out += axioms_[i].str();
  }
  return out + "}";
}

Theory parse_theory(std::istream& in) {
  std::vector<Formula> axioms;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;
    try {
      axioms.push_back(parse_formula(text));
    } catch (const ParseError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return Theory(std::move(axioms));
}

Theory read_theory(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read theory file '" + path.string() + "'");
  try {
    return parse_theory(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Theory parse_theory_inline(std::string_view text) {
  std::vector<Formula> axioms;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(';', start), text.size());
    const std::string part = trim(std::string(text.substr(start, end - start)));
    if (!part.empty()) axioms.push_back(parse_formula(part));
    start = end + 1;
  }
  return Theory(std::move(axioms));
}

bool Valuation::operator()(std::uint32_t atom) const {
  const auto it = values_.find(atom);
  return it == values_.end() ? default_ : it->second;
}

Valuation Valuation::from_row(const std::vector<std::uint32_t>& atoms, std::uint64_t bits) {
  Valuation v;
  for (std::size_t i = 0; i < atoms.size(); ++i) v.set(atoms[i], ((bits >> i) & 1U) != 0);
  return v;
}

std::string Valuation::str() const {
  std::string out;
  for (const auto& [atom, value] : values_) {
    if (!out.empty()) out += ',';
    out += "p" + std::to_string(atom) + (value ? "=1" : "=0");
  }
  return out + (out.empty() ? "" : ";") + "default=" + (default_ ? "1" : "0");
}

Valuation Valuation::parse(std::string_view text) {
  Valuation v;
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ';', ',');
  std::istringstream in(normalized);
  for (std::string item; std::getline(in, item, ',');) {
    const std::string piece = trim(item);
    if (piece.empty()) continue;
    const auto eq = piece.find('=');
    if (eq == std::string::npos) throw InputError("valuation item '" + piece + "' lacks '='");
    const std::string key = trim(piece.substr(0, eq));
    const std::string value = trim(piece.substr(eq + 1));
    if (value != "0" && value != "1") throw InputError("valuation value must be 0 or 1 in '" + piece + "'");
    if (key == "default") {
      v.default_ = value == "1";
      continue;
    }
    if (key.size() < 2 || key.size() > 10 || key[0] != 'p' ||
        !std::all_of(key.begin() + 1, key.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InputError("valuation key '" + key + "' is not an atom");
    }
    v.set(static_cast<std::uint32_t>(std::stoul(key.substr(1))), value == "1");
  }
  return v;
}

bool evaluate(const Valuation& v, const Formula& f) {
  switch (f.connective()) {
    case Connective::False:
      return false;
    case Connective::True:
      return true;
    case Connective::Atom:
      return v(f.atom_index());
    case Connective::Not:
      return !evaluate(v, f.lhs());
    case Connective::And:
      return evaluate(v, f.lhs()) && evaluate(v, f.rhs());
    case Connective::Or:
      return evaluate(v, f.lhs()) || evaluate(v, f.rhs());
    case Connective::Implies:
      return !evaluate(v, f.lhs()) || evaluate(v, f.rhs());
    case Connective::Iff:
      return evaluate(v, f.lhs()) == evaluate(v, f.rhs());
  }
  return false;
}

bool satisfies(const Valuation& v, const Theory& t) {
  return std::all_of(t.axioms().begin(), t.axioms().end(), [&](const Formula& f) { return evaluate(v, f); });
}

}  // namespace omega::logic
