#include "omega/logic/enumeration.hpp"

#include "omega/error.hpp"

namespace omega::logic {

namespace {

// Pending parser obligations; the back of the stack is the next to be met.
enum class Item : std::uint8_t { Formula, Operator, Right, FirstDigit, MoreDigits };
using Stack = std::vector<Item>;

bool is_digit(std::uint8_t t) { return t >= token::kDigit0 && t < token::kDigit0 + 10; }
bool is_operator(std::uint8_t t) { return t >= token::kAnd && t <= token::kIff; }

/// Consumes one token; false when the token cannot continue the prefix.
bool step(Stack& stack, std::uint8_t t) {
  while (!stack.empty()) {
    switch (stack.back()) {
      case Item::Formula:
        if (t == token::kFalse || t == token::kTrue) {
          stack.pop_back();
        } else if (t == token::kP) {
          stack.back() = Item::FirstDigit;
        } else if (t == token::kLeft) {
          stack.back() = Item::Right;
          stack.push_back(Item::Formula);
          stack.push_back(Item::Operator);
          stack.push_back(Item::Formula);
        } else if (t != token::kNot) {
          return false;
        }
        return true;
      case Item::Operator:
        if (!is_operator(t)) return false;
        stack.pop_back();
        return true;
      case Item::Right:
        if (t != token::kRight) return false;
        stack.pop_back();
        return true;
      case Item::FirstDigit:
        if (!is_digit(t)) return false;
        if (t == token::kDigit0) {
          stack.pop_back();
        } else {
          stack.back() = Item::MoreDigits;
        }
        return true;
      case Item::MoreDigits:
        if (is_digit(t)) return true;
        stack.pop_back();  // the numeral ends here; retry with the next item
        break;
    }
  }
  return false;
}

bool accepts_end(const Stack& stack) { return stack.empty() || (stack.size() == 1 && stack[0] == Item::MoreDigits); }

struct Shape {
  std::size_t formulas = 0;
  std::size_t fixed = 0;  // operators and right parentheses, one token each
  std::size_t operators = 0;
  std::optional<Item> digits;
};

Shape shape_of(const Stack& stack) {
  Shape s;
  for (const auto item : stack) {
    switch (item) {
      case Item::Formula:
        ++s.formulas;
        break;
      case Item::Operator:
        ++s.operators;
        ++s.fixed;
        break;
      case Item::Right:
        ++s.fixed;
        break;
      default:
        s.digits = item;
    }
  }
  return s;
}

/// Whether `stack` can be completed by exactly m more tokens. Formulas take
/// any length >= 1, numerals any length >= 1 (>= 0 once started).
bool completable(const Stack& stack, std::size_t m) {
  const Shape s = shape_of(stack);
  const std::size_t minimum = s.fixed + s.formulas + (s.digits == Item::FirstDigit ? 1 : 0);
  const bool flexible = s.formulas > 0 || s.digits.has_value();
  return m == minimum || (m > minimum && flexible);
}

class Counter {
 public:
  static Counter& instance() {
    static Counter c;
    return c;
  }

  BigInt length_count(std::size_t length) {
    std::lock_guard lock(mutex_);
    grow(length);
    return w_[length];
  }

  /// Number of token sequences of length m completing `stack`.
  BigInt completions(const Stack& stack, std::size_t m) {
    const Shape s = shape_of(stack);
    if (m < s.fixed) return 0;
    const std::size_t free = m - s.fixed;
    std::lock_guard lock(mutex_);
    grow(free + 1);
    const auto& power = formula_power(s.formulas, free);
    BigInt total = 0;
    if (!s.digits) {
      total = power[free];
    } else {
      for (std::size_t x = 0; x <= free; ++x) {
        const BigInt d = digit_count(*s.digits, x);
        if (d != 0 && power[free - x] != 0) total += d * power[free - x];
      }
    }
    for (std::size_t i = 0; i < s.operators; ++i) total *= 4;
    return total;
  }

 private:
  static BigInt pow10(std::size_t e) {
    BigInt r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= 10;
    return r;
  }

  static BigInt digit_count(Item item, std::size_t x) {
    if (item == Item::MoreDigits) return pow10(x);
    if (x == 0) return 0;
    return x == 1 ? BigInt(10) : BigInt(9 * pow10(x - 1));
  }

  void grow(std::size_t length) {
    if (w_.empty()) w_.push_back(0);
    while (w_.size() <= length) {
      const std::size_t n = w_.size();
      BigInt c = n == 1 ? 2 : 0;
      if (n >= 2) c += digit_count(Item::FirstDigit, n - 1);
      c += w_[n - 1];
      for (std::size_t i = 1; i + 4 <= n; ++i) c += 4 * w_[i] * w_[n - 3 - i];
      w_.push_back(c);
    }
  }

  /// k-fold convolution of the per-length formula counts, up to length m.
  const std::vector<BigInt>& formula_power(std::size_t k, std::size_t m) {
    while (powers_.size() <= k) powers_.emplace_back();
    auto& p = powers_[k];
    if (p.size() > m) return p;
    p.assign(m + 1, 0);
    if (k == 0) {
      p[0] = 1;
      return p;
    }
    const auto& prev = formula_power(k - 1, m);
    for (std::size_t total = 0; total <= m; ++total) {
      BigInt sum = 0;
      for (std::size_t first = 1; first <= total; ++first) {
        if (w_[first] != 0 && prev[total - first] != 0) sum += w_[first] * prev[total - first];
      }
      p[total] = sum;
    }
    return p;
  }

  std::mutex mutex_;
  std::vector<BigInt> w_;
  std::vector<std::vector<BigInt>> powers_;
};

Stack initial_stack() { return {Item::Formula}; }

void append_lexmin_completion(Stack stack, std::size_t m, TokenString& out) {
  for (; m > 0; --m) {
    for (std::uint8_t t = 0; t < token::kCount; ++t) {
      Stack next = stack;
      if (step(next, t) && completable(next, m - 1)) {
        out.push_back(t);
        stack = std::move(next);
        break;
      }
    }
  }
}

std::vector<Stack> prefix_stacks(const TokenString& tokens) {
  std::vector<Stack> stacks{initial_stack()};
  for (const auto t : tokens) {
    Stack s = stacks.back();
    if (!step(s, t)) throw DomainError("token string is not well formed: " + render_tokens(tokens));
    stacks.push_back(std::move(s));
  }
  if (!accepts_end(stacks.back())) throw DomainError("token string is not well formed: " + render_tokens(tokens));
  return stacks;
}

void emit_tokens(const Formula& f, TokenString& out) {
  switch (f.connective()) {
    case Connective::False:
      out.push_back(token::kFalse);
      return;
    case Connective::True:
      out.push_back(token::kTrue);
      return;
    case Connective::Atom:
      out.push_back(token::kP);
      for (const char c : std::to_string(f.atom_index())) out.push_back(static_cast<std::uint8_t>(token::kDigit0 + (c - '0')));
      return;
    case Connective::Not:
      out.push_back(token::kNot);
      emit_tokens(f.lhs(), out);
      return;
    default:
      out.push_back(token::kLeft);
      emit_tokens(f.lhs(), out);
      out.push_back(f.connective() == Connective::And       ? token::kAnd
                    : f.connective() == Connective::Or      ? token::kOr
                    : f.connective() == Connective::Implies ? token::kImplies
                                                            : token::kIff);
      emit_tokens(f.rhs(), out);
      out.push_back(token::kRight);
  }
}

std::optional<Formula> read_formula(const TokenString& t, std::size_t& i) {
  if (i >= t.size()) return std::nullopt;
  const auto tok = t[i++];
  if (tok == token::kFalse) return Formula::falsum();
  if (tok == token::kTrue) return Formula::verum();
  if (tok == token::kP) {
    if (i >= t.size() || !is_digit(t[i])) return std::nullopt;
    if (t[i] == token::kDigit0) {
      ++i;
      return Formula::atom(0);
    }
    std::uint64_t index = 0;
    while (i < t.size() && is_digit(t[i])) {
      index = index * 10 + (t[i++] - token::kDigit0);
      if (index > UINT32_MAX) throw DomainError("atom index too large");
    }
    return Formula::atom(static_cast<std::uint32_t>(index));
  }
  if (tok == token::kNot) {
    auto f = read_formula(t, i);
    if (!f) return std::nullopt;
    return Formula::negation(*f);
  }
  if (tok != token::kLeft) return std::nullopt;
  auto a = read_formula(t, i);
  if (!a || i >= t.size() || !is_operator(t[i])) return std::nullopt;
  const auto op = t[i++];
  auto b = read_formula(t, i);
  if (!b || i >= t.size() || t[i++] != token::kRight) return std::nullopt;
  const Connective c = op == token::kAnd ? Connective::And
                       : op == token::kOr ? Connective::Or
                       : op == token::kImplies ? Connective::Implies
                                               : Connective::Iff;
  return Formula::binary(c, *a, *b);
}

}  // namespace

TokenString canonical_tokens(const Formula& f) {
  TokenString out;
  emit_tokens(f, out);
  return out;
}

std::string render_tokens(const TokenString& tokens) {
  static const char* const kGlyphs[token::kCount] = {"⊥", "⊤", "p", "0", "1", "2", "3", "4", "5", "6",
                                                     "7", "8", "9", "¬", "∧", "∨", "→", "↔", "(", ")"};
  std::string out;
  for (const auto t : tokens) out += t < token::kCount ? kGlyphs[t] : "?";
  return out;
}

std::optional<Formula> formula_from_tokens(const TokenString& tokens) {
  if (!is_well_formed(tokens)) return std::nullopt;
  std::size_t i = 0;
  return read_formula(tokens, i);
}

bool is_well_formed(const TokenString& tokens) {
  Stack s = initial_stack();
  for (const auto t : tokens) {
    if (t >= token::kCount || !step(s, t)) return false;
  }
  return accepts_end(s);
}

BigInt sentences_of_length(std::size_t length) { return Counter::instance().length_count(length); }

BigInt token_rank(const TokenString& tokens) {
  const auto stacks = prefix_stacks(tokens);
  auto& counter = Counter::instance();
  const std::size_t length = tokens.size();
  BigInt rank = 1;
  for (std::size_t l = 1; l < length; ++l) rank += counter.length_count(l);
  for (std::size_t pos = 0; pos < length; ++pos) {
    for (std::uint8_t t = 0; t < tokens[pos]; ++t) {
      Stack s = stacks[pos];
      if (step(s, t)) rank += counter.completions(s, length - pos - 1);
    }
  }
  return rank;
}

BigInt sentence_rank(const Formula& f) { return token_rank(canonical_tokens(f)); }

TokenString token_unrank(const BigInt& n) {
  if (n < 1) throw DomainError("sentence index must be at least 1");
  auto& counter = Counter::instance();
  BigInt index = n - 1;
  std::size_t length = 1;
  for (;; ++length) {
    const BigInt c = counter.length_count(length);
    if (index < c) break;
    index -= c;
  }
  TokenString out;
  Stack stack = initial_stack();
  for (std::size_t pos = 0; pos < length; ++pos) {
    for (std::uint8_t t = 0; t < token::kCount; ++t) {
      Stack next = stack;
      if (!step(next, t)) continue;
      const BigInt c = counter.completions(next, length - pos - 1);
      if (index < c) {
        out.push_back(t);
        stack = std::move(next);
        break;
      }
      index -= c;
    }
  }
  return out;
}

Formula sentence_unrank(const BigInt& n) { return *formula_from_tokens(token_unrank(n)); }

TokenString next_sentence(const TokenString& tokens) {
  const auto stacks = prefix_stacks(tokens);
  const std::size_t length = tokens.size();
  for (std::size_t pos = length; pos-- > 0;) {
    for (std::uint8_t t = tokens[pos] + 1; t < token::kCount; ++t) {
      Stack s = stacks[pos];
      if (step(s, t) && completable(s, length - pos - 1)) {
        TokenString out(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(pos));
        out.push_back(t);
        append_lexmin_completion(std::move(s), length - pos - 1, out);
        return out;
      }
    }
  }
  TokenString out;
  append_lexmin_completion(initial_stack(), length + 1, out);
  return out;
}

void SentenceEnumeration::extend_to(std::size_t k) {
  while (token_cache_.size() < k) {
    TokenString next =
        token_cache_.empty() ? TokenString{token::kFalse} : next_sentence(token_cache_.back());
    formula_cache_.push_back(*formula_from_tokens(next));
    token_cache_.push_back(std::move(next));
  }
}

Formula SentenceEnumeration::sentence(std::uint64_t n) {
  if (n == 0) throw DomainError("sentence index must be at least 1");
  if (n > kCacheLimit) return sentence_unrank(BigInt(n));
  std::lock_guard lock(mutex_);
  extend_to(n);
  return formula_cache_[n - 1];
}

TokenString SentenceEnumeration::tokens(std::uint64_t n) {
  if (n == 0) throw DomainError("sentence index must be at least 1");
  if (n > kCacheLimit) return token_unrank(BigInt(n));
  std::lock_guard lock(mutex_);
  extend_to(n);
  return token_cache_[n - 1];
}

std::vector<Formula> SentenceEnumeration::first(std::size_t k) {
  if (k > kCacheLimit) throw DomainError("prefix longer than the sentence cache");
  std::lock_guard lock(mutex_);
  extend_to(k);
  return {formula_cache_.begin(), formula_cache_.begin() + static_cast<std::ptrdiff_t>(k)};
}

SentenceEnumeration& SentenceEnumeration::shared() {
  static SentenceEnumeration instance;
  return instance;
}

}  // namespace omega::logic
