#include "omega/weights/sigma.hpp"

#include "omega/error.hpp"
#include "omega/logic/decide.hpp"
#include "omega/logic/enumeration.hpp"

namespace omega::weights {

std::vector<bool> sigma_prefix(const Theory& t, std::size_t k) {
  if (k == 0) throw DomainError("sigma prefix length must be at least 1");
  const auto sentences = logic::SentenceEnumeration::shared().first(k);
  std::vector<bool> bits(k);
  for (std::size_t n = 0; n < k; ++n) bits[n] = logic::entails(t, sentences[n]);
  return bits;
}

std::string WeightEnclosure::str() const { return "[" + lower.str() + ", " + upper.str() + "]"; }

WeightEnclosure v_weight_from_bits(const std::vector<bool>& bits) {
  if (bits.empty()) throw DomainError("enclosure needs at least one term");
  // The partial sum is an integer over 2^k.
  exact::BigInt numerator = 0;
  for (const bool bit : bits) numerator = numerator * 2 + (bit ? 1 : 0);
  const auto k = static_cast<std::int64_t>(bits.size());
  WeightEnclosure e;
  e.lower = Rational(numerator) * exact::pow2(-k);
  e.upper = e.lower + exact::pow2(-k);
  e.terms = bits.size();
  return e;
}

WeightEnclosure v_weight(const Theory& t, std::size_t k) { return v_weight_from_bits(sigma_prefix(t, k)); }

AlphaSpec AlphaSpec::geometric(Rational c, Rational a, Rational b) {
  if (a < 0 || !(b > a)) throw DomainError("weights must satisfy b > a >= 0 (got a=" + a.str() + ", b=" + b.str() + ")");
  const Rational bound = 1 + b / (b - a);
  if (!(c > bound)) {
    throw DomainError("fast convergence needs c > 1 + b/(b-a); c must exceed " + bound.str() + " (got c=" + c.str() + ")");
  }
  AlphaSpec s(std::move(a), std::move(b));
  s.c_ = std::move(c);
  return s;
}

AlphaSpec AlphaSpec::explicit_prefix(std::vector<Rational> alphas, Rational tail, Rational a, Rational b) {
  if (a < 0 || !(b > a)) throw DomainError("weights must satisfy b > a >= 0 (got a=" + a.str() + ", b=" + b.str() + ")");
  if (alphas.empty()) throw DomainError("explicit coefficient list is empty");
  if (tail < 0) throw DomainError("tail bound must be nonnegative");
  const std::size_t m = alphas.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!(alphas[i] > 0)) throw DomainError("alpha_" + std::to_string(i + 1) + " must be positive");
  }
  std::vector<Rational> suffix(m + 1);
  suffix[m] = tail;
  for (std::size_t n = m; n-- > 0;) suffix[n] = suffix[n + 1] + alphas[n];
  // suffix[n] = sum_{i>n} alpha_i, with alphas[i-1] = alpha_i.
  const Rational factor = 1 - a / b;
  for (std::size_t n = 1; n <= m; ++n) {
    if (!(suffix[n] < alphas[n - 1] * factor)) {
      throw DomainError("fast convergence fails at n=" + std::to_string(n) + ": sum_{i>n} alpha_i = " + suffix[n].str() +
                        " is not below alpha_n (1 - a/b) = " + (alphas[n - 1] * factor).str());
    }
  }
  AlphaSpec s(std::move(a), std::move(b));
  s.explicit_ = std::move(alphas);
  s.suffix_ = std::move(suffix);
  return s;
}

Rational AlphaSpec::alpha(std::size_t n) const {
  if (n == 0) throw DomainError("alpha index starts at 1");
  if (is_geometric()) return 1 / exact::pow(c_, n);
  if (n > explicit_.size()) throw DomainError("alpha_" + std::to_string(n) + " lies past the explicit prefix");
  return explicit_[n - 1];
}

Rational AlphaSpec::tail(std::size_t n) const {
  if (is_geometric()) return 1 / (exact::pow(c_, n) * (c_ - 1));
  if (n > explicit_.size()) throw DomainError("tail past the explicit prefix is unknown");
  return suffix_[n];
}

Rational AlphaSpec::relative(std::size_t n, std::size_t i) const {
  if (is_geometric()) return 1 / exact::pow(c_, i);
  return alpha(n + i) / alpha(n);
}

Rational AlphaSpec::relative_tail(std::size_t n, std::size_t i) const {
  if (is_geometric()) return 1 / (exact::pow(c_, i) * (c_ - 1));
  return tail(n + i) / alpha(n);
}

std::string AlphaSpec::str() const {
  const std::string ab = "a=" + a_.str() + ",b=" + b_.str();
  if (is_geometric()) return "geometric(c=" + c_.str() + ")," + ab;
  return "explicit(m=" + std::to_string(explicit_.size()) + ",tail=" + suffix_.back().str() + ")," + ab;
}

WeightEnclosure v_ab_from_bits(const std::vector<bool>& bits, const AlphaSpec& spec) {
  if (bits.empty()) throw DomainError("enclosure needs at least one term");
  if (spec.max_terms() != 0 && bits.size() > spec.max_terms()) {
    throw DomainError("precision " + std::to_string(bits.size()) + " exceeds the explicit prefix length " +
                      std::to_string(spec.max_terms()));
  }
  WeightEnclosure e;
  e.lower = 0;
  for (std::size_t n = 1; n <= bits.size(); ++n) e.lower += spec.alpha(n) * (bits[n - 1] ? spec.b() : spec.a());
  e.upper = e.lower + spec.b() * spec.tail(bits.size());
  e.terms = bits.size();
  return e;
}

WeightEnclosure v_ab(const Theory& t, const AlphaSpec& spec, std::size_t k) {
  return v_ab_from_bits(sigma_prefix(t, k), spec);
}

}  // namespace omega::weights
