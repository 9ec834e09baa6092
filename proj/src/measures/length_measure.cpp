#include "omega/measures/length_measure.hpp"

#include "omega/error.hpp"

namespace omega::measures {

LengthMeasure::LengthMeasure(std::vector<Rational> pi, std::string description)
    : pi_(std::move(pi)), description_(std::move(description)) {}

LengthMeasure LengthMeasure::point_mass(std::size_t m, std::size_t support) {
  if (m == 0 || m > support) throw DomainError("point mass length must lie in 1.." + std::to_string(support));
  std::vector<Rational> pi(support, Rational(0));
  pi[m - 1] = exact::pow2(-static_cast<std::int64_t>(m));
  return {std::move(pi), "point-mass(m=" + std::to_string(m) + ",L=" + std::to_string(support) + ")"};
}

LengthMeasure LengthMeasure::stop_probability(const Rational& q, std::size_t support) {
  if (!(q > 0) || q > 1) throw DomainError("stop probability must lie in (0, 1] (got " + q.str() + ")");
  if (support == 0) throw DomainError("support must be at least 1");
  std::vector<Rational> p(support);
  Rational keep = 1;
  for (std::size_t l = 0; l < support; ++l) {
    p[l] = keep * q;
    keep *= 1 - q;
  }
  auto m = from_length_distribution(std::move(p), true);
  m.description_ = "stop-probability(q=" + q.str() + ",L=" + std::to_string(support) + ")";
  return m;
}

LengthMeasure LengthMeasure::explicit_table(std::vector<Rational> pi, bool renormalize) {
  if (pi.empty()) throw DomainError("length table is empty");
  Rational total = 0;
  for (std::size_t l = 0; l < pi.size(); ++l) {
    if (pi[l] < 0) throw DomainError("pi_" + std::to_string(l + 1) + " is negative");
    total += exact::pow2(static_cast<std::int64_t>(l + 1)) * pi[l];
  }
  if (total != 1) {
    if (!renormalize || total.is_zero()) {
      throw DomainError("sum of 2^l pi_l is " + total.str() + ", not 1");
    }
    for (auto& v : pi) v /= total;
  }
  std::string description = "explicit(L=" + std::to_string(pi.size()) + ")";
  return {std::move(pi), std::move(description)};
}

LengthMeasure LengthMeasure::from_length_distribution(std::vector<Rational> p, bool renormalize) {
  for (std::size_t l = 0; l < p.size(); ++l) p[l] *= exact::pow2(-static_cast<std::int64_t>(l + 1));
  auto m = explicit_table(std::move(p), renormalize);
  m.description_ = "distribution(L=" + std::to_string(m.support()) + ")";
  return m;
}

const Rational& LengthMeasure::pi(std::size_t length) const {
  if (length == 0 || length > pi_.size()) {
    throw DomainError("length " + std::to_string(length) + " outside the support 1.." + std::to_string(pi_.size()));
  }
  return pi_[length - 1];
}

LengthMeasure random_length_measure(util::Rng& rng, std::size_t support) {
  std::vector<Rational> p(support);
  bool positive = false;
  for (auto& v : p) {
    v = static_cast<std::int64_t>(util::uniform_below(rng, 17));
    positive = positive || !v.is_zero();
  }
  if (!positive) p[util::uniform_below(rng, support)] = 1;
  return LengthMeasure::from_length_distribution(std::move(p), true);
}

Rational set_probability(const prefixfree::StringSet& set, const LengthMeasure& pi) {
  Rational sum = 0;
  for (const auto& s : set.elements()) {
    if (s.size() > pi.support()) {
      throw DomainError("string " + s.str() + " is longer than the measure support " + std::to_string(pi.support()));
    }
    sum += pi.pi(s.size());
  }
  return sum;
}

DominanceReport dominance_check(const minilang::EnumerationReport& census, const LengthMeasure& pi) {
  DominanceReport r;
  r.halting_probability = 0;
  r.omega_partial = 0;
  std::size_t lengths_with_halts = 0;
  for (const auto& row : census.rows) {
    if (row.halted == 0) continue;
    if (row.bit_length > pi.support()) {
      throw DomainError("census length " + std::to_string(row.bit_length) + " lies outside the measure support " +
                        std::to_string(pi.support()));
    }
    ++lengths_with_halts;
    r.halting_probability += Rational(row.halted) * pi.pi(row.bit_length);
    r.omega_partial += Rational(row.halted) * exact::pow2(-static_cast<std::int64_t>(row.bit_length));
  }
  r.hypothesis_met = lengths_with_halts >= 2;
  r.strict = r.halting_probability < r.omega_partial;
  return r;
}

Rational fixed_length_halting(const minilang::EnumerationReport& census, std::size_t bit_length) {
  const auto* row = census.row(bit_length);
  if (row == nullptr) throw DomainError("length " + std::to_string(bit_length) + " is not in the census");
  return Rational(row->halted) * exact::pow2(-static_cast<std::int64_t>(bit_length));
}

}  // namespace omega::measures
