#include "omega/measures/suggestions.hpp"

#include "omega/error.hpp"

namespace omega::measures {

std::string Enclosure::str() const {
  if (is_exact()) return lower.str();
  return "[" + lower.str() + ", " + upper.str() + "]";
}

Enclosure exp_enclosure(const Rational& x) {
  if (x < 0) throw DomainError("exp enclosure needs x >= 0");
  // Partial Taylor sum; the remainder after term N is at most
  // term_{N+1} / (1 - x/(N+2)) once N + 2 > 2x.
  Rational sum = 1;
  Rational term = 1;
  std::uint64_t k = 0;
  const Rational width = exact::pow2(-80);
  while (true) {
    ++k;
    term = term * x / Rational(static_cast<std::int64_t>(k));
    sum += term;
    const Rational n2 = static_cast<std::int64_t>(k + 2);
    if (n2 > 2 * x) {
      const Rational next = term * x / Rational(static_cast<std::int64_t>(k + 1));
      const Rational remainder = next / (1 - x / n2);
      if (remainder < width || x.is_zero()) return {sum, sum + remainder};
    }
  }
}

NatSet NatSet::finite(std::set<std::uint64_t> members) {
  if (members.count(0) != 0) throw DomainError("sets of positive integers cannot contain 0");
  NatSet s;
  s.kind_ = Kind::Finite;
  s.members_ = std::move(members);
  return s;
}

NatSet NatSet::periodic(std::uint64_t period, std::set<std::uint64_t> residues) {
  if (period == 0) throw DomainError("period must be positive");
  for (const auto r : residues) {
    if (r >= period) throw DomainError("residue " + std::to_string(r) + " is not below the period");
  }
  NatSet s;
  s.kind_ = Kind::Periodic;
  s.period_ = period;
  s.members_ = std::move(residues);
  return s;
}

NatSet NatSet::predicate(std::function<bool(std::uint64_t)> member, std::string name) {
  NatSet s;
  s.kind_ = Kind::Predicate;
  s.predicate_ = std::move(member);
  s.name_ = std::move(name);
  return s;
}

bool NatSet::contains(std::uint64_t n) const {
  if (n == 0) return false;
  switch (kind_) {
    case Kind::Finite:
      return members_.count(n) != 0;
    case Kind::Periodic:
      return members_.count(n % period_) != 0;
    case Kind::Predicate:
      return predicate_(n);
  }
  return false;
}

std::string NatSet::str() const {
  const auto list = [this] {
    std::string s;
    for (const auto m : members_) s += (s.empty() ? "" : ",") + std::to_string(m);
    return s;
  };
  switch (kind_) {
    case Kind::Finite:
      return "{" + list() + "}";
    case Kind::Periodic:
      return "{n : n mod " + std::to_string(period_) + " in {" + list() + "}}";
    case Kind::Predicate:
      return name_;
  }
  return "";
}

IndexMeasure IndexMeasure::geometric(const Rational& ratio) {
  if (!(ratio > 0) || !(ratio < 1)) throw DomainError("geometric ratio must lie in (0, 1) (got " + ratio.str() + ")");
  IndexMeasure m;
  m.kind_ = Kind::Geometric;
  m.param_ = ratio;
  return m;
}

IndexMeasure IndexMeasure::finite_prefix(std::vector<Rational> alphas, const Rational& tail) {
  if (alphas.empty()) throw DomainError("explicit weight list is empty");
  if (tail < 0) throw DomainError("tail mass must be nonnegative");
  Rational total = tail;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0)) throw DomainError("alpha_" + std::to_string(i + 1) + " must be positive");
    total += alphas[i];
  }
  if (total != 1) throw DomainError("weights plus tail sum to " + total.str() + ", not 1");
  IndexMeasure m;
  m.kind_ = Kind::FinitePrefix;
  m.prefix_ = std::move(alphas);
  m.prefix_tail_ = tail;
  return m;
}

IndexMeasure IndexMeasure::poisson_normalized(const Rational& lambda) {
  if (!(lambda > 0)) throw DomainError("Poisson parameter must be positive");
  IndexMeasure m;
  m.kind_ = Kind::PoissonNormalized;
  m.param_ = lambda;
  const Enclosure e = exp_enclosure(lambda);
  m.scale_ = {1 / (e.upper - 1), 1 / (e.lower - 1)};
  return m;
}

IndexMeasure IndexMeasure::poisson_as_written(const Rational& lambda) {
  if (!(lambda > 0)) throw DomainError("Poisson parameter must be positive");
  IndexMeasure m;
  m.kind_ = Kind::PoissonAsWritten;
  m.param_ = lambda;
  const Enclosure e = exp_enclosure(lambda);
  m.scale_ = {1 / e.upper, 1 / e.lower};
  return m;
}

namespace {

// x^n / n!
Rational power_over_factorial(const Rational& x, std::uint64_t n) {
  Rational v = 1;
  for (std::uint64_t k = 1; k <= n; ++k) v = v * x / Rational(static_cast<std::int64_t>(k));
  return v;
}

// Upper bound on sum_{k>n} x^k / k!.
Rational exp_tail_bound(const Rational& x, std::uint64_t n) {
  const Rational next = power_over_factorial(x, n + 1);
  const Rational n2 = static_cast<std::int64_t>(n + 2);
  if (n2 > x) return next / (1 - x / n2);
  // Far from the peak the ratio bound fails; fall back to the whole series.
  return exp_enclosure(x).upper;
}

}  // namespace

Enclosure IndexMeasure::alpha(std::uint64_t n) const {
  if (n == 0) throw DomainError("index measures live on n >= 1");
  switch (kind_) {
    case Kind::Geometric:
      return Enclosure::exact((1 - param_) * exact::pow(param_, n - 1));
    case Kind::FinitePrefix:
      if (n <= prefix_.size()) return Enclosure::exact(prefix_[n - 1]);
      return {0, prefix_tail_};
    case Kind::PoissonNormalized: {
      const Rational core = power_over_factorial(param_, n);
      return {core * scale_.lower, core * scale_.upper};
    }
    case Kind::PoissonAsWritten: {
      const Rational core = power_over_factorial(1 / param_, n);
      return {core * scale_.lower, core * scale_.upper};
    }
  }
  return {0, 0};
}

Enclosure IndexMeasure::tail(std::uint64_t n) const {
  switch (kind_) {
    case Kind::Geometric:
      return Enclosure::exact(exact::pow(param_, n));
    case Kind::FinitePrefix: {
      if (n >= prefix_.size()) return {0, prefix_tail_};
      Rational s = prefix_tail_;
      for (std::size_t i = n; i < prefix_.size(); ++i) s += prefix_[i];
      return Enclosure::exact(s);
    }
    case Kind::PoissonNormalized:
      return {0, exp_tail_bound(param_, n) * scale_.upper};
    case Kind::PoissonAsWritten:
      return {0, exp_tail_bound(1 / param_, n) * scale_.upper};
  }
  return {0, 0};
}

Enclosure IndexMeasure::total_mass() const {
  if (kind_ != Kind::PoissonAsWritten) return Enclosure::exact(1);
  // e^-lambda (e^(1/lambda) - 1)
  const Enclosure e = exp_enclosure(1 / param_);
  return {scale_.lower * (e.lower - 1), scale_.upper * (e.upper - 1)};
}

std::string IndexMeasure::str() const {
  switch (kind_) {
    case Kind::Geometric:
      return "geometric(r=" + param_.str() + ")";
    case Kind::FinitePrefix:
      return "finite-prefix(m=" + std::to_string(prefix_.size()) + ",tail=" + prefix_tail_.str() + ")";
    case Kind::PoissonNormalized:
      return "poisson-normalized(lambda=" + param_.str() + ")";
    case Kind::PoissonAsWritten:
      return "poisson-as-written-unnormalized(lambda=" + param_.str() + ")";
  }
  return "";
}

Enclosure alpha_halting(const IndexMeasure& alpha, const NatSet& h, std::uint64_t bound) {
  Enclosure sum = Enclosure::exact(0);
  if (h.kind() == NatSet::Kind::Finite) {
    for (const auto n : h.members()) sum += alpha.alpha(n);
    return sum;
  }
  if (h.kind() == NatSet::Kind::Periodic && alpha.kind() == IndexMeasure::Kind::Geometric) {
    // Residue class c + kP (first member c >= 1) has mass
    // (1 - r) r^(c-1) / (1 - r^P).
    const Rational& r = alpha.parameter();
    const Rational denominator = 1 - exact::pow(r, h.period());
    for (const auto residue : h.residues()) {
      const std::uint64_t first = residue == 0 ? h.period() : residue;
      sum += Enclosure::exact((1 - r) * exact::pow(r, first - 1) / denominator);
    }
    return sum;
  }
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (h.contains(n)) sum += alpha.alpha(n);
  }
  sum.upper += alpha.tail(bound).upper;
  return sum;
}

Enclosure p_nat(const NatSet& s, std::uint64_t bound) {
  return alpha_halting(IndexMeasure::geometric(Rational(1) / 2), s, bound);
}

exact::DyadicSum k_number(const minilang::EnumerationReport& census) {
  exact::DyadicSum k;
  for (const auto& p : census.halting) {
    const exact::BigInt code = exact::integer_code(minilang::encode(p));
    k.add_power(static_cast<std::uint64_t>(code));
  }
  return k;
}

Rational generalized_omega(const prefixfree::StringSet& set, std::uint64_t base) {
  if (base < 2) throw DomainError("base must be at least 2 (got " + std::to_string(base) + ")");
  Rational sum = 0;
  const Rational inverse = Rational(1) / Rational(base);
  for (const auto& s : set.elements()) sum += exact::pow(inverse, s.size());
  return sum;
}

}  // namespace omega::measures
