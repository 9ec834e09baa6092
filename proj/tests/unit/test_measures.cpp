#include <cmath>

#include "doctest.h"
#include "omega/error.hpp"
#include "omega/exact/bitstring.hpp"
#include "omega/measures/length_measure.hpp"
#include "omega/measures/montecarlo.hpp"
#include "omega/measures/suggestions.hpp"
#include "omega/minilang/census.hpp"
#include "omega/prefixfree/string_set.hpp"

using namespace omega;
using namespace omega::measures;
using exact::BitString;
using prefixfree::StringSet;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

StringSet set_of(std::initializer_list<const char*> items) {
  std::vector<BitString> v;
  for (const char* s : items) v.push_back(BitString::parse(s));
  return StringSet(std::move(v));
}

Rational total(const LengthMeasure& m) {
  Rational sum = 0;
  for (std::size_t l = 1; l <= m.support(); ++l) sum += exact::pow(Rational(2), l) * m.pi(l);
  return sum;
}

// Census codes as a string set, for set_probability.
StringSet halting_codes(const minilang::EnumerationReport& census) {
  std::vector<BitString> codes;
  for (const auto& p : census.halting) codes.push_back(minilang::encode(p));
  return StringSet(codes);
}

}  // namespace

TEST_CASE("length measure constructions") {
  const auto point = LengthMeasure::point_mass(2, 2);
  CHECK(point.pi(1) == 0);
  CHECK(point.pi(2) == q("1/4"));
  CHECK(total(point) == 1);
  const auto sixth = LengthMeasure::explicit_table({q("1/6"), q("1/6")});
  CHECK(total(sixth) == 1);
  CHECK_THROWS_AS(LengthMeasure::explicit_table({q("1/6"), q("1/5")}), DomainError);
  CHECK(total(LengthMeasure::explicit_table({q("1/6"), q("1/5")}, true)) == 1);
  // Oracle: P(l) = (1/2)^l on 1..3 sums to 7/8, so P = 4/7, 2/7, 1/7.
  const auto stop = LengthMeasure::stop_probability(q("1/2"), 3);
  CHECK(stop.pi(1) == q("4/7") / 2);
  CHECK(stop.pi(2) == q("2/7") / 4);
  CHECK(stop.pi(3) == q("1/7") / 8);
  CHECK(total(stop) == 1);
  CHECK_THROWS_AS(stop.pi(4), DomainError);
  CHECK_THROWS_AS(stop.pi(0), DomainError);
  CHECK_THROWS_AS(LengthMeasure::stop_probability(0, 3), DomainError);
  CHECK_THROWS_AS(LengthMeasure::from_length_distribution({q("1/2"), q("1/4")}), DomainError);
}

TEST_CASE("random length measures are normalized") {
  util::Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_length_measure(rng, 1 + util::uniform_below(rng, 40));
    REQUIRE(total(m) == 1);
    for (const auto& pi : m.table()) REQUIRE(pi >= 0);
  }
}

TEST_CASE("set probabilities of the coin examples") {
  const auto sixth = LengthMeasure::explicit_table({q("1/6"), q("1/6")});
  const auto s = set_of({"1", "00"});
  CHECK(set_probability(s, sixth) == q("1/3"));
  CHECK(set_probability(s, sixth) < prefixfree::omega(s));
  CHECK(prefixfree::omega(s) == q("3/4"));
  CHECK(set_probability(StringSet{}, sixth) == 0);
  CHECK_THROWS_AS(set_probability(set_of({"101"}), sixth), DomainError);
  // Every valid (p, q) on two lengths: 2p + 4q = 1.
  util::Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const Rational p = Rational(exact::BigInt(util::uniform_below(rng, 1001))) / 2000;
    const Rational qq = (1 - 2 * p) / 4;
    const auto m = LengthMeasure::explicit_table({p, qq});
    REQUIRE(set_probability(set_of({"1", "00", "01"}), m) == q("1/2"));
    REQUIRE(set_probability(s, m) == p + qq);
    REQUIRE(set_probability(s, m) <= q("1/2"));
    REQUIRE(set_probability(s, m) < q("3/4"));
  }
}

TEST_CASE("dominance on the census") {
  const auto census = minilang::halting_census(3, 100);
  const auto point = LengthMeasure::point_mass(8, 24);
  const auto r = dominance_check(census, point);
  CHECK(r.halting_probability == census.row(8)->halted * exact::pow2(-8));
  CHECK(r.omega_partial == census.omega_h_partial);
  CHECK(r.hypothesis_met);
  CHECK(r.strict);
  CHECK(r.halting_probability < r.omega_partial);
  CHECK_THROWS_AS(dominance_check(census, LengthMeasure::point_mass(8, 16)), DomainError);
}

TEST_CASE("dominance is strict for random measures") {
  const auto census = minilang::halting_census(3, 100);
  const auto codes = halting_codes(census);
  util::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto m = i % 2 == 0 ? random_length_measure(rng, 24)
                              : LengthMeasure::stop_probability(
                                    Rational(exact::BigInt(1 + util::uniform_below(rng, 99))) / 100, 24);
    const auto r = dominance_check(census, m);
    REQUIRE(r.hypothesis_met);
    REQUIRE(r.strict);
    // Independent left side: sum over the halting codes directly.
    REQUIRE(r.halting_probability == set_probability(codes, m));
    REQUIRE(r.halting_probability < r.omega_partial);
  }
}

TEST_CASE("one halting length does not meet the hypothesis") {
  const auto census = minilang::halting_census(1, 10);
  const auto r = dominance_check(census, LengthMeasure::point_mass(8, 8));
  CHECK_FALSE(r.hypothesis_met);
  CHECK(r.halting_probability == r.omega_partial);
}

TEST_CASE("fixed-length halting") {
  const auto census = minilang::halting_census(3, 100);
  CHECK(fixed_length_halting(census, 8) == q("1/256"));
  CHECK(fixed_length_halting(census, 16) == q("4/65536"));
  CHECK(fixed_length_halting(census, 24) == 15 * exact::pow2(-24));
  CHECK_THROWS_AS(fixed_length_halting(census, 32), DomainError);
  const auto zero_fuel = minilang::halting_census(3, 1);
  CHECK(fixed_length_halting(zero_fuel, 24) == 0);
}

TEST_CASE("the natural-number measure") {
  CHECK(p_nat(NatSet::evens()).lower == q("1/3"));
  CHECK(p_nat(NatSet::evens()).is_exact());
  CHECK(p_nat(NatSet::odds()).lower == q("2/3"));
  CHECK(p_nat(NatSet::all()).lower == 1);
  CHECK(p_nat(NatSet::finite({})).lower == 0);
  CHECK(p_nat(NatSet::finite({1, 3})).lower == q("5/8"));
  // Period 3, residue 1: 1/2 + 1/16 + ... = (1/2) / (1 - 1/8) = 4/7.
  CHECK(p_nat(NatSet::periodic(3, {1})).lower == q("4/7"));
  const auto primes = NatSet::predicate([](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }, "primes");
  const auto e = p_nat(primes, 40);
  CHECK(e.contains(e.lower));
  CHECK(e.width() == exact::pow2(-40));
  CHECK(e.lower > q("41/100"));
  CHECK(e.upper < q("42/100"));
}

TEST_CASE("the natural-number measure is additive on random partitions") {
  util::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t period = 1 + util::uniform_below(rng, 8);
    std::set<std::uint64_t> a;
    std::set<std::uint64_t> b;
    for (std::uint64_t r = 0; r < period; ++r) (util::chance(rng, 1, 2) ? a : b).insert(r);
    const auto pa = p_nat(NatSet::periodic(period, a));
    const auto pb = p_nat(NatSet::periodic(period, b));
    REQUIRE(pa.is_exact());
    REQUIRE(pb.is_exact());
    REQUIRE(pa.lower + pb.lower == 1);
  }
}

TEST_CASE("index measures") {
  const auto half = IndexMeasure::geometric(q("1/2"));
  CHECK(half.alpha(3).lower == q("1/8"));
  CHECK(half.total_mass().lower == 1);
  CHECK(alpha_halting(half, NatSet::evens()).lower == q("1/3"));
  CHECK(alpha_halting(half, NatSet::evens()).is_exact());
  const auto third = IndexMeasure::geometric(q("1/3"));
  // Evens under (2/3)(1/3)^(n-1): (2/9) / (1 - 1/9) = 1/4.
  CHECK(alpha_halting(third, NatSet::evens()).lower == q("1/4"));
  CHECK_THROWS_AS(IndexMeasure::geometric(1), DomainError);
  const auto prefix = IndexMeasure::finite_prefix({q("1/2"), q("1/4")}, q("1/4"));
  CHECK(alpha_halting(prefix, NatSet::finite({1, 2})).lower == q("3/4"));
  CHECK_THROWS_AS(IndexMeasure::finite_prefix({q("1/2"), q("1/4")}, q("1/8")), DomainError);
  CHECK_THROWS_AS(IndexMeasure::finite_prefix({q("1/2"), 0}, q("1/2")), DomainError);
}

TEST_CASE("poisson variants") {
  const auto normalized = IndexMeasure::poisson_normalized(2);
  const auto mass = normalized.total_mass();
  CHECK(mass.contains(1));
  CHECK(mass.width() < q("1/1000000"));
  // Oracle in floating point: alpha_1 = 2 / (e^2 - 1).
  const auto a1 = normalized.alpha(1);
  const double expected = 2.0 / (std::exp(2.0) - 1.0);
  CHECK(a1.lower.to_double() <= expected + 1e-12);
  CHECK(a1.upper.to_double() >= expected - 1e-12);
  const auto written = IndexMeasure::poisson_as_written(2);
  const double written_mass = std::exp(-2.0) * (std::exp(0.5) - 1.0);
  const auto wm = written.total_mass();
  CHECK(wm.lower.to_double() <= written_mass + 1e-12);
  CHECK(wm.upper.to_double() >= written_mass - 1e-12);
  CHECK(wm.upper < 1);
  const auto all = alpha_halting(normalized, NatSet::all(), 60);
  CHECK(all.contains(1));
}

TEST_CASE("exponential enclosures") {
  for (const char* x : {"0", "1/3", "1", "2", "7/2"}) {
    const auto e = exp_enclosure(q(x));
    const double v = std::exp(q(x).to_double());
    REQUIRE(e.lower.to_double() <= v * (1 + 1e-12));
    REQUIRE(e.upper.to_double() >= v * (1 - 1e-12));
    REQUIRE(e.width() < q("1/1000000000"));
  }
  CHECK(exp_enclosure(0).lower == 1);
}

TEST_CASE("the K number") {
  const auto one = k_number(minilang::halting_census(1, 10));
  // E is 01000101 = 69; the integer code of a string s is 2^|s| - 1 + value(s).
  const std::uint64_t code = (1U << 8) - 1 + 69;
  CHECK(one.fraction_bits() == std::set<std::uint64_t>{code});
  CHECK(one.whole_part() == 0);
  for (std::size_t max_chars = 1; max_chars <= 3; ++max_chars) {
    for (const std::uint64_t fuel : {1, 5, 100}) {
      const auto k = k_number(minilang::halting_census(max_chars, fuel));
      REQUIRE(k.whole_part() == 0);
      if (fuel > 1) REQUIRE(k >= k_number(minilang::halting_census(max_chars, fuel == 5 ? 1 : 5)));
      if (max_chars > 1) REQUIRE(k >= k_number(minilang::halting_census(max_chars - 1, fuel)));
    }
  }
  // Direct oracle: one term per halting program, all exponents distinct.
  const auto census = minilang::halting_census(3, 100);
  std::set<std::uint64_t> exps;
  for (const auto& p : census.halting) {
    exps.insert(static_cast<std::uint64_t>(exact::integer_code(minilang::encode(p))));
  }
  CHECK(k_number(census).fraction_bits() == exps);
}

TEST_CASE("generalized omega") {
  CHECK(generalized_omega(set_of({"1", "00"}), 3) == q("4/9"));
  CHECK(generalized_omega(set_of({"1", "00"}), 2) == q("3/4"));
  CHECK_THROWS_AS(generalized_omega(set_of({"1"}), 1), DomainError);
  util::Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const auto s = prefixfree::random_prefix_free_set(rng, 10);
    const auto g3 = generalized_omega(s, 3);
    REQUIRE(g3 <= prefixfree::omega(s));
    REQUIRE(prefixfree::omega(s) <= 1);
  }
}

TEST_CASE("Monte Carlo estimates") {
  const auto s = set_of({"1", "00"});
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto r = sample_real_prefix(s, 10000, seed);
    REQUIRE(r.target == q("3/4"));
    REQUIRE(r.estimate == Rational(exact::BigInt(r.hits), exact::BigInt(r.trials)));
    REQUIRE(std::abs(r.estimate.to_double() - 0.75) <= 0.02);
  }
  const auto zero = sample_real_prefix(set_of({"0"}), 10000, 9);
  CHECK(std::abs(zero.estimate.to_double() - 0.5) <= 0.02);
  CHECK(sample_real_prefix(StringSet{}, 1000, 1).hits == 0);
  CHECK_THROWS_AS(sample_real_prefix(set_of({"0", "00"}), 10, 1), prefixfree::NotPrefixFreeError);
  CHECK_THROWS_AS(sample_real_prefix(s, 0, 1), DomainError);
}

TEST_CASE("Monte Carlo is reproducible and matches the serial reference") {
  const auto s = set_of({"1", "011", "0100"});
  for (const std::uint64_t trials : {1, 4095, 4096, 4097, 20000}) {
    const auto a = sample_real_prefix(s, trials, 11);
    const auto b = sample_real_prefix_serial(s, trials, 11);
    const auto c = sample_real_prefix(s, trials, 11);
    REQUIRE(a.hits == b.hits);
    REQUIRE(a.hits == c.hits);
  }
  CHECK(sample_real_prefix(s, 20000, 11).hits != sample_real_prefix(s, 20000, 12).hits);
}
