// Acceptance harness: one PASS/FAIL line per criterion, exit 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "omega/exact/bitstring.hpp"
#include "omega/exact/interval.hpp"
#include "omega/logic/decide.hpp"
#include "omega/logic/enumeration.hpp"
#include "omega/measures/length_measure.hpp"
#include "omega/measures/montecarlo.hpp"
#include "omega/measures/suggestions.hpp"
#include "omega/minilang/census.hpp"
#include "omega/prefixfree/string_set.hpp"
#include "omega/util/random.hpp"
#include "omega/weights/audit.hpp"
#include "omega/weights/corpus.hpp"
#include "omega/weights/disagreement.hpp"
#include "omega/weights/sigma.hpp"
#include "support/minilang_oracle.hpp"

using namespace omega;
using exact::BigInt;
using exact::BitString;
using exact::Rational;
using logic::Theory;

namespace {

// Pinned parameters.
constexpr std::uint64_t kCorpusSeed = 42;
constexpr std::size_t kCorpusSize = 500;
constexpr std::size_t kPrefixSets = 1000;
constexpr std::size_t kTrieDepth = 12;
constexpr std::size_t kSigmaBits = 2048;
constexpr std::size_t kRandomMeasures = 100;
constexpr std::size_t kMhoPairs = 200;
constexpr std::uint64_t kMcTrials = 10000;
constexpr double kMcTolerance = 0.02;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = "first failure: " + what;
    pass = pass && ok;
  }
};

Rational q(const char* s) { return Rational::parse(s); }
BitString bs(const char* s) { return BitString::parse(s); }

prefixfree::StringSet set_of(std::initializer_list<const char*> items) {
  std::vector<BitString> v;
  for (const char* s : items) v.push_back(bs(s));
  return prefixfree::StringSet(v);
}

const std::vector<Theory>& corpus() {
  static const std::vector<Theory> c = weights::random_corpus(kCorpusSeed, kCorpusSize);
  return c;
}

const weights::EntailmentMatrix& matrix() {
  static const weights::EntailmentMatrix m = weights::entailment_matrix(corpus());
  return m;
}

// sigma prefixes of every corpus theory, computed once.
const std::vector<std::vector<bool>>& sigma_table() {
  static const std::vector<std::vector<bool>> table = [] {
    std::vector<std::vector<bool>> t;
    for (const auto& theory : corpus()) t.push_back(weights::sigma_prefix(theory, kSigmaBits));
    return t;
  }();
  return table;
}

Outcome exact_fixtures() {
  Outcome o;
  o.require(prefixfree::omega(set_of({"0"})) == q("1/2"), "omega {0}");
  o.require(prefixfree::omega(set_of({"0", "00"})) == q("3/4"), "omega {0,00}");
  o.require(prefixfree::omega(set_of({"1", "00"})) == q("3/4"), "omega {1,00}");
  o.require(prefixfree::omega(set_of({"0", "1", "00"})) == q("5/4"), "omega {0,1,00}");
  o.require(!prefixfree::check_prefix_free(set_of({"1", "00"})).has_value(), "{1,00} prefix-free");
  o.require(!prefixfree::check_prefix_free(set_of({"0", "1"})).has_value(), "{0,1} prefix-free");
  o.require(prefixfree::check_prefix_free(set_of({"0", "00"})).has_value(), "{0,00} not prefix-free");
  o.require(prefixfree::check_prefix_free(set_of({"0", "1", "00"})).has_value(), "{0,1,00} not prefix-free");
  const auto iv = exact::interval_of(bs("01001"));
  o.require(iv.lower() == q("9/32") && iv.upper() == q("5/16"), "I_01001");
  o.require(iv.width() == q("1/32"), "length of I_01001");
  o.require(exact::integer_code(bs("01001")) == 40, "integer code of 01001");
  o.require(exact::from_integer_code(25).str() == "1010", "string with integer code 25");
  o.require(exact::nat_to_binary(9).str() == "1001", "9 in base 2");
  o.require(exact::nat_to_binary(26).str() == "11010", "26 in base 2");
  o.require(exact::nat_to_binary(41).str() == "101001", "41 in base 2");
  const auto evens = measures::p_nat(measures::NatSet::evens());
  const auto odds = measures::p_nat(measures::NatSet::odds());
  o.require(evens.is_exact() && evens.lower == q("1/3"), "p(evens)");
  o.require(odds.is_exact() && odds.lower == q("2/3"), "p(odds)");
  if (o.pass) o.detail = "19 fixtures exact";
  return o;
}

std::vector<prefixfree::StringSet> prefix_free_corpus() {
  util::Rng rng(2024);
  std::vector<prefixfree::StringSet> sets;
  for (std::size_t i = 0; i < kPrefixSets; ++i) sets.push_back(prefixfree::random_prefix_free_set(rng, kTrieDepth));
  return sets;
}

Outcome kraft() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& s : prefix_free_corpus()) {
    o.require(!prefixfree::check_prefix_free(s).has_value(), "generated set is prefix-free");
    o.require(prefixfree::omega(s) <= 1, "omega <= 1");
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " sets, 0 exceptions";
  return o;
}

// Union length by sorting and sweeping; tolerates overlaps, so it does not
// assume what it is meant to confirm.
Rational union_length(std::vector<exact::DyadicInterval> parts) {
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.lower() < b.lower(); });
  Rational total = 0;
  Rational reach = 0;
  for (const auto& p : parts) {
    const Rational lo = std::max(p.lower(), reach);
    if (p.upper() > lo) total += p.upper() - lo;
    reach = std::max(reach, p.upper());
  }
  return total;
}

Outcome interval_identity() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& s : prefix_free_corpus()) {
    std::vector<exact::DyadicInterval> parts;
    for (const auto& e : s.elements()) parts.push_back(exact::interval_of(e));
    const Rational swept = union_length(parts);
    const auto report = prefixfree::interval_measure_equals_omega(s);
    o.require(report.equal, "library identity");
    o.require(swept == prefixfree::omega(s), "swept union length equals omega");
    o.require(report.interval_measure == swept, "library measure equals swept length");
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " sets, exact equality";
  return o;
}

Outcome hp_audits() {
  Outcome o;
  weights::WeightParams params;
  params.ordering = corpus();
  std::size_t weights_checked = 0;
  std::size_t pairs = 0;
  for (const auto& name : weights::weight_names()) {
    if (name == "axiom-count") continue;
    const auto report = weights::hp_audit(*weights::make_weight(name, params), corpus());
    o.require(report.violations.empty(), name + " has " + std::to_string(report.violations.size()) + " violations");
    pairs += report.pairs_checked;
    ++weights_checked;
  }
  for (std::uint64_t row = 0; row < 16; ++row) {
    weights::WeightParams p = params;
    p.valuation = logic::Valuation::from_row({0, 1, 2, 3}, row);
    for (const char* name : {"wv", "wm"}) {
      const auto report = weights::hp_audit(*weights::make_weight(name, p), corpus());
      o.require(report.violations.empty(), std::string(name) + " valuation row " + std::to_string(row));
    }
  }
  auto broken_corpus = corpus();
  broken_corpus.push_back(logic::parse_theory_inline("p0 & p1"));
  broken_corpus.push_back(logic::parse_theory_inline("p0; p1 | p1; p0 | p0"));
  const auto broken = weights::hp_audit(*weights::make_weight("axiom-count"), broken_corpus);
  o.require(!broken.violations.empty(), "axiom-count produced no violation");
  if (o.pass) {
    o.detail = std::to_string(weights_checked) + " weights, " + std::to_string(pairs) +
               " entailing pairs, 0 violations; axiom-count: " + std::to_string(broken.violations.size()) +
               " violations";
  }
  return o;
}

Outcome ep_separation() {
  Outcome o;
  const auto& c = corpus();
  const auto& m = matrix();
  weights::DisagreementFinder finder({0, 1, 2, 3});
  std::vector<std::uint64_t> masks;
  for (const auto& t : c) masks.push_back(finder.models(t));
  std::size_t pairs = 0;
  std::size_t direct = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (m.equivalent(i, j)) continue;
      ++pairs;
      const auto cert = weights::separate_v(finder, masks[i], masks[j]);
      o.require(cert.disagreement.status == weights::Disagreement::Status::Found, "finite disagreement index");
      o.require(cert.separated, "V certificate separates");
      // Direct cross-check on a sample: enclosures past the index are disjoint.
      const auto n = static_cast<std::size_t>(cert.disagreement.index);
      if (pairs % 37 == 0 && n + cert.window <= kSigmaBits) {
        ++direct;
        const std::size_t k = n + cert.window;
        const auto& si = sigma_table()[i];
        const auto& sj = sigma_table()[j];
        const auto ei = weights::v_weight_from_bits({si.begin(), si.begin() + static_cast<std::ptrdiff_t>(k)});
        const auto ej = weights::v_weight_from_bits({sj.begin(), sj.begin() + static_cast<std::ptrdiff_t>(k)});
        o.require(ei.disjoint_from(ej), "direct V enclosures disjoint");
        o.require(si[n - 1] != sj[n - 1], "sigma differs at the index");
        for (std::size_t b = 0; b + 1 < n; ++b) o.require(si[b] == sj[b], "sigma agrees before the index");
      }
    }
  }
  weights::WeightParams params;
  params.ordering = c;
  std::string audits;
  for (const char* name : {"u", "v", "vab"}) {
    const auto report = weights::ep_audit(*weights::make_weight(name, params), c);
    o.require(report.violations.empty(), std::string(name) + " EP audit");
    audits += std::string(" ") + name + "=" + std::to_string(report.violations.size());
  }
  if (o.pass) {
    o.detail = std::to_string(pairs) + " inequivalent pairs separated (" + std::to_string(direct) +
               " cross-checked directly); EP violations:" + audits;
  }
  return o;
}

bool sigma_bit(const Theory& t, const BigInt& n) { return logic::entails(t, logic::sentence_unrank(n)); }

Outcome sigma_monotonicity() {
  Outcome o;
  const auto& c = corpus();
  const auto& m = matrix();
  const auto& sigma = sigma_table();
  weights::DisagreementFinder finder({0, 1, 2, 3});
  std::size_t entailing = 0;
  std::size_t refuted = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (m(i, j)) {
        ++entailing;
        bool dominated = true;
        for (std::size_t b = 0; b < kSigmaBits && dominated; ++b) dominated = !sigma[j][b] || sigma[i][b];
        o.require(dominated, "entailment gives prefix dominance");
        if (!m(j, i)) {
          // Decisive index: the first disagreement, where only T may prove.
          const auto d = finder.find(c[i], c[j]);
          o.require(d.first_proves, "stronger theory proves the first separating sentence");
          o.require(sigma_bit(c[i], d.index) && !sigma_bit(c[j], d.index), "bits at the decisive index");
        }
      } else {
        ++refuted;
        // Decisive index: an axiom of U that T does not prove.
        const Theory& u = c[j];
        const auto axiom = std::find_if(u.axioms().begin(), u.axioms().end(),
                                        [&](const auto& a) { return !logic::entails(c[i], a); });
        o.require(axiom != u.axioms().end(), "non-entailment has an unprovable axiom");
        if (axiom == u.axioms().end()) continue;
        const BigInt n = logic::sentence_rank(*axiom);
        o.require(sigma_bit(u, n) && !sigma_bit(c[i], n), "dominance fails at the decisive index");
      }
    }
  }
  std::size_t inconsistent = 0;
  std::vector<Theory> absurd = {logic::parse_theory_inline("p0; !p0")};
  for (const auto& t : c) {
    if (!logic::consistent(t)) absurd.push_back(t);
  }
  for (const auto& t : absurd) {
    ++inconsistent;
    const auto bits = weights::sigma_prefix(t, kSigmaBits);
    o.require(std::all_of(bits.begin(), bits.end(), [](bool b) { return b; }), "inconsistent theory has all ones");
    o.require(weights::v_weight(t, 64).upper == 1, "inconsistent V enclosure reaches 1");
  }
  if (o.pass) {
    o.detail = std::to_string(entailing) + " entailing and " + std::to_string(refuted) +
               " non-entailing ordered pairs; " + std::to_string(inconsistent) + " inconsistent theories all-ones to " +
               std::to_string(kSigmaBits) + " bits";
  }
  return o;
}

Outcome census() {
  Outcome o;
  const auto report = minilang::halting_census(3, 100);
  const auto programs = minilang::enumerate_programs(3);
  o.require(programs.size() == 21, "21 programs");
  std::vector<BitString> codes;
  std::map<std::size_t, std::uint64_t> oracle;
  for (const auto& p : programs) {
    codes.push_back(minilang::encode(p));
    if (testing::decide(p).halts) ++oracle[p.bit_length()];
  }
  o.require(!prefixfree::check_prefix_free(prefixfree::StringSet(codes)).has_value(), "codes prefix-free");
  o.require(report.row(8) && report.row(8)->halted == 1, "N(8) = 1");
  o.require(report.row(16) && report.row(16)->halted == 4, "N(16) = 4");
  o.require(oracle[8] == 1 && oracle[16] == 4, "oracle agrees on N(8), N(16)");
  o.require(report.row(24) && report.row(24)->halted == oracle[24], "N(24) matches the trace oracle");
  o.require(report.omega_p_partial + exact::pow2(-8) <= 1, "gap below 1");
  const auto gap = minilang::lemma_pi_gap(3);
  o.require(gap.gap_holds && gap.prefix_free, "witness X keeps the set prefix-free");
  if (o.pass) {
    o.detail = "21 programs; N(8)=1 N(16)=4 N(24)=" + std::to_string(report.row(24)->halted) + " (oracle " +
               std::to_string(oracle[24]) + "); Omega_P=" + report.omega_p_partial.str();
  }
  return o;
}

Outcome dominance() {
  Outcome o;
  const auto report = minilang::halting_census(3, 100);
  util::Rng rng(7);
  std::vector<measures::LengthMeasure> family;
  for (std::size_t i = 0; i < kRandomMeasures; ++i) family.push_back(measures::random_length_measure(rng, 24));
  for (std::size_t mlen = 1; mlen <= 24; ++mlen) family.push_back(measures::LengthMeasure::point_mass(mlen, 24));
  std::size_t strict = 0;
  for (const auto& pi : family) {
    const auto r = measures::dominance_check(report, pi);
    // Independent evaluation of both sides from the census rows.
    Rational lhs = 0;
    Rational rhs = 0;
    std::size_t lengths = 0;
    for (const auto& row : report.rows) {
      lhs += Rational(BigInt(row.halted)) * pi.pi(row.bit_length);
      rhs += Rational(BigInt(row.halted)) * exact::pow2(-static_cast<std::int64_t>(row.bit_length));
      if (row.halted > 0) ++lengths;
    }
    o.require(r.halting_probability == lhs && r.omega_partial == rhs, "dominance sums");
    o.require(r.hypothesis_met == (lengths >= 2), "hypothesis flag");
    if (lengths >= 2) {
      o.require(lhs < rhs && r.strict, "strict inequality");
      ++strict;
    }
  }
  util::Rng coin(8);
  for (int i = 0; i < 200; ++i) {
    const Rational p = Rational(BigInt(util::uniform_below(coin, 1001))) / 2000;
    const Rational qq = (1 - 2 * p) / 4;
    const auto pi = measures::LengthMeasure::explicit_table({p, qq});
    o.require(measures::set_probability(set_of({"1", "00", "01"}), pi) == q("1/2"), "{1,00,01} has probability 1/2");
    const auto two = measures::set_probability(set_of({"1", "00"}), pi);
    o.require(two <= q("1/2") && q("1/2") < q("3/4"), "{1,00} at most 1/2");
  }
  if (o.pass) {
    o.detail = std::to_string(family.size()) + " measures, " + std::to_string(strict) +
               " strict; 200 coin measures exact";
  }
  return o;
}

Outcome mho_axioms() {
  Outcome o;
  const auto report = minilang::halting_census(4, 100);
  const auto all = minilang::enumerate_programs(4);
  o.require(minilang::mho(all, report) == 1, "mho of everything is 1");
  o.require(minilang::mho({}, report) == 0, "mho of nothing is 0");
  util::Rng rng(9);
  for (std::size_t t = 0; t < kMhoPairs; ++t) {
    std::vector<minilang::Program> a;
    std::vector<minilang::Program> b;
    for (const auto& p : all) {
      const auto pick = util::uniform_below(rng, 3);
      if (pick == 0) a.push_back(p);
      if (pick == 1) b.push_back(p);
    }
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    o.require(minilang::mho(ab, report) == minilang::mho(a, report) + minilang::mho(b, report), "finite additivity");
  }
  if (o.pass) o.detail = std::to_string(all.size()) + " programs; " + std::to_string(kMhoPairs) + " disjoint pairs additive";
  return o;
}

Outcome monte_carlo() {
  Outcome o;
  const auto s = set_of({"1", "00"});
  std::string estimates;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto r = measures::sample_real_prefix(s, kMcTrials, seed);
    const double est = r.estimate.to_double();
    o.require(r.target == q("3/4"), "target 3/4");
    o.require(std::abs(est - 0.75) <= kMcTolerance, "seed " + std::to_string(seed) + " within tolerance");
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.4f", est);
    estimates += buf;
  }
  if (o.pass) o.detail = "estimates" + estimates + " vs 0.75 +- 0.02";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact fixtures", exact_fixtures},
      {"Kraft inequality", kraft},
      {"interval-measure identity", interval_identity},
      {"HP audits", hp_audits},
      {"EP separation", ep_separation},
      {"sigma monotonicity", sigma_monotonicity},
      {"minilang census", census},
      {"dominance", dominance},
      {"mho axioms", mho_axioms},
      {"Monte Carlo agreement", monte_carlo},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %-26s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
