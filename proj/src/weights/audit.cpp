#include "omega/weights/audit.hpp"

#include <algorithm>
#include <functional>

#include "omega/error.hpp"
#include "omega/logic/decide.hpp"
#include "omega/weights/basic.hpp"

namespace omega::weights {

std::string WeightValue::str() const {
  if (is_exact()) return lower.str();
  return "[" + lower.str() + ", " + upper.str() + "]";
}

Separation Weight::separate(const Theory&, const Theory&, const WeightValue& wt, const WeightValue& wu) const {
  if (wt.disjoint_from(wu)) return {true, "values differ"};
  return {false, wt.is_exact() && wu.is_exact() ? "equal values" : "enclosures overlap"};
}

namespace {

using Fn = std::function<Rational(const Theory&)>;

class ExactWeight : public Weight {
 public:
  ExactWeight(std::string name, std::string params, Fn fn)
      : name_(std::move(name)), params_(std::move(params)), fn_(std::move(fn)) {}
  std::string name() const override { return name_; }
  std::string parameters() const override { return params_; }
  WeightValue weigh(const Theory& t) const override { return WeightValue::exact(fn_(t)); }

 private:
  std::string name_;
  std::string params_;
  Fn fn_;
};

// One disagreement finder per atom universe, shared by all pairs.
class FinderPool {
 public:
  DisagreementFinder* get(const Theory& t, const Theory& u) {
    auto atoms = t.atoms();
    atoms.merge(u.atoms());
    if (atoms.size() > DisagreementFinder::kMaxUniverse) return nullptr;
    std::vector<std::uint32_t> key(atoms.begin(), atoms.end());
    std::lock_guard lock(mutex_);
    auto& slot = finders_[key];
    if (!slot) slot = std::make_unique<DisagreementFinder>(key);
    return slot.get();
  }

 private:
  std::mutex mutex_;
  std::map<std::vector<std::uint32_t>, std::unique_ptr<DisagreementFinder>> finders_;
};

std::string certificate_text(const SeparationCertificate& c) {
  const auto& d = c.disagreement;
  std::string s = "first disagreement at n=" + d.index.str() + " (" + logic::render_tokens(d.witness) + ", proved by " +
                  (d.first_proves ? "T" : "U") + ")";
  if (c.separated) {
    s += ", separated after " + std::to_string(c.window) + " more terms: relative bounds " + c.lighter_upper.str() +
         " < " + c.heavier_lower.str();
  } else {
    s += ", not separated within " + std::to_string(c.window) + " terms";
  }
  return s;
}

class SeriesWeight : public Weight {
 public:
  SeriesWeight(std::size_t precision, std::optional<AlphaSpec> spec) : precision_(precision), spec_(std::move(spec)) {
    if (precision_ == 0) throw DomainError("precision must be at least 1");
  }
  std::string name() const override { return spec_ ? "vab" : "v"; }
  std::string parameters() const override {
    std::string s = "k=" + std::to_string(precision_);
    if (spec_) s += "," + spec_->str();
    return s;
  }
  WeightValue weigh(const Theory& t) const override {
    const auto bits = sigma_prefix(t, precision_);
    return WeightValue::enclosure(spec_ ? v_ab_from_bits(bits, *spec_) : v_weight_from_bits(bits));
  }
  Separation separate(const Theory& t, const Theory& u, const WeightValue& wt, const WeightValue& wu) const override {
    if (wt.disjoint_from(wu)) return {true, "enclosures disjoint at k=" + std::to_string(precision_)};
    DisagreementFinder* finder = pool_.get(t, u);
    if (finder == nullptr) return {false, "more than six atoms; no disagreement search"};
    const auto mt = finder->models(t);
    const auto mu = finder->models(u);
    const auto cert = spec_ ? separate_vab(*finder, mt, mu, *spec_) : separate_v(*finder, mt, mu);
    if (cert.disagreement.status != Disagreement::Status::Found) return {false, cert.disagreement.status_name()};
    return {cert.separated, certificate_text(cert)};
  }

 private:
  std::size_t precision_;
  std::optional<AlphaSpec> spec_;
  mutable FinderPool pool_;
};

class AssignmentWeight : public Weight {
 public:
  AssignmentWeight(WeightAssignment a, Rational seed) : assignment_(std::move(a)), seed_(std::move(seed)) {}
  std::string name() const override { return "u"; }
  std::string parameters() const override {
    return "seed=" + seed_.str() + ",theories=" + std::to_string(assignment_.entries.size());
  }
  WeightValue weigh(const Theory& t) const override {
    const auto w = assignment_.lookup(t);
    if (!w) throw DomainError("theory " + t.str() + " is not covered by the construction");
    return WeightValue::exact(*w);
  }

 private:
  WeightAssignment assignment_;
  Rational seed_;
};

logic::FiniteStructure nullary_structure(std::size_t size, const logic::Valuation& v,
                                         const std::vector<std::uint32_t>& atoms) {
  std::vector<std::string> universe;
  for (std::size_t i = 0; i < size; ++i) universe.push_back("e" + std::to_string(i));
  logic::FiniteStructure m(universe);
  for (const auto a : atoms) {
    const std::string name = "p" + std::to_string(a);
    m.declare(name, 0);
    if (v(a)) m.add(name, {});
  }
  return m;
}

std::string atoms_text(const std::vector<std::uint32_t>& atoms) {
  std::string s;
  for (const auto a : atoms) s += (s.empty() ? "p" : ",p") + std::to_string(a);
  return s;
}

}  // namespace

const std::vector<std::string>& weight_names() {
  static const std::vector<std::string> names = {"wv",   "wm", "wtaut", "wincons", "wlower", "wupper", "w3",
                                                 "w4",   "w5", "count", "v",       "vab",    "u",      "axiom-count"};
  return names;
}

std::unique_ptr<Weight> make_weight(const std::string& name, const WeightParams& p) {
  const auto exact = [&](std::string params, Fn fn) {
    return std::make_unique<ExactWeight>(name, std::move(params), std::move(fn));
  };
  if (name == "wv") {
    return exact("valuation=" + p.valuation.str(), [v = p.valuation](const Theory& t) { return w_valuation(v, t); });
  }
  if (name == "wm") {
    const auto m = p.structure ? *p.structure : logic::valuation_structure(p.valuation, p.atoms);
    const std::string params = p.structure ? "structure=custom" : "structure=valuation(" + p.valuation.str() + ")";
    return exact(params, [m](const Theory& t) { return w_structure(m, logic::embed(t)); });
  }
  if (name == "wtaut") return exact("", [](const Theory& t) { return w_taut(t); });
  if (name == "wincons") return exact("", [](const Theory& t) { return w_incons(t); });
  if (name == "w3") return exact("", [](const Theory& t) { return w_three(t); });
  if (name == "axiom-count") return exact("", [](const Theory& t) { return axiom_count(t); });
  const std::string ref = "reference=" + p.reference.str();
  if (name == "wlower") return exact(ref, [r = p.reference](const Theory& t) { return w_lower(r, t); });
  if (name == "wupper") return exact(ref, [r = p.reference](const Theory& t) { return w_upper(r, t); });
  if (name == "w4" || name == "w5") {
    // Checked once here rather than on every call.
    if (logic::classify(p.reference) != logic::Classification::ConsistentNontautological) {
      throw PreconditionError("the reference theory " + p.reference.str() + " must be consistent and not tautological");
    }
    if (name == "w4") return exact(ref, [r = p.reference](const Theory& t) { return w_four(r, t); });
    return exact(ref, [r = p.reference](const Theory& t) { return w_five(r, t); });
  }
  if (name == "count") {
    // Universes of sizes 1, 2, 3 carrying three different valuations.
    std::vector<logic::FiniteStructure> family;
    logic::Valuation alternating;
    for (const auto a : p.atoms) alternating.set(a, a % 2 == 0);
    family.push_back(nullary_structure(1, logic::Valuation(true), p.atoms));
    family.push_back(nullary_structure(2, alternating, p.atoms));
    family.push_back(nullary_structure(3, logic::Valuation(false), p.atoms));
    return exact("family=sizes 1,2,3 over " + atoms_text(p.atoms),
                 [family](const Theory& t) { return counting_weight(family, logic::embed(t)); });
  }
  if (name == "v") return std::make_unique<SeriesWeight>(p.precision, std::nullopt);
  if (name == "vab") return std::make_unique<SeriesWeight>(p.precision, p.alpha ? *p.alpha : AlphaSpec::geometric(7, 2, 4));
  if (name == "u") return std::make_unique<AssignmentWeight>(u_construction(p.ordering, p.seed), p.seed);
  throw InputError("unknown weight '" + name + "'");
}

namespace {

std::vector<WeightValue> weigh_all(const Weight& w, const std::vector<Theory>& corpus, bool parallel) {
  std::vector<WeightValue> values(corpus.size());
  const auto n = static_cast<std::ptrdiff_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) values[i] = w.weigh(corpus[i]);
  return values;
}

void sort_violations(std::vector<Violation>& v) {
  std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
    return std::pair(a.first, a.second) < std::pair(b.first, b.second);
  });
}

AuditReport run_hp(const Weight& w, const std::vector<Theory>& corpus, bool parallel) {
  AuditReport r{"HP", w.name(), corpus.size(), 0, {}};
  const auto entails = parallel ? entailment_matrix(corpus) : entailment_matrix_serial(corpus);
  const auto values = weigh_all(w, corpus, parallel);
  const auto n = static_cast<std::ptrdiff_t>(corpus.size());
  std::size_t checked = 0;
#pragma omp parallel if (parallel) reduction(+ : checked)
  {
    std::vector<Violation> local;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < corpus.size(); ++j) {
        if (static_cast<std::size_t>(i) == j || !entails(i, j)) continue;
        ++checked;
        const auto& a = values[i];
        const auto& b = values[j];
        if (!(a.lower >= b.lower) || !(a.upper >= b.upper)) {
          local.push_back({static_cast<std::size_t>(i), j, a, b, "T entails U but W(T) < W(U)"});
        }
      }
    }
#pragma omp critical
    r.violations.insert(r.violations.end(), local.begin(), local.end());
  }
  r.pairs_checked = checked;
  sort_violations(r.violations);
  return r;
}

AuditReport run_ep(const Weight& w, const std::vector<Theory>& corpus, bool parallel) {
  AuditReport r{"EP", w.name(), corpus.size(), 0, {}};
  const auto entails = parallel ? entailment_matrix(corpus) : entailment_matrix_serial(corpus);
  const auto values = weigh_all(w, corpus, parallel);
  const auto n = static_cast<std::ptrdiff_t>(corpus.size());
  std::size_t checked = 0;
#pragma omp parallel if (parallel) reduction(+ : checked)
  {
    std::vector<Violation> local;
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < corpus.size(); ++j) {
        if (entails.equivalent(i, j)) continue;
        ++checked;
        const auto s = w.separate(corpus[i], corpus[j], values[i], values[j]);
        if (!s.separated) local.push_back({static_cast<std::size_t>(i), j, values[i], values[j], s.evidence});
      }
    }
#pragma omp critical
    r.violations.insert(r.violations.end(), local.begin(), local.end());
  }
  r.pairs_checked = checked;
  sort_violations(r.violations);
  return r;
}

}  // namespace

AuditReport hp_audit(const Weight& w, const std::vector<Theory>& corpus) { return run_hp(w, corpus, true); }
AuditReport hp_audit_serial(const Weight& w, const std::vector<Theory>& corpus) { return run_hp(w, corpus, false); }
AuditReport ep_audit(const Weight& w, const std::vector<Theory>& corpus) { return run_ep(w, corpus, true); }
AuditReport ep_audit_serial(const Weight& w, const std::vector<Theory>& corpus) { return run_ep(w, corpus, false); }

}  // namespace omega::weights
