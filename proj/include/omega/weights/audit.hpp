#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "omega/exact/rational.hpp"
#include "omega/logic/first_order.hpp"
#include "omega/logic/theory.hpp"
#include "omega/weights/construction.hpp"
#include "omega/weights/corpus.hpp"
#include "omega/weights/disagreement.hpp"
#include "omega/weights/sigma.hpp"

namespace omega::weights {

/// Exact value (lower == upper) or certified enclosure of a weight.
struct WeightValue {
  Rational lower;
  Rational upper;

  static WeightValue exact(Rational v) { return {v, v}; }
  static WeightValue enclosure(const WeightEnclosure& e) { return {e.lower, e.upper}; }
  bool is_exact() const { return lower == upper; }
  bool disjoint_from(const WeightValue& o) const { return upper < o.lower || o.upper < lower; }
  /// "3" or "[lower, upper]".
  std::string str() const;
};

/// Outcome of trying to show that two inequivalent theories weigh differently.
struct Separation {
  bool separated = false;
  std::string evidence;
};

class Weight {
 public:
  virtual ~Weight() = default;
  virtual std::string name() const = 0;
  /// Parameters in a reproducible text form.
  virtual std::string parameters() const { return ""; }
  virtual WeightValue weigh(const Theory& t) const = 0;
  /// Default: exact values differ, or enclosures are disjoint.
  virtual Separation separate(const Theory& t, const Theory& u, const WeightValue& wt, const WeightValue& wu) const;
};

struct WeightParams {
  logic::Valuation valuation = logic::Valuation(false);  // wv, wm
  std::optional<logic::FiniteStructure> structure;  // wm; default: the valuation as a one-point structure
  Theory reference = Theory{Formula::atom(0)};  // wlower, wupper, w4, w5
  std::vector<std::uint32_t> atoms = {0, 1, 2, 3};  // vocabulary for embedded weights
  std::size_t precision = 64;                 // v, vab
  std::optional<AlphaSpec> alpha;             // vab; default geometric c=7, a=2, b=4
  Rational seed = 0;                          // u
  std::vector<Theory> ordering;               // u: theories in construction order
};

/// Names accepted by make_weight.
const std::vector<std::string>& weight_names();
/// Throws InputError for unknown names. "u" builds its assignment from
/// params.ordering.
std::unique_ptr<Weight> make_weight(const std::string& name, const WeightParams& params = {});

struct Violation {
  std::size_t first = 0;   // corpus index of T
  std::size_t second = 0;  // corpus index of U
  WeightValue first_weight;
  WeightValue second_weight;
  std::string reason;
};

struct AuditReport {
  std::string principle;  // "HP" or "EP"
  std::string weight;
  std::size_t corpus_size = 0;
  std::size_t pairs_checked = 0;
  std::vector<Violation> violations;  // sorted by (first, second)
};

/// For every ordered pair with T ⊢ U: W(T) >= W(U), endpoint-wise for
/// enclosures. Parallel over T.
AuditReport hp_audit(const Weight& w, const std::vector<Theory>& corpus);
AuditReport hp_audit_serial(const Weight& w, const std::vector<Theory>& corpus);
/// For every unordered inequivalent pair: the weights are shown to differ.
/// Overlapping enclosures go to Weight::separate. Parallel over T.
AuditReport ep_audit(const Weight& w, const std::vector<Theory>& corpus);
AuditReport ep_audit_serial(const Weight& w, const std::vector<Theory>& corpus);

}  // namespace omega::weights
