#include "omega/weights/basic.hpp"

#include <set>

#include "omega/error.hpp"

namespace omega::weights {

using logic::Classification;
using logic::classify;
using logic::entails;

int w_valuation(const Valuation& v, const Theory& t) { return logic::satisfies(v, t) ? 0 : 1; }

int w_structure(const FiniteStructure& m, const FoTheory& t) { return logic::fo_models(m, t) ? 0 : 1; }

int w_taut(const Theory& t) { return classify(t) == Classification::Tautological ? 0 : 1; }

int w_incons(const Theory& t) { return classify(t) == Classification::Inconsistent ? 1 : 0; }

int w_lower(const Theory& vv, const Theory& t) { return entails(vv, t) ? 0 : 1; }

int w_upper(const Theory& vv, const Theory& t) { return entails(t, vv) ? 1 : 0; }

int w_three(const Theory& t) {
  switch (classify(t)) {
    case Classification::Tautological:
      return 0;
    case Classification::ConsistentNontautological:
      return 1;
    case Classification::Inconsistent:
      return 2;
  }
  return 1;
}

namespace {

void require_middle(const Theory& vv) {
  if (classify(vv) != Classification::ConsistentNontautological) {
    throw PreconditionError("the reference theory " + vv.str() + " must be consistent and not tautological");
  }
}

}  // namespace

int w_four(const Theory& vv, const Theory& t) {
  require_middle(vv);
  if (!logic::consistent(t)) return 3;
  const bool t_v = entails(t, vv);
  const bool v_t = entails(vv, t);
  if (!t_v && v_t) return 0;
  if (t_v && !v_t) return 2;
  return 1;
}

int w_five(const Theory& vv, const Theory& t) {
  require_middle(vv);
  const auto c = classify(t);
  if (c == Classification::Tautological) return 0;
  if (c == Classification::Inconsistent) return 4;
  const bool t_v = entails(t, vv);
  const bool v_t = entails(vv, t);
  if (!t_v && v_t) return 1;
  if (t_v && !v_t) return 3;
  return 2;
}

int counting_weight(const std::vector<FiniteStructure>& family, const FoTheory& t) {
  std::set<std::size_t> sizes;
  for (const auto& m : family) {
    if (!sizes.insert(m.size()).second) {
      throw PreconditionError("structures must be pairwise non-equinumerous; two have " + std::to_string(m.size()) +
                              " elements");
    }
  }
  int failures = 0;
  for (const auto& m : family) {
    if (!logic::fo_models(m, t)) ++failures;
  }
  return failures;
}

int axiom_count(const Theory& t) { return static_cast<int>(t.size()); }

}  // namespace omega::weights
