#include "omega/weights/construction.hpp"

#include <set>

#include "omega/error.hpp"
#include "omega/logic/decide.hpp"

namespace omega::weights {

std::optional<Rational> WeightAssignment::lookup(const Theory& t) const {
  for (const auto& e : entries) {
    if (logic::equivalent(e.theory, t)) return e.weight;
  }
  return std::nullopt;
}

WeightAssignment u_construction(const std::vector<Theory>& theories, const Rational& seed) {
  return u_construction(theories, seed, entailment_matrix(theories));
}

WeightAssignment u_construction(const std::vector<Theory>& theories, const Rational& seed,
                                const EntailmentMatrix& entails) {
  if (entails.size() != theories.size()) throw DomainError("entailment table does not match the theory list");
  WeightAssignment out;
  std::set<Rational> used;  // weights of the inequivalent classes so far
  for (std::size_t i = 0; i < theories.size(); ++i) {
    std::optional<Rational> weight;
    std::optional<Rational> lo;  // II
    std::optional<Rational> hi;  // JJ
    for (std::size_t j = 0; j < i && !weight; ++j) {
      const Rational& w = out.entries[j].weight;
      if (entails.equivalent(i, j)) {
        weight = w;
      } else if (entails(i, j)) {
        if (!lo || *lo < w) lo = w;
      } else if (entails(j, i)) {
        if (!hi || w < *hi) hi = w;
      }
    }
    if (!weight) {
      Rational c;
      if (lo && hi) {
        if (!(*lo < *hi)) throw DomainError("internal: empty weight interval at theory " + std::to_string(i));
        c = exact::midpoint(*lo, *hi);
      } else if (lo) {
        c = *lo + 1;
      } else if (hi) {
        c = *hi - 1;
      } else {
        c = seed;
      }
      while (used.count(c) != 0) {
        const auto above = used.upper_bound(c);
        std::optional<Rational> ceiling = hi;
        if (above != used.end() && (!ceiling || *above < *ceiling)) ceiling = *above;
        c = ceiling ? exact::midpoint(c, *ceiling) : c + 1;
      }
      used.insert(c);
      weight = c;
    }
    out.entries.push_back({theories[i], *weight});
  }
  return out;
}

}  // namespace omega::weights
