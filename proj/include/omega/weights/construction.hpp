#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omega/exact/rational.hpp"
#include "omega/logic/theory.hpp"
#include "omega/weights/corpus.hpp"

namespace omega::weights {

using exact::Rational;

struct WeightedTheory {
  Theory theory;
  Rational weight;
};

/// Weights for an ordered list of theories satisfying both principles
/// pairwise: entailment gives >=, equal weights only for equivalent theories.
struct WeightAssignment {
  std::vector<WeightedTheory> entries;

  /// Weight of the first entry equivalent to t, if any.
  std::optional<Rational> lookup(const Theory& t) const;
};

/// Inductive construction. Theory i copies the weight of an earlier
/// equivalent theory; otherwise it gets the midpoint of
///   II = max weight of earlier theories it strictly entails,
///   JJ = min weight of earlier theories strictly entailing it,
/// with II + 1 or JJ - 1 when one side is empty and `seed` when both are.
/// A candidate that equals the weight of an earlier, inequivalent theory
/// moves halfway towards the next weight above it (or up by 1), staying
/// below JJ, so inequivalent theories never share a weight.
WeightAssignment u_construction(const std::vector<Theory>& theories, const Rational& seed);
/// Same, reusing a precomputed entailment table for `theories`.
WeightAssignment u_construction(const std::vector<Theory>& theories, const Rational& seed,
                                const EntailmentMatrix& entails);

}  // namespace omega::weights
