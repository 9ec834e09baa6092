#pragma once

#include <vector>

#include "omega/logic/decide.hpp"
#include "omega/logic/first_order.hpp"
#include "omega/logic/theory.hpp"

namespace omega::weights {

using logic::FiniteStructure;
using logic::FoTheory;
using logic::Theory;
using logic::Valuation;

/// 0 iff V satisfies every axiom of T.
int w_valuation(const Valuation& v, const Theory& t);
/// 0 iff M |= T.
int w_structure(const FiniteStructure& m, const FoTheory& t);
/// 0 iff T is tautological.
int w_taut(const Theory& t);
/// 1 iff T is inconsistent.
int w_incons(const Theory& t);
/// 0 iff V |= T.
int w_lower(const Theory& vv, const Theory& t);
/// 1 iff T |= V.
int w_upper(const Theory& vv, const Theory& t);

/// 0 tautological, 1 consistent and not tautological, 2 inconsistent.
int w_three(const Theory& t);
/// Four-valued refinement around a fixed V with T-free V non-tautological
/// and consistent; throws PreconditionError otherwise.
///   0  T does not prove V and V proves T
///   1  T and V prove each other, or neither proves the other
///   2  T proves V, V does not prove T, T consistent
///   3  T inconsistent
int w_four(const Theory& vv, const Theory& t);
/// Five-valued version:
///   0  T tautological
///   1  T not tautological, T does not prove V, V proves T
///   2  T and V prove each other, or neither proves the other
///   3  T proves V, V does not prove T, T consistent
///   4  T inconsistent
int w_five(const Theory& vv, const Theory& t);

/// Number of structures in `family` that fail T. Throws PreconditionError
/// when two structures have universes of the same size.
int counting_weight(const std::vector<FiniteStructure>& family, const FoTheory& t);

/// Number of axioms. Deliberately violates the heuristic principle; used
/// only to show the audits catch a broken weight.
int axiom_count(const Theory& t);

}  // namespace omega::weights
