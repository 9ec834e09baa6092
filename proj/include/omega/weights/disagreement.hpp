#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "omega/logic/enumeration.hpp"
#include "omega/logic/theory.hpp"
#include "omega/weights/sigma.hpp"

namespace omega::weights {

using logic::BigInt;
using logic::TokenString;

struct Disagreement {
  enum class Status { Equivalent, Found, Unresolved };

  Status status = Status::Unresolved;
  BigInt index = 0;        // least n with sigma_n(T) != sigma_n(U)
  TokenString witness;     // psi_index
  bool first_proves = false;  // T |= psi_index (otherwise U does)

  std::string status_name() const;
};

/// T |= f, where T is given by its models over `universe` (bit r of the mask
/// is the assignment with atom universe[i] = bit i of r). Atoms of f outside
/// the universe are unconstrained.
bool models_entail(std::uint64_t models, const std::vector<std::uint32_t>& universe, const logic::Formula& f);

/// Finds the first index where sigma(T) and sigma(U) differ without scanning
/// the enumeration.
///
/// A shortest separating sentence mentions only atoms of T and U: replacing
/// any other atom by a suitable constant keeps it separating and shortens it.
/// Since the order is by length first, psi_n is the lexicographically least
/// separating string of the least separating length. Both are found by
/// growing, length by length, the set of truth functions over the universe
/// that strings of that exact length denote, then reading off the least
/// string top-down. The index is the rank of that string.
class DisagreementFinder {
 public:
  static constexpr std::size_t kMaxUniverse = 6;

  /// Throws DomainError for more than kMaxUniverse atoms.
  explicit DisagreementFinder(std::vector<std::uint32_t> universe, std::size_t max_length = 40);
  ~DisagreementFinder();
  DisagreementFinder(const DisagreementFinder&) = delete;
  DisagreementFinder& operator=(const DisagreementFinder&) = delete;

  const std::vector<std::uint32_t>& universe() const noexcept { return universe_; }
  std::uint64_t models(const logic::Theory& t) const;

  /// Masks as produced by models(). Thread-safe; results are cached.
  Disagreement find(std::uint64_t models_t, std::uint64_t models_u);
  /// Atoms of T and U must lie in the universe.
  Disagreement find(const logic::Theory& t, const logic::Theory& u);

 private:
  struct Impl;
  std::vector<std::uint32_t> universe_;
  std::unique_ptr<Impl> impl_;
};

/// Standalone search over the atoms of T and U. With more than six atoms the
/// enumeration is scanned up to `scan_limit` and the result may be Unresolved.
Disagreement first_disagreement(const logic::Theory& t, const logic::Theory& u, std::uint64_t scan_limit = 200000);

/// Reference implementation: scans psi_1, psi_2, ... up to `limit`.
Disagreement first_disagreement_by_scan(const logic::Theory& t, const logic::Theory& u, std::uint64_t limit);

/// Evidence that two weights differ, read off just past the disagreement
/// index n. Values are relative to the scale of term n (2^-n for V,
/// alpha_n for V^<a,b>): the common prefix before n cancels exactly, so the
/// check does not need the first n bits.
struct SeparationCertificate {
  Disagreement disagreement;
  bool separated = false;
  std::size_t window = 0;      // sentences examined past n
  Rational heavier_lower;      // relative lower bound of the theory proving psi_n
  Rational lighter_upper;      // relative upper bound of the other theory
};

SeparationCertificate separate_v(DisagreementFinder& finder, std::uint64_t models_t, std::uint64_t models_u,
                                 std::size_t max_window = 64);
SeparationCertificate separate_vab(DisagreementFinder& finder, std::uint64_t models_t, std::uint64_t models_u,
                                   const AlphaSpec& spec, std::size_t max_window = 64);

}  // namespace omega::weights
