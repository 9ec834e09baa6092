#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omega/logic/formula.hpp"
#include "omega/logic/theory.hpp"

namespace omega::logic {

/// Truth table of a formula over an ordered atom list, one bit per row.
/// Row r assigns atoms[i] the value of bit i of r.
class TruthTable {
 public:
  static constexpr std::size_t kMaxAtoms = 22;

  /// Throws DomainError when atoms exceed kMaxAtoms or miss an atom of f.
  TruthTable(const Formula& f, const std::vector<std::uint32_t>& atoms);
  TruthTable(const Theory& t, const std::vector<std::uint32_t>& atoms);

  std::size_t rows() const noexcept { return rows_; }
  bool operator[](std::uint64_t row) const { return ((words_[row / 64] >> (row % 64)) & 1U) != 0; }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  /// Every true row of *this is true in other.
  bool subset_of(const TruthTable& other) const;
  bool all() const;
  bool none() const;

 private:
  TruthTable(std::size_t atom_count, bool value);
  static TruthTable build(const Formula& f, const std::vector<std::uint32_t>& atoms);

  std::size_t rows_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Truth table packed in one word; requires at most 6 atoms.
std::uint64_t table_mask(const Formula& f, const std::vector<std::uint32_t>& atoms);
std::uint64_t table_mask(const Theory& t, const std::vector<std::uint32_t>& atoms);

/// CNF clause: literals are +/-(variable index + 1).
using Clause = std::vector<std::int32_t>;

/// DPLL with unit propagation; returns a model (indexed by variable) or nullopt.
std::optional<std::vector<bool>> dpll(const std::vector<Clause>& clauses, std::size_t variables);

enum class EntailMethod { Auto, TruthTable, Dpll };

/// T |= U: every valuation satisfying T satisfies every axiom of U.
/// Auto uses truth tables up to 16 atoms and DPLL beyond.
bool entails(const Theory& t, const Theory& u, EntailMethod method = EntailMethod::Auto);
bool entails(const Theory& t, const Formula& f, EntailMethod method = EntailMethod::Auto);
bool equivalent(const Theory& t, const Theory& u, EntailMethod method = EntailMethod::Auto);
bool consistent(const Theory& t, EntailMethod method = EntailMethod::Auto);

enum class Classification { Tautological, ConsistentNontautological, Inconsistent };

/// Tautological iff {} |= T; inconsistent iff T |= F.
Classification classify(const Theory& t, EntailMethod method = EntailMethod::Auto);
const char* to_string(Classification c);

}  // namespace omega::logic
