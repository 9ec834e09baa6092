#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omega/minilang/language.hpp"

namespace omega::minilang {

struct CensusRow {
  std::size_t bit_length = 0;
  std::uint64_t total = 0;
  std::uint64_t halted = 0;  // halting within the fuel: a lower bound
};

struct EnumerationReport {
  std::size_t max_chars = 0;
  std::uint64_t fuel = 0;
  std::vector<CensusRow> rows;       // bit lengths 8, 16, ..., 8 max_chars
  Rational omega_p_partial;          // sum over all programs of 2^-|code|
  Rational omega_h_partial;          // same over programs halting within the fuel
  std::vector<Program> halting;      // in enumeration order

  /// Row for a bit length, or nullptr.
  const CensusRow* row(std::size_t bit_length) const;
};

/// Runs every enumerated program, in parallel over programs. Throws
/// DomainError for max_chars or fuel 0, or max_chars above 12.
EnumerationReport halting_census(std::size_t max_chars, std::uint64_t fuel);
EnumerationReport halting_census_serial(std::size_t max_chars, std::uint64_t fuel);

/// Omega_S / Omega_P at the census truncation. S is a set: repeats count
/// once. Throws DomainError for programs the census did not enumerate.
Rational mho(const std::vector<Program>& subset, const EnumerationReport& census);

struct PiGapReport {
  char witness = kWitness;
  BitString witness_code = ascii_code(kWitness);
  Rational omega_p_partial;
  bool gap_holds = false;     // omega_p_partial + 2^-8 <= 1
  bool prefix_free = false;   // program codes together with the witness code
};

PiGapReport lemma_pi_gap(std::size_t max_chars);

struct BoundedK {
  std::optional<std::size_t> bits;  // nullopt: no program found within the bounds
  std::optional<Program> program;
};

/// Shortest code among enumerated programs that halt within the fuel with
/// exactly `target` as output. An upper bound on the true complexity.
BoundedK bounded_k(const std::vector<std::uint64_t>& target, std::size_t max_chars, std::uint64_t fuel);

}  // namespace omega::minilang
