#include "omega/minilang/census.hpp"

#include <algorithm>
#include <set>

#include "omega/error.hpp"
#include "omega/prefixfree/string_set.hpp"

namespace omega::minilang {

const CensusRow* EnumerationReport::row(std::size_t bit_length) const {
  for (const auto& r : rows) {
    if (r.bit_length == bit_length) return &r;
  }
  return nullptr;
}

namespace {

EnumerationReport census(std::size_t max_chars, std::uint64_t fuel, bool parallel) {
  if (fuel == 0) throw DomainError("fuel must be at least 1");
  const auto programs = enumerate_programs(max_chars);
  std::vector<std::uint8_t> halts(programs.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(programs.size());
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) halts[i] = run(programs[i], fuel).halted() ? 1 : 0;

  EnumerationReport r;
  r.max_chars = max_chars;
  r.fuel = fuel;
  for (std::size_t c = 1; c <= max_chars; ++c) r.rows.push_back({8 * c, 0, 0});
  for (std::size_t i = 0; i < programs.size(); ++i) {
    auto& row = r.rows[programs[i].chars() - 1];
    ++row.total;
    if (halts[i] != 0) {
      ++row.halted;
      r.halting.push_back(programs[i]);
    }
  }
  r.omega_p_partial = 0;
  r.omega_h_partial = 0;
  for (const auto& row : r.rows) {
    const Rational scale = exact::pow2(-static_cast<std::int64_t>(row.bit_length));
    r.omega_p_partial += Rational(row.total) * scale;
    r.omega_h_partial += Rational(row.halted) * scale;
  }
  return r;
}

}  // namespace

EnumerationReport halting_census(std::size_t max_chars, std::uint64_t fuel) { return census(max_chars, fuel, true); }

EnumerationReport halting_census_serial(std::size_t max_chars, std::uint64_t fuel) {
  return census(max_chars, fuel, false);
}

Rational mho(const std::vector<Program>& subset, const EnumerationReport& census) {
  if (census.omega_p_partial.is_zero()) throw DomainError("census is empty");
  std::set<std::string> seen;
  Rational sum = 0;
  for (const auto& p : subset) {
    if (p.chars() > census.max_chars) {
      throw DomainError("program " + p.str() + " lies outside the census (max_chars " +
                        std::to_string(census.max_chars) + ")");
    }
    if (seen.insert(p.str()).second) sum += exact::pow2(-static_cast<std::int64_t>(p.bit_length()));
  }
  return sum / census.omega_p_partial;
}

PiGapReport lemma_pi_gap(std::size_t max_chars) {
  PiGapReport r;
  const auto programs = enumerate_programs(max_chars);
  r.omega_p_partial = 0;
  std::vector<BitString> codes;
  codes.reserve(programs.size() + 1);
  for (const auto& p : programs) {
    r.omega_p_partial += exact::pow2(-static_cast<std::int64_t>(p.bit_length()));
    codes.push_back(encode(p));
  }
  codes.push_back(r.witness_code);
  r.gap_holds = r.omega_p_partial + exact::pow2(-8) <= 1;
  r.prefix_free = !prefixfree::check_prefix_free(prefixfree::StringSet(std::move(codes))).has_value();
  return r;
}

BoundedK bounded_k(const std::vector<std::uint64_t>& target, std::size_t max_chars, std::uint64_t fuel) {
  BoundedK k;
  // Enumeration is shortest first, so the first match is minimal.
  for (const auto& p : enumerate_programs(max_chars)) {
    const auto result = run(p, fuel);
    if (result.halted() && result.output == target) {
      k.bits = p.bit_length();
      k.program = p;
      return k;
    }
  }
  return k;
}

}  // namespace omega::minilang
