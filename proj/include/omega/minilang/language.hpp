#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omega/exact/bitstring.hpp"
#include "omega/exact/rational.hpp"

// A prefix-free, input-free toy language.
//
// Source is a line over {I, D, P, J, E}; every program ends with E and E
// appears nowhere else. One register r starts at 0.
//   I  r := r + 1
//   D  r := max(r - 1, 0)
//   P  append r to the output
//   J  if r != 0, continue from the first instruction
//   E  halt
// Each executed instruction, E included, costs one unit of fuel. The binary
// code of a program is the concatenation of the 8-bit ASCII codes of its
// characters, so codes have lengths 8, 16, 24, ...
namespace omega::minilang {

using exact::BitString;
using exact::Rational;

/// Identifies the language above; embedded in every report that depends on it.
inline constexpr const char* kLanguageVersion = "minilang-v1";

inline constexpr char kEnd = 'E';
/// An ASCII character outside the language: its code is not a prefix of any
/// program code and no program code is a prefix of it.
inline constexpr char kWitness = 'X';

enum class Op : std::uint8_t { Inc, Dec, Print, Jnz };

char op_char(Op op);

/// 8-bit code of a 7-bit ASCII character. Throws DomainError otherwise.
BitString ascii_code(char c);
/// The five language characters with their codes.
const std::map<char, BitString>& char_table();

struct Program {
  std::vector<Op> body;

  std::size_t chars() const { return body.size() + 1; }
  std::size_t bit_length() const { return 8 * chars(); }
  /// Source form, e.g. "IJE".
  std::string str() const;

  friend bool operator==(const Program&, const Program&) = default;
};

/// Parses source text. Throws InputError naming the offending position.
Program parse_program(std::string_view source);

struct Decoded {
  enum class Error { None, BadLength, UnknownByte, EndMisplaced, EndMissing };

  std::optional<Program> program;
  Error error = Error::None;
  std::string reason;

  bool ok() const { return program.has_value(); }
};

Decoded decode(const BitString& bits);
BitString encode(const Program& p);

struct RunResult {
  enum class Status { Halted, FuelExhausted };

  Status status = Status::FuelExhausted;
  std::uint64_t steps = 0;
  std::vector<std::uint64_t> output;

  bool halted() const { return status == Status::Halted; }
};

/// Throws DomainError for fuel 0.
RunResult run(const Program& p, std::uint64_t fuel);

/// Every program with at most max_chars characters, shortest first and in
/// code order within a length (body characters D < I < J < P by ASCII).
std::vector<Program> enumerate_programs(std::size_t max_chars);

}  // namespace omega::minilang
