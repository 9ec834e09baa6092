#include "omega/minilang/language.hpp"

#include "omega/error.hpp"

namespace omega::minilang {

namespace {

constexpr Op kBodyOrder[4] = {Op::Dec, Op::Inc, Op::Jnz, Op::Print};

std::optional<Op> op_from_char(char c) {
  switch (c) {
    case 'I':
      return Op::Inc;
    case 'D':
      return Op::Dec;
    case 'P':
      return Op::Print;
    case 'J':
      return Op::Jnz;
    default:
      return std::nullopt;
  }
}

}  // namespace

char op_char(Op op) {
  switch (op) {
    case Op::Inc:
      return 'I';
    case Op::Dec:
      return 'D';
    case Op::Print:
      return 'P';
    case Op::Jnz:
      return 'J';
  }
  return '?';
}

BitString ascii_code(char c) {
  const auto code = static_cast<unsigned char>(c);
  if (code > 127) throw DomainError("character code " + std::to_string(code) + " is not 7-bit ASCII");
  std::vector<bool> bits(8);
  for (int i = 0; i < 8; ++i) bits[i] = ((code >> (7 - i)) & 1U) != 0;
  return BitString(std::move(bits));
}

const std::map<char, BitString>& char_table() {
  static const std::map<char, BitString> table = [] {
    std::map<char, BitString> t;
    for (const char c : {'I', 'D', 'P', 'J', kEnd}) t.emplace(c, ascii_code(c));
    return t;
  }();
  return table;
}

std::string Program::str() const {
  std::string s;
  for (const Op op : body) s += op_char(op);
  return s + kEnd;
}

Program parse_program(std::string_view source) {
  while (!source.empty() && (source.back() == '\n' || source.back() == '\r' || source.back() == ' ')) {
    source.remove_suffix(1);
  }
  if (source.empty()) throw InputError("empty program; the shortest program is \"E\"");
  Program p;
  for (std::size_t i = 0; i < source.size(); ++i) {
    const char c = source[i];
    if (c == kEnd) {
      if (i + 1 != source.size()) throw InputError("END at position " + std::to_string(i + 1) + " is not last");
      return p;
    }
    const auto op = op_from_char(c);
    if (!op) throw InputError("unknown character '" + std::string(1, c) + "' at position " + std::to_string(i + 1));
    p.body.push_back(*op);
  }
  throw InputError("program does not end with E");
}

Decoded decode(const BitString& bits) {
  Decoded d;
  if (bits.size() % 8 != 0) {
    d.error = Decoded::Error::BadLength;
    d.reason = "length " + std::to_string(bits.size()) + " is not a multiple of 8";
    return d;
  }
  Program p;
  const std::size_t n = bits.size() / 8;
  for (std::size_t k = 0; k < n; ++k) {
    unsigned code = 0;
    for (std::size_t i = 0; i < 8; ++i) code = code * 2 + (bits[8 * k + i] ? 1U : 0U);
    const char c = static_cast<char>(code);
    if (code < 128 && c == kEnd) {
      if (k + 1 != n) {
        d.error = Decoded::Error::EndMisplaced;
        d.reason = "END at byte " + std::to_string(k + 1) + " of " + std::to_string(n);
        return d;
      }
      d.program = std::move(p);
      return d;
    }
    const auto op = code < 128 ? op_from_char(c) : std::nullopt;
    if (!op) {
      d.error = Decoded::Error::UnknownByte;
      d.reason = "byte " + std::to_string(k + 1) + " (" + std::to_string(code) + ") is not a language character";
      return d;
    }
    p.body.push_back(*op);
  }
  d.error = Decoded::Error::EndMissing;
  d.reason = "no END byte";
  return d;
}

BitString encode(const Program& p) {
  std::vector<bool> bits;
  bits.reserve(p.bit_length());
  for (const char c : p.str()) {
    const auto code = ascii_code(c);
    bits.insert(bits.end(), code.bits().begin(), code.bits().end());
  }
  return BitString(std::move(bits));
}

RunResult run(const Program& p, std::uint64_t fuel) {
  if (fuel == 0) throw DomainError("fuel must be at least 1");
  RunResult out;
  std::uint64_t r = 0;
  std::size_t pc = 0;
  while (out.steps < fuel) {
    ++out.steps;
    if (pc == p.body.size()) {
      out.status = RunResult::Status::Halted;
      return out;
    }
    switch (p.body[pc]) {
      case Op::Inc:
        ++r;
        break;
      case Op::Dec:
        if (r > 0) --r;
        break;
      case Op::Print:
        out.output.push_back(r);
        break;
      case Op::Jnz:
        if (r != 0) {
          pc = 0;
          continue;
        }
        break;
    }
    ++pc;
  }
  return out;
}

std::vector<Program> enumerate_programs(std::size_t max_chars) {
  if (max_chars == 0) throw DomainError("max_chars must be at least 1");
  if (max_chars > 12) throw DomainError("enumeration is limited to 12 characters");
  std::vector<Program> out;
  for (std::size_t len = 0; len < max_chars; ++len) {
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      Program p;
      for (const auto d : digits) p.body.push_back(kBodyOrder[d]);
      out.push_back(std::move(p));
      std::size_t i = len;
      while (i > 0 && digits[i - 1] == 3) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
  return out;
}

}  // namespace omega::minilang
