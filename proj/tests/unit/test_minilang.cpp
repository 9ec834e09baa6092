#include <map>
#include <set>

#include "doctest.h"
#include "omega/error.hpp"
#include "omega/minilang/census.hpp"
#include "omega/minilang/language.hpp"
#include "omega/prefixfree/string_set.hpp"
#include "support/minilang_oracle.hpp"

using namespace omega;
using namespace omega::minilang;
using omega::testing::decide;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

BitString code_of(const std::string& source) {
  std::vector<bool> bits;
  for (const char c : source) {
    for (int i = 7; i >= 0; --i) bits.push_back(((static_cast<unsigned>(c) >> i) & 1U) != 0);
  }
  return BitString(bits);
}

}  // namespace

TEST_CASE("character codes") {
  CHECK(ascii_code('E').str() == "01000101");
  CHECK(ascii_code('B').str() == "01000010");
  CHECK(ascii_code('P').str() == "01010000");
  CHECK(ascii_code('X').str() == "01011000");
  CHECK(char_table().size() == 5);
  for (const auto& [c, code] : char_table()) REQUIRE(code == code_of(std::string(1, c)));
  CHECK_THROWS_AS(ascii_code(static_cast<char>(200)), DomainError);
}

TEST_CASE("decoding the worked examples") {
  const auto e = decode(code_of("E"));
  REQUIRE(e.ok());
  CHECK(e.program->body.empty());
  const auto ij = decode(code_of("IJE"));
  REQUIRE(ij.ok());
  CHECK(ij.program->body == std::vector<Op>{Op::Inc, Op::Jnz});
  CHECK(decode(code_of("EI")).error == Decoded::Error::EndMisplaced);
  CHECK(decode(code_of("IJ")).error == Decoded::Error::EndMissing);
  CHECK(decode(code_of("IXE")).error == Decoded::Error::UnknownByte);
  CHECK(decode(BitString::parse("0100010")).error == Decoded::Error::BadLength);
  CHECK_FALSE(decode(code_of("EI")).reason.empty());
}

TEST_CASE("encoding") {
  CHECK(encode(Program{}) == code_of("E"));
  CHECK(encode(parse_program("IJE")) == code_of("IJE"));
  CHECK(encode(parse_program("IJE")).size() == 24);
  CHECK(parse_program("IDPJE").str() == "IDPJE");
  CHECK_THROWS_AS(parse_program("IJ"), InputError);
  CHECK_THROWS_AS(parse_program("IEJE"), InputError);
  CHECK_THROWS_AS(parse_program("IQE"), InputError);
}

TEST_CASE("decode and encode are inverse on every program up to three characters") {
  const auto programs = enumerate_programs(3);
  for (const auto& p : programs) {
    const auto d = decode(encode(p));
    REQUIRE(d.ok());
    REQUIRE(*d.program == p);
    REQUIRE(encode(p).size() == 8 * (p.body.size() + 1));
  }
  // Every 24-bit string over the five characters that decodes is enumerated.
  std::set<std::string> enumerated;
  for (const auto& p : programs) enumerated.insert(p.str());
  const std::string alphabet = "DEIJP";
  std::size_t valid = 0;
  for (const char a : alphabet) {
    for (const char b : alphabet) {
      for (const char c : alphabet) {
        const std::string s{a, b, c};
        const auto d = decode(code_of(s));
        if (!d.ok()) continue;
        ++valid;
        REQUIRE(enumerated.count(d.program->str()) == 1);
      }
    }
  }
  CHECK(valid == 16);
}

TEST_CASE("running the worked examples") {
  const auto e = run(parse_program("E"), 10);
  CHECK(e.halted());
  CHECK(e.steps == 1);
  CHECK(e.output.empty());
  for (const std::uint64_t fuel : {1, 2, 10, 1000, 100000}) {
    REQUIRE_FALSE(run(parse_program("IJE"), fuel).halted());
  }
  const auto idj = run(parse_program("IDJE"), 100);
  CHECK(idj.halted());
  CHECK(idj.output.empty());
  CHECK(idj.steps == 4);
  const auto loop = run(parse_program("IPIDJE"), 3);
  CHECK_FALSE(loop.halted());
  CHECK(loop.steps == 3);
  CHECK(run(parse_program("IIPDPDPJE"), 100).output == std::vector<std::uint64_t>{2, 1, 0});
  CHECK(run(parse_program("DPE"), 100).output == std::vector<std::uint64_t>{0});
  CHECK_THROWS_AS(run(parse_program("E"), 0), DomainError);
}

TEST_CASE("enumeration sizes and order") {
  CHECK(enumerate_programs(1).size() == 1);
  CHECK(enumerate_programs(2).size() == 5);
  CHECK(enumerate_programs(3).size() == 21);
  CHECK(enumerate_programs(5).size() == 341);
  const auto programs = enumerate_programs(4);
  for (std::size_t i = 1; i < programs.size(); ++i) {
    const auto a = encode(programs[i - 1]);
    const auto b = encode(programs[i]);
    REQUIRE(exact::shortlex_less(a, b));
  }
  CHECK_THROWS_AS(enumerate_programs(0), DomainError);
}

TEST_CASE("program codes are prefix-free up to four characters") {
  std::vector<BitString> codes;
  for (const auto& p : enumerate_programs(4)) codes.push_back(encode(p));
  CHECK_FALSE(prefixfree::check_prefix_free(prefixfree::StringSet(codes)).has_value());
}

TEST_CASE("the exact decider agrees with long runs") {
  for (const auto& p : enumerate_programs(7)) {
    const auto d = decide(p);
    const auto r = run(p, 5000);
    REQUIRE(r.halted() == d.halts);
    if (d.halts) {
      REQUIRE(r.steps == d.steps);
      REQUIRE(r.output == d.output);
    }
  }
}

TEST_CASE("census examples") {
  const auto one = halting_census(1, 1);
  REQUIRE(one.rows.size() == 1);
  CHECK(one.rows[0].halted == 1);
  CHECK(one.omega_h_partial == exact::pow2(-8));
  const auto two = halting_census(2, 100);
  CHECK(two.row(16)->total == 4);
  CHECK(two.row(16)->halted == 4);
  const auto three = halting_census(3, 100);
  CHECK(three.row(24)->total == 16);
  CHECK(three.row(24)->halted == 15);
  CHECK(three.omega_p_partial == q("4161/1048576"));
  CHECK(three.omega_h_partial == q("66575/16777216"));
  CHECK(three.row(32) == nullptr);
  CHECK_THROWS_AS(halting_census(0, 10), DomainError);
  CHECK_THROWS_AS(halting_census(3, 0), DomainError);
}

TEST_CASE("census counts match the exact decider") {
  for (std::size_t max_chars = 1; max_chars <= 7; ++max_chars) {
    std::map<std::size_t, std::uint64_t> halting;
    std::uint64_t longest = 1;
    Rational omega_h = 0;
    for (const auto& p : enumerate_programs(max_chars)) {
      const auto d = decide(p);
      if (!d.halts) continue;
      ++halting[p.bit_length()];
      longest = std::max(longest, d.steps);
      omega_h += exact::pow2(-static_cast<std::int64_t>(p.bit_length()));
    }
    const auto census = halting_census(max_chars, longest);
    for (const auto& row : census.rows) REQUIRE(row.halted == halting[row.bit_length]);
    REQUIRE(census.omega_h_partial == omega_h);
    // One unit less of fuel loses at least the slowest halting program.
    if (longest > 1) REQUIRE(halting_census(max_chars, longest - 1).omega_h_partial < omega_h);
  }
}

TEST_CASE("census partial sums are monotone and bounded") {
  Rational last_p = 0;
  for (std::size_t max_chars = 1; max_chars <= 6; ++max_chars) {
    Rational last_h = 0;
    for (const std::uint64_t fuel : {1, 2, 5, 10, 50, 200}) {
      const auto c = halting_census(max_chars, fuel);
      REQUIRE(c.omega_h_partial >= last_h);
      REQUIRE(c.omega_h_partial <= c.omega_p_partial);
      REQUIRE(c.omega_p_partial + exact::pow2(-8) <= 1);
      last_h = c.omega_h_partial;
      if (max_chars > 1) {
        REQUIRE(c.omega_h_partial >= halting_census(max_chars - 1, fuel).omega_h_partial);
      }
    }
    const auto c = halting_census(max_chars, 10);
    REQUIRE(c.omega_p_partial > last_p);
    last_p = c.omega_p_partial;
  }
}

TEST_CASE("halting within some fuel persists with the same output") {
  for (const auto& p : enumerate_programs(6)) {
    const auto small = run(p, 30);
    if (!small.halted()) continue;
    for (const std::uint64_t more : {31, 64, 1000}) {
      const auto big = run(p, more);
      REQUIRE(big.halted());
      REQUIRE(big.output == small.output);
      REQUIRE(big.steps == small.steps);
    }
  }
}

TEST_CASE("parallel census matches the serial reference") {
  for (std::size_t max_chars = 1; max_chars <= 7; ++max_chars) {
    const auto a = halting_census(max_chars, 60);
    const auto b = halting_census_serial(max_chars, 60);
    REQUIRE(a.omega_h_partial == b.omega_h_partial);
    REQUIRE(a.omega_p_partial == b.omega_p_partial);
    REQUIRE(a.halting == b.halting);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) REQUIRE(a.rows[i].halted == b.rows[i].halted);
  }
}

TEST_CASE("mho") {
  const auto census = halting_census(3, 100);
  const auto all = enumerate_programs(3);
  CHECK(mho(all, census) == 1);
  CHECK(mho({}, census) == 0);
  CHECK(mho({parse_program("E"), parse_program("E")}, census) == mho({parse_program("E")}, census));
  CHECK_THROWS_AS(mho({parse_program("IIIE")}, census), DomainError);
  std::vector<Program> a;
  std::vector<Program> b;
  for (std::size_t i = 0; i < all.size(); ++i) (i % 3 == 0 ? a : b).push_back(all[i]);
  CHECK(mho(a, census) + mho(b, census) == 1);
  std::vector<Program> c(b.begin(), b.begin() + 5);
  std::vector<Program> ac = a;
  ac.insert(ac.end(), c.begin(), c.end());
  CHECK(mho(ac, census) == mho(a, census) + mho(c, census));
}

TEST_CASE("the gap below one") {
  const auto three = lemma_pi_gap(3);
  CHECK(three.witness == 'X');
  CHECK(three.witness_code.str() == "01011000");
  CHECK(three.omega_p_partial == exact::pow2(-8) + 4 * exact::pow2(-16) + 16 * exact::pow2(-24));
  CHECK(three.gap_holds);
  CHECK(three.prefix_free);
  const auto one = lemma_pi_gap(1);
  CHECK(one.omega_p_partial + exact::pow2(-8) <= 1);
  CHECK(one.gap_holds);
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto r = lemma_pi_gap(m);
    REQUIRE(r.gap_holds);
    REQUIRE(r.prefix_free);
  }
}

TEST_CASE("bounded complexity") {
  const auto empty = bounded_k({}, 3, 100);
  CHECK(empty.bits == 8);
  CHECK(empty.program->str() == "E");
  const auto zero = bounded_k({0}, 3, 100);
  CHECK(zero.bits == 16);
  CHECK(zero.program->str() == "PE");
  const auto far = bounded_k({7, 7, 7}, 3, 100);
  CHECK_FALSE(far.bits.has_value());
  CHECK_FALSE(far.program.has_value());
  // Oracle: exhaustive search through the decider.
  const std::vector<std::uint64_t> target = {1, 0};
  std::optional<std::size_t> best;
  for (const auto& p : enumerate_programs(6)) {
    const auto d = decide(p);
    if (d.halts && d.output == target && (!best || p.bit_length() < *best)) best = p.bit_length();
  }
  CHECK(bounded_k(target, 6, 1000).bits == best);
}
