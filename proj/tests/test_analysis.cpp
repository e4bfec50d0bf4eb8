#include "doctest.h"

#include <random>

#include "eelwe/analysis.hpp"
#include "eelwe/data_io.hpp"

using namespace eelwe;
using namespace eelwe::analysis;

namespace {

const std::string data_dir = EELWE_TEST_DATA_DIR;

std::vector<RoundLadderVector>
reference_ladders()
{
  return io::load_ladders(data_dir + "/" + io::ladders_file);
}

MasterKey
random_key(std::mt19937_64& rng)
{
  std::bitset<key_bits> b;
  const std::uint64_t lo = rng(), hi = rng();
  for (unsigned i = 0; i < 64; ++i)
    b.set(i, (lo >> i) & 1u);
  for (unsigned i = 0; i < 16; ++i)
    b.set(64 + i, (hi >> i) & 1u);
  return MasterKey(b);
}

constexpr std::array<unsigned, 9> ladder_rounds{ 1, 2, 4, 8, 16, 32, 64, 128, 254 };

} // namespace

TEST_CASE("ladder parsing")
{
  const auto v = parse_ladder("e48, 5742414e3438, 1:5d0965 38d0e2; 2:742594e34389");
  CHECK(v.variant == VariantId::e48);
  CHECK(v.pt == 0x5742414E3438ULL);
  REQUIRE(v.entries.size() == 2);
  CHECK(v.entries[0] == LadderEntry{ 1, 0x5D096538D0E2ULL });
  CHECK(parse_ladder(format_ladder(v)) == v);

  CHECK_THROWS_AS(parse_ladder("e32, 5742414E"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ladder("e32, 5742414E, 2:AE8C829D;1:5D11053A"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ladder("e32, 5742414E, 1:AE8C829"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ladder("e32, 5742414E, x:AE8C829D"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ladder("e32, 5742414E, 300:AE8C829D"), std::invalid_argument);
}

TEST_CASE("reference ladders pass the shift-consistency check")
{
  const auto ladders = reference_ladders();
  REQUIRE(ladders.size() == 3);
  for (const auto& l : ladders) {
    const auto rep = shift_consistency_check(l);
    CHECK(rep.passed());
    CHECK(rep.checked_entries() >= 4);
  }

  const auto rep = shift_consistency_check(ladders[0]);
  // r = 1: fy = 1 entered P1, fx = 1 entered P2
  CHECK(rep.entries[0].p1_inserted == 1);
  CHECK(rep.entries[0].p2_inserted == 1);
  // r = 4: P1 keeps pt bits 8..0 on top, feedback nibble 1010 below
  CHECK(rep.entries[2].p1_checked);
  CHECK(rep.entries[2].p1_inserted == 0b1010);
  // r = 16 only fits the wider register
  CHECK_FALSE(rep.entries[4].p1_checked);
  CHECK(rep.entries[4].p2_checked);
  CHECK_FALSE(rep.entries[5].checked());
}

TEST_CASE("check windows scale with steps per round")
{
  const auto ladders = reference_ladders();
  const auto e48 = shift_consistency_check(ladders[1]);
  CHECK(e48.entries[3].p1_checked);      // 8 rounds = 16 shifts <= 18
  CHECK_FALSE(e48.entries[4].p1_checked); // 32 shifts
  const auto e64 = shift_consistency_check(ladders[2]);
  CHECK(e64.entries[3].p1_checked);      // 24 shifts <= 24
  CHECK(e64.entries[3].p2_checked);
  CHECK_FALSE(e64.entries[4].p2_checked); // 48 shifts > 38
}

TEST_CASE("corrupted ladder entries fail")
{
  auto l = reference_ladders()[0];
  l.entries[2].ct ^= 1ULL << 30; // top region of P1 at r = 4
  CHECK_FALSE(shift_consistency_check(l).passed());
  CHECK_THROWS_AS(extract_key_constraints(l), std::invalid_argument);

  auto m = reference_ladders()[2];
  m.entries[0].ct ^= 1ULL << 20; // P2 upper bits at r = 1
  CHECK_FALSE(shift_consistency_check(m).passed());
}

TEST_CASE("first reference entry pins k0 = 1 and k1 = 0")
{
  auto l = reference_ladders()[0];
  l.entries.resize(1);
  const auto rep = extract_key_constraints(l);
  REQUIRE(rep.constraints.size() == 2);
  CHECK(rep.constraints[0].indices == std::vector<unsigned>{ 0 });
  CHECK(rep.constraints[0].value);
  CHECK(rep.constraints[1].indices == std::vector<unsigned>{ 1 });
  CHECK_FALSE(rep.constraints[1].value);
  CHECK(rep.consistent);
  CHECK(rep.rank == 2);
  REQUIRE(rep.solution);
  CHECK(rep.solution->bit(0));
  CHECK_FALSE(rep.solution->bit(1));
}

TEST_CASE("zero-key ladder yields only zero constraints")
{
  const BlockCipher c(VariantId::e32, MasterKey{});
  const auto l = make_ladder(c, 0, ladder_rounds);
  const auto rep = extract_key_constraints(l);
  CHECK_FALSE(rep.constraints.empty());
  for (const auto& k : rep.constraints)
    CHECK_FALSE(k.value);
  CHECK(rep.consistent);
}

TEST_CASE("synthetic ladders produce no false constraints")
{
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto id = all_variants[i % 3];
    const auto key = random_key(rng);
    const BlockCipher c(id, key);
    const auto l = make_ladder(c, rng() & c.params().block_mask(), ladder_rounds);
    REQUIRE(shift_consistency_check(l).passed());
    const auto rep = extract_key_constraints(l);
    REQUIRE(rep.consistent);
    REQUIRE(rep.notes.empty());
    for (const auto& k : rep.constraints)
      REQUIRE(k.satisfied_by(c.expanded_key()));
    // the particular solution satisfies the same system
    const auto sol = expand_key(*rep.solution);
    for (const auto& k : rep.constraints)
      REQUIRE(k.satisfied_by(sol));
  }
}

TEST_CASE("a wrong IR hypothesis can surface as inconsistency")
{
  // with every step of a round sharing one key bit, e48/e64 segments give
  // redundant equations; flipping the IR profile must break at least one
  std::mt19937_64 rng(5);
  unsigned inconsistent = 0;
  IRSequence::bits_type flipped = ir_sequence().bits();
  flipped.flip();
  for (int i = 0; i < 20; ++i) {
    const BlockCipher c(VariantId::e64, random_key(rng));
    const auto l = make_ladder(c, rng(), ladder_rounds);
    if (!extract_key_constraints(l, IRSequence(flipped)).consistent) ++inconsistent;
  }
  CHECK(inconsistent > 0);
}

TEST_CASE("master_key_form follows the recurrence")
{
  CHECK(master_key_form(0).count() == 1);
  const auto f80 = master_key_form(80);
  CHECK(f80.count() == 4);
  CHECK(f80.test(0));
  CHECK(f80.test(19));
  CHECK(f80.test(30));
  CHECK(f80.test(67));
  CHECK_THROWS_AS(master_key_form(508), std::out_of_range);
}

TEST_CASE("avalanche statistics")
{
  for (auto id : all_variants) {
    const auto zero = avalanche_test(id, 1000, 0, 1);
    CHECK(zero.mean() == 1.0);
    CHECK(zero.min_flips == 1);
    CHECK(zero.max_flips == 1);
  }
  const auto s32 = avalanche_test(VariantId::e32, 10000, 254, 42);
  CHECK(s32.mean() >= 14.4);
  CHECK(s32.mean() <= 17.6);
  const auto s64 = avalanche_test(VariantId::e64, 10000, 254, 42);
  CHECK(s64.mean() >= 28.8);
  CHECK(s64.mean() <= 35.2);
  CHECK(s64.stddev() > 0);

  const auto again = avalanche_test(VariantId::e32, 10000, 254, 42);
  CHECK(again.total_flips == s32.total_flips);

  CHECK_THROWS_AS(avalanche_test(VariantId::e32, 999, 254, 1), std::invalid_argument);
}

TEST_CASE("comparison report")
{
  const auto data = io::load_comparison(data_dir + "/" + io::comparison_file);
  const auto rows = comparison_report(data, 5072.687, 64);
  REQUIRE(rows.size() == data.size() + 1);
  CHECK(rows[0].entry.name == "EELWE");
  CHECK(rows[0].computed);
  CHECK(rows[0].minimum);
  CHECK(rows[0].entry.uj_per_byte == doctest::Approx(0.0406).epsilon(0.01));
  CHECK(rows[1].entry.name == "LBLOCK");
  CHECK(rows[1].entry.uj_per_byte == 0.125);
  CHECK_FALSE(rows[1].minimum);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].entry.uj_per_byte > rows[0].entry.uj_per_byte);

  // ordering of the software-class rows without the computed entry
  std::size_t tea = 0, xtea = 0, present = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].entry.name == "TEA") tea = i;
    if (rows[i].entry.name == "XTEA") xtea = i;
    if (rows[i].entry.name == "PRESENT") present = i;
  }
  CHECK(tea < xtea);
  CHECK(xtea < present);

  // a dataset row named EELWE is superseded by the computed one
  std::vector<ComparisonEntry> with_row = data;
  with_row.push_back({ "EELWE", 64, 99.0 });
  const auto replaced = comparison_report(with_row, 5072.687, 64);
  CHECK(replaced.size() == data.size() + 1);
  CHECK(replaced[0].computed);

  CHECK_THROWS_AS(comparison_report(std::vector<ComparisonEntry>{}, 1.0), std::invalid_argument);
}

TEST_CASE("figure data rows")
{
  const std::string e32 = figure_data_csv(VariantId::e32);
  CHECK(e32 == "r,1,2,4,8,16,32,64,128,254\n"
               "e_bit_pj_per_bit,1591.97,952.72,647.38,518.11,515.33,651.91,1046.03,2090.13,4979.92\n");
  for (auto id : all_variants) {
    const auto csv = figure_data_csv(id);
    CHECK(csv.substr(0, csv.find('\n')) == "r,1,2,4,8,16,32,64,128,254");
  }
}
