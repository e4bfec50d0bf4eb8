#include "doctest.h"

#include "eelwe/variant.hpp"

using namespace eelwe;

TEST_CASE("variant constants")
{
  const auto& p32 = build_variant_params(VariantId::e32);
  CHECK(p32.n == 32);
  CHECK(p32.len_p1 == 13);
  CHECK(p32.len_p2 == 19);
  CHECK(p32.len_pa == 6);
  CHECK(p32.len_pb == 7);
  CHECK(p32.len_pc == 8);
  CHECK(p32.len_pd == 11);
  CHECK(p32.a == std::array<unsigned, 2>{ 5, 2 });
  CHECK(p32.b == std::array<unsigned, 3>{ 6, 3, 1 });
  CHECK(p32.c == std::array<unsigned, 2>{ 7, 3 });
  CHECK(p32.d == std::array<unsigned, 4>{ 10, 7, 5, 1 });
  CHECK(p32.steps_per_round == 1);

  const auto& p48 = build_variant_params(VariantId::e48);
  CHECK(p48.n == 48);
  CHECK(p48.len_p1 == 19);
  CHECK(p48.len_p2 == 29);
  CHECK(p48.a == std::array<unsigned, 2>{ 7, 3 });
  CHECK(p48.b == std::array<unsigned, 3>{ 10, 6, 4 });
  CHECK(p48.c == std::array<unsigned, 2>{ 11, 5 });
  CHECK(p48.d == std::array<unsigned, 4>{ 16, 12, 8, 3 });
  CHECK(p48.steps_per_round == 2);

  const auto& p64 = build_variant_params(VariantId::e64);
  CHECK(p64.n == 64);
  CHECK(p64.len_p1 == 25);
  CHECK(p64.len_p2 == 39);
  CHECK(p64.len_pa == 10);
  CHECK(p64.len_pb == 17);
  CHECK(p64.len_pc == 14);
  CHECK(p64.len_pd == 23);
  CHECK(p64.a == std::array<unsigned, 2>{ 9, 5 });
  CHECK(p64.b == std::array<unsigned, 3>{ 16, 11, 7 });
  CHECK(p64.c == std::array<unsigned, 2>{ 13, 7 });
  CHECK(p64.d == std::array<unsigned, 4>{ 22, 17, 11, 5 });
  CHECK(p64.steps_per_round == 3);
}

TEST_CASE("register widths sum to the block size")
{
  for (auto id : all_variants) {
    const auto& p = build_variant_params(id);
    CHECK(p.len_p1 + p.len_p2 == p.n);
    for (unsigned i : p.a)
      CHECK(i < p.len_pa);
    for (unsigned i : p.b)
      CHECK(i < p.len_pb);
    for (unsigned i : p.c)
      CHECK(i < p.len_pc);
    for (unsigned i : p.d)
      CHECK(i < p.len_pd);
  }
}

TEST_CASE("absolute tap positions, e32")
{
  const auto t = build_variant_params(VariantId::e32).taps();
  CHECK(t.p1_xor == std::array<unsigned, 2>{ 12, 9 });
  CHECK(t.p1_and == std::array<unsigned, 2>{ 6, 3 });
  CHECK(t.p1_ir == 1);
  CHECK(t.p2_xor == std::array<unsigned, 2>{ 18, 14 });
  CHECK(t.p2_and[0] == std::array<unsigned, 2>{ 10, 7 });
  CHECK(t.p2_and[1] == std::array<unsigned, 2>{ 5, 1 });
}

TEST_CASE("e64 sub-blocks overlap in P1 and leave a gap in P2")
{
  const auto& p = build_variant_params(VariantId::e64);
  CHECK(p.len_pa + p.len_pb == 27); // two bits more than P1
  CHECK(p.len_pc + p.len_pd == 37); // two bits fewer than P2
  CHECK(p.pa_offset() == 15);       // Pa covers 24..15, Pb covers 16..0
  CHECK(p.pc_offset() == 25);       // Pc covers 38..25, Pd covers 22..0

  const auto t = p.taps();
  CHECK(t.p1_xor == std::array<unsigned, 2>{ 24, 20 });
  CHECK(t.p2_xor == std::array<unsigned, 2>{ 38, 32 });
  // P2 bits 23 and 24 feed no tap
  for (unsigned i : { t.p2_xor[0], t.p2_xor[1], t.p2_and[0][0], t.p2_and[0][1], t.p2_and[1][0], t.p2_and[1][1] }) {
    CHECK(i != 23);
    CHECK(i != 24);
  }
}

TEST_CASE("top register bits are the leading linear taps")
{
  for (auto id : all_variants) {
    const auto& p = build_variant_params(id);
    const auto t = p.taps();
    CHECK(t.p1_xor[0] == p.len_p1 - 1);
    CHECK(t.p2_xor[0] == p.len_p2 - 1);
  }
}

TEST_CASE("parse_variant")
{
  CHECK(parse_variant("e32") == VariantId::e32);
  CHECK(parse_variant("E48") == VariantId::e48);
  CHECK(parse_variant("EELWE64") == VariantId::e64);
  CHECK(parse_variant("64") == VariantId::e64);
  CHECK_THROWS_AS(parse_variant("e128"), std::invalid_argument);
  CHECK_THROWS_AS(parse_variant(""), std::invalid_argument);
  for (auto id : all_variants)
    CHECK(parse_variant(to_string(id)) == id);
}
