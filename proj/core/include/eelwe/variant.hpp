#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eelwe {

inline constexpr unsigned total_rounds = 254;

enum class VariantId : std::uint8_t { e32, e48, e64 };

inline constexpr std::array<VariantId, 3> all_variants{ VariantId::e32,
                                                        VariantId::e48,
                                                        VariantId::e64 };

// Tap positions measured from bit 0 of the whole P1/P2 register, after
// placing Pa (Pc) in the top bits and Pb (Pd) in the bottom bits.
struct AbsoluteTaps
{
  std::array<unsigned, 2> p1_xor;                 // Pa[a1], Pa[a2]
  std::array<unsigned, 2> p1_and;                 // Pb[b1] & Pb[b2]
  unsigned p1_ir;                                 // Pb[b3] & IR[i]
  std::array<unsigned, 2> p2_xor;                 // Pc[c1], Pc[c2]
  std::array<std::array<unsigned, 2>, 2> p2_and;  // Pd[d1]&Pd[d2], Pd[d3]&Pd[d4]
};

struct VariantParams
{
  VariantId id;
  unsigned n;
  unsigned len_p1, len_p2;
  unsigned len_pa, len_pb, len_pc, len_pd;
  std::array<unsigned, 2> a;
  std::array<unsigned, 3> b;
  std::array<unsigned, 2> c;
  std::array<unsigned, 4> d;
  unsigned steps_per_round;

  constexpr unsigned pa_offset() const { return len_p1 - len_pa; }
  constexpr unsigned pc_offset() const { return len_p2 - len_pc; }

  constexpr std::uint64_t p1_mask() const { return (std::uint64_t{ 1 } << len_p1) - 1; }
  constexpr std::uint64_t p2_mask() const { return (std::uint64_t{ 1 } << len_p2) - 1; }

  constexpr std::uint64_t block_mask() const
  {
    return n == 64 ? ~std::uint64_t{ 0 } : (std::uint64_t{ 1 } << n) - 1;
  }

  constexpr AbsoluteTaps taps() const
  {
    return AbsoluteTaps{
      { a[0] + pa_offset(), a[1] + pa_offset() },
      { b[0], b[1] },
      b[2],
      { c[0] + pc_offset(), c[1] + pc_offset() },
      { { { d[0], d[1] }, { d[2], d[3] } } },
    };
  }
};

namespace detail {

inline constexpr std::array<VariantParams, 3> variant_table{ {
  { VariantId::e32, 32, 13, 19, 6, 7, 8, 11, { 5, 2 }, { 6, 3, 1 }, { 7, 3 }, { 10, 7, 5, 1 }, 1 },
  { VariantId::e48, 48, 19, 29, 8, 11, 12, 17, { 7, 3 }, { 10, 6, 4 }, { 11, 5 }, { 16, 12, 8, 3 }, 2 },
  { VariantId::e64, 64, 25, 39, 10, 17, 14, 23, { 9, 5 }, { 16, 11, 7 }, { 13, 7 }, { 22, 17, 11, 5 }, 3 },
} };

// The inverse round needs the top bit of each register to be a linear tap
// that no other term of the same feedback function reads.
constexpr bool
invertible_layout(const VariantParams& p)
{
  const auto t = p.taps();
  const unsigned top1 = p.len_p1 - 1;
  const unsigned top2 = p.len_p2 - 1;
  if (p.len_p1 + p.len_p2 != p.n) return false;
  if (t.p1_xor[0] != top1 || t.p2_xor[0] != top2) return false;
  for (unsigned i : { t.p1_xor[1], t.p1_and[0], t.p1_and[1], t.p1_ir })
    if (i >= top1) return false;
  for (unsigned i : { t.p2_xor[1], t.p2_and[0][0], t.p2_and[0][1], t.p2_and[1][0], t.p2_and[1][1] })
    if (i >= top2) return false;
  for (unsigned i : p.a)
    if (i >= p.len_pa) return false;
  for (unsigned i : p.b)
    if (i >= p.len_pb) return false;
  for (unsigned i : p.c)
    if (i >= p.len_pc) return false;
  for (unsigned i : p.d)
    if (i >= p.len_pd) return false;
  return true;
}

static_assert(invertible_layout(variant_table[0]));
static_assert(invertible_layout(variant_table[1]));
static_assert(invertible_layout(variant_table[2]));

} // namespace detail

constexpr const VariantParams&
build_variant_params(VariantId id)
{
  return detail::variant_table[static_cast<std::size_t>(id)];
}

// Accepts "e32"/"E32"/"eelwe32"/"32" and the 48/64 equivalents.
VariantId
parse_variant(std::string_view text);

std::string
to_string(VariantId id);

} // namespace eelwe
