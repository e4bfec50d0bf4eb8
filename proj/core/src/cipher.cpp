#include "eelwe/cipher.hpp"

#include <string>

namespace eelwe {

namespace {

constexpr bool
bit(std::uint64_t w, unsigned i)
{
  return (w >> i) & 1u;
}

void
check_block(std::uint64_t block, const VariantParams& params)
{
  if ((block & ~params.block_mask()) != 0) {
    throw std::out_of_range("block does not fit in " + std::to_string(params.n) + " bits");
  }
}

void
check_rounds(unsigned rounds)
{
  if (rounds > total_rounds) {
    throw std::out_of_range("rounds must be in [0, 254], got " + std::to_string(rounds));
  }
}

// fx without the Pa[a1] term, i.e. every contribution from bits below the top
bool
p1_feedback_low(std::uint64_t p1, bool kx, bool ir, const AbsoluteTaps& t)
{
  return bit(p1, t.p1_xor[1]) ^ kx ^ (bit(p1, t.p1_and[0]) & bit(p1, t.p1_and[1])) ^ (bit(p1, t.p1_ir) & ir);
}

bool
p2_feedback_low(std::uint64_t p2, bool ky, const AbsoluteTaps& t)
{
  return bit(p2, t.p2_xor[1]) ^ ky ^ (bit(p2, t.p2_and[0][0]) & bit(p2, t.p2_and[0][1])) ^
         (bit(p2, t.p2_and[1][0]) & bit(p2, t.p2_and[1][1]));
}

} // namespace

CipherState
load_state(std::uint64_t block, const VariantParams& params)
{
  check_block(block, params);
  return CipherState{ block >> params.len_p2, block & params.p2_mask() };
}

std::uint64_t
unload_state(const CipherState& s, const VariantParams& params)
{
  return ((s.p1 & params.p1_mask()) << params.len_p2) | (s.p2 & params.p2_mask());
}

CipherState
round_step(const CipherState& s, bool kx, bool ky, bool ir, const VariantParams& params)
{
  const auto t = params.taps();
  const bool fx = bit(s.p1, t.p1_xor[0]) ^ p1_feedback_low(s.p1, kx, ir, t);
  const bool fy = bit(s.p2, t.p2_xor[0]) ^ p2_feedback_low(s.p2, ky, t);
  return CipherState{ ((s.p1 << 1) & params.p1_mask()) | std::uint64_t{ fy },
                      ((s.p2 << 1) & params.p2_mask()) | std::uint64_t{ fx } };
}

CipherState
inverse_round_step(const CipherState& s, bool kx, bool ky, bool ir, const VariantParams& params)
{
  const auto t = params.taps();
  const bool fy = s.p1 & 1u;
  const bool fx = s.p2 & 1u;
  std::uint64_t p1 = (s.p1 & params.p1_mask()) >> 1;
  std::uint64_t p2 = (s.p2 & params.p2_mask()) >> 1;
  // the discarded top bits are the only unknowns and enter fx/fy linearly
  p1 |= static_cast<std::uint64_t>(fx != p1_feedback_low(p1, kx, ir, t)) << (params.len_p1 - 1);
  p2 |= static_cast<std::uint64_t>(fy != p2_feedback_low(p2, ky, t)) << (params.len_p2 - 1);
  return CipherState{ p1, p2 };
}

BlockCipher::BlockCipher(VariantId id, const MasterKey& key)
  : BlockCipher(id, key, ir_sequence())
{}

BlockCipher::BlockCipher(VariantId id, const MasterKey& key, const IRSequence& ir)
  : params_(&build_variant_params(id))
  , key_(expand_key(key))
  , ir_(ir)
{}

std::uint64_t
BlockCipher::encrypt(std::uint64_t pt, unsigned rounds) const
{
  check_rounds(rounds);
  const auto& p = *params_;
  CipherState s = load_state(pt, p);
  for (unsigned i = 0; i < rounds; ++i) {
    const auto [kx, ky] = key_.subkeys(i);
    for (unsigned step = 0; step < p.steps_per_round; ++step)
      s = round_step(s, kx, ky, ir_[i], p);
  }
  return unload_state(s, p);
}

std::uint64_t
BlockCipher::decrypt(std::uint64_t ct, unsigned rounds) const
{
  check_rounds(rounds);
  const auto& p = *params_;
  CipherState s = load_state(ct, p);
  for (unsigned i = rounds; i-- > 0;) {
    const auto [kx, ky] = key_.subkeys(i);
    for (unsigned step = 0; step < p.steps_per_round; ++step)
      s = inverse_round_step(s, kx, ky, ir_[i], p);
  }
  return unload_state(s, p);
}

std::uint64_t
encrypt_block(std::uint64_t pt, const MasterKey& key, VariantId id, unsigned rounds)
{
  return BlockCipher(id, key).encrypt(pt, rounds);
}

std::uint64_t
decrypt_block(std::uint64_t ct, const MasterKey& key, VariantId id, unsigned rounds)
{
  return BlockCipher(id, key).decrypt(ct, rounds);
}

} // namespace eelwe
