#pragma once

#include <cstdint>
#include <stdexcept>

#include "eelwe/key_schedule.hpp"
#include "eelwe/variant.hpp"

namespace eelwe {

// The two shift registers. Bit 0 is the least significant bit of each
// register; bits at or above len_p1 / len_p2 are always zero.
struct CipherState
{
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;

  friend bool operator==(const CipherState&, const CipherState&) = default;
};

// P1 takes the top len_p1 bits of the block, P2 the bottom len_p2 bits.
// Throws std::out_of_range if the block has bits at or above n.
CipherState
load_state(std::uint64_t block, const VariantParams& params);

std::uint64_t
unload_state(const CipherState& s, const VariantParams& params);

// One application of the nonlinear feedback pair. fx is taken from P1 and
// shifted into P2, fy is taken from P2 and shifted into P1; both are
// computed from the state before either register moves.
CipherState
round_step(const CipherState& s, bool kx, bool ky, bool ir, const VariantParams& params);

CipherState
inverse_round_step(const CipherState& s, bool kx, bool ky, bool ir, const VariantParams& params);

// Keyed instance with the expanded key and IR profile precomputed, so that
// repeated encryptions skip the key schedule. Immutable after construction.
class BlockCipher
{
public:
  BlockCipher(VariantId id, const MasterKey& key);
  BlockCipher(VariantId id, const MasterKey& key, const IRSequence& ir);

  // Runs the first `rounds` rounds; every step of round i uses
  // (k[2i], k[2i+1]) and ir(i). Throws std::out_of_range on a block wider
  // than n bits or rounds > 254.
  std::uint64_t encrypt(std::uint64_t pt, unsigned rounds = total_rounds) const;
  std::uint64_t decrypt(std::uint64_t ct, unsigned rounds = total_rounds) const;

  const VariantParams& params() const { return *params_; }
  const ExpandedKey& expanded_key() const { return key_; }
  const IRSequence& ir() const { return ir_; }

private:
  const VariantParams* params_;
  ExpandedKey key_;
  IRSequence ir_;
};

std::uint64_t
encrypt_block(std::uint64_t pt, const MasterKey& key, VariantId id, unsigned rounds = total_rounds);

std::uint64_t
decrypt_block(std::uint64_t ct, const MasterKey& key, VariantId id, unsigned rounds = total_rounds);

} // namespace eelwe
