#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "eelwe/variant.hpp"

namespace eelwe {

inline constexpr unsigned key_bits = 80;
inline constexpr unsigned expanded_key_bits = 2 * total_rounds; // 508

// 80-bit master key, bits k0..k79. In hex form the first digit carries
// k79..k76 and the last digit k3..k0.
class MasterKey
{
public:
  MasterKey() = default;
  explicit MasterKey(const std::bitset<key_bits>& bits)
    : bits_(bits)
  {}

  static MasterKey from_hex(std::string_view hex);
  std::string to_hex() const;

  bool bit(unsigned i) const { return bits_.test(i); }
  void set_bit(unsigned i, bool v) { bits_.set(i, v); }
  const std::bitset<key_bits>& bits() const { return bits_; }

  friend MasterKey operator^(const MasterKey& l, const MasterKey& r)
  {
    return MasterKey(l.bits_ ^ r.bits_);
  }
  friend bool operator==(const MasterKey&, const MasterKey&) = default;

private:
  std::bitset<key_bits> bits_;
};

// k0..k507; bits 0..79 are the master key, the rest follow
// k[j] = k[j-80] ^ k[j-61] ^ k[j-50] ^ k[j-13].
class ExpandedKey
{
public:
  using bits_type = std::bitset<expanded_key_bits>;

  ExpandedKey() = default;
  explicit ExpandedKey(const bits_type& bits)
    : bits_(bits)
  {}

  bool bit(unsigned j) const { return bits_.test(j); }

  // (kx, ky) = (k[2i], k[2i+1])
  std::pair<bool, bool> subkeys(unsigned round) const
  {
    return { bits_.test(2 * round), bits_.test(2 * round + 1) };
  }

  const bits_type& bits() const { return bits_; }

  // 127 hex digits, first digit carries k507..k504.
  std::string to_hex() const;

  friend ExpandedKey operator^(const ExpandedKey& l, const ExpandedKey& r)
  {
    return ExpandedKey(l.bits_ ^ r.bits_);
  }
  friend bool operator==(const ExpandedKey&, const ExpandedKey&) = default;

private:
  bits_type bits_;
};

ExpandedKey
expand_key(const MasterKey& key);

// Offsets of the key-schedule recurrence, k[j] = XOR of k[j - offset].
inline constexpr std::array<unsigned, 4> key_recurrence_offsets{ 80, 61, 50, 13 };

class IRSequence
{
public:
  using bits_type = std::bitset<total_rounds>;

  IRSequence() = default;
  explicit IRSequence(const bits_type& bits)
    : bits_(bits)
  {}

  bool operator[](unsigned round) const { return bits_.test(round); }
  static constexpr std::size_t size() { return total_rounds; }
  const bits_type& bits() const { return bits_; }

  // 64 hex digits; ir(0) is the most significant bit of the first digit,
  // and the final two bits are zero padding.
  std::string to_hex() const;

  friend bool operator==(const IRSequence&, const IRSequence&) = default;

private:
  bits_type bits_;
};

// Default irregular-update profile: 8-bit maximal-length register for
// x^8 + x^7 + x^5 + x^3 + 1, seeded with all ones. Each step emits the most
// significant state bit, then shifts left with the feedback entering bit 0,
// so the output obeys s[t+8] = s[t+7] ^ s[t+5] ^ s[t+3] ^ s[t].
IRSequence
ir_sequence();

} // namespace eelwe
