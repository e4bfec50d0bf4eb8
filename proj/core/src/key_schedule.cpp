#include "eelwe/key_schedule.hpp"

#include "eelwe/hex.hpp"

namespace eelwe {

namespace {

template<std::size_t N>
std::string
bits_to_hex(const std::bitset<N>& bits, std::size_t count, bool msb_is_highest_index)
{
  static constexpr char digits[] = "0123456789ABCDEF";
  const std::size_t nibbles = (count + 3) / 4;
  std::string out(nibbles, '0');
  for (std::size_t d = 0; d < nibbles; ++d) {
    unsigned v = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t pos = 4 * d + k; // 0 = first (most significant) bit printed
      bool b = false;
      if (msb_is_highest_index) {
        // leading padding sits above the highest index
        const std::size_t pad = 4 * nibbles - count;
        if (pos >= pad) b = bits.test(count - 1 - (pos - pad));
      } else if (pos < count) {
        b = bits.test(pos);
      }
      v = (v << 1) | (b ? 1u : 0u);
    }
    out[d] = digits[v];
  }
  return out;
}

} // namespace

MasterKey
MasterKey::from_hex(std::string_view hex)
{
  hex = strip_hex_prefix(hex);
  if (hex.size() != key_bits / 4) {
    throw hex_error("key must be exactly 20 hex digits (80 bits), got " + std::to_string(hex.size()));
  }
  const std::uint64_t hi = parse_hex(hex.substr(0, 4), 4);
  const std::uint64_t lo = parse_hex(hex.substr(4), 16);
  std::bitset<key_bits> bits;
  for (unsigned i = 0; i < 64; ++i)
    bits.set(i, (lo >> i) & 1u);
  for (unsigned i = 0; i < 16; ++i)
    bits.set(64 + i, (hi >> i) & 1u);
  return MasterKey(bits);
}

std::string
MasterKey::to_hex() const
{
  return bits_to_hex(bits_, key_bits, true);
}

std::string
ExpandedKey::to_hex() const
{
  return bits_to_hex(bits_, expanded_key_bits, true);
}

std::string
IRSequence::to_hex() const
{
  return bits_to_hex(bits_, total_rounds, false);
}

ExpandedKey
expand_key(const MasterKey& key)
{
  ExpandedKey::bits_type k;
  for (unsigned j = 0; j < key_bits; ++j)
    k.set(j, key.bit(j));
  for (unsigned j = key_bits; j < expanded_key_bits; ++j) {
    bool v = false;
    for (unsigned off : key_recurrence_offsets)
      v ^= k.test(j - off);
    k.set(j, v);
  }
  return ExpandedKey(k);
}

IRSequence
ir_sequence()
{
  IRSequence::bits_type out;
  std::uint8_t state = 0xFF;
  for (unsigned t = 0; t < total_rounds; ++t) {
    out.set(t, (state >> 7) & 1u);
    // taps at state bits 7, 4, 2, 0 hold s[t], s[t+3], s[t+5], s[t+7]
    const unsigned fb = ((state >> 7) ^ (state >> 4) ^ (state >> 2) ^ state) & 1u;
    state = static_cast<std::uint8_t>((state << 1) | fb);
  }
  return IRSequence(out);
}

} // namespace eelwe
