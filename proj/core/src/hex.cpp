#include "eelwe/hex.hpp"

namespace eelwe {

namespace {

int
nibble_value(char ch)
{
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return 10 + (ch - 'a');
  if (ch >= 'A' && ch <= 'F') return 10 + (ch - 'A');
  return -1;
}

} // namespace

std::string_view
strip_hex_prefix(std::string_view text)
{
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) text.remove_prefix(2);
  return text;
}

std::uint64_t
parse_hex(std::string_view text, unsigned nibbles)
{
  if (nibbles == 0 || nibbles > 16) throw hex_error("hex width must be 1..16 digits");
  text = strip_hex_prefix(text);
  if (text.size() != nibbles) {
    throw hex_error("expected " + std::to_string(nibbles) + " hex digits, got " + std::to_string(text.size()) +
                    " in '" + std::string(text) + "'");
  }
  std::uint64_t value = 0;
  for (char ch : text) {
    const int v = nibble_value(ch);
    if (v < 0) throw hex_error("invalid hex digit '" + std::string(1, ch) + "'");
    value = (value << 4) | static_cast<std::uint64_t>(v);
  }
  return value;
}

std::string
format_hex(std::uint64_t value, unsigned nibbles)
{
  static constexpr char digits[] = "0123456789ABCDEF";
  std::string out(nibbles, '0');
  for (unsigned i = 0; i < nibbles && i < 16; ++i) {
    out[nibbles - 1 - i] = digits[(value >> (4 * i)) & 0xF];
  }
  return out;
}

} // namespace eelwe
