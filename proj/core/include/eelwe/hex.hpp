#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eelwe {

struct hex_error : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

// Parses exactly `nibbles` hex digits (an optional "0x" prefix is ignored),
// most significant nibble first. Throws hex_error on bad input.
std::uint64_t
parse_hex(std::string_view text, unsigned nibbles);

// Uppercase, zero-padded to `nibbles` digits.
std::string
format_hex(std::uint64_t value, unsigned nibbles);

std::string_view
strip_hex_prefix(std::string_view text);

} // namespace eelwe
