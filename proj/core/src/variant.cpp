#include "eelwe/variant.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace eelwe {

VariantId
parse_variant(std::string_view text)
{
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (s.rfind("eelwe", 0) == 0) s.erase(0, 5);
  if (!s.empty() && s.front() == 'e') s.erase(0, 1);

  if (s == "32") return VariantId::e32;
  if (s == "48") return VariantId::e48;
  if (s == "64") return VariantId::e64;
  throw std::invalid_argument("unknown variant '" + std::string(text) + "' (expected e32, e48 or e64)");
}

std::string
to_string(VariantId id)
{
  switch (id) {
    case VariantId::e32: return "e32";
    case VariantId::e48: return "e48";
    case VariantId::e64: return "e64";
  }
  return "?";
}

} // namespace eelwe
