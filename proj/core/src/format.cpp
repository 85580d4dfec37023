#include "oam/format.hpp"

#include <charconv>
#include <cstdio>

namespace oam {

std::string format_full(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

std::string format_fixed3(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  std::string text(buf);
  if (text == "-0.000") text.erase(0, 1);
  return text;
}

} // namespace oam
