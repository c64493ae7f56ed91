#pragma once

#include <charconv>
#include <string>

namespace gtfa {

/// Shortest-form text with 17 significant digits, independent of the C locale.
inline std::string format_g17(double v) {
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return {buf, r.ptr};
}

}  // namespace gtfa
