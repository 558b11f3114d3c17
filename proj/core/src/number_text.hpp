#pragma once

#include <charconv>
#include <string>

namespace logitprice::detail {

// Shortest round-trip decimal form, independent of the global locale.
inline std::string number_text(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

}  // namespace logitprice::detail
