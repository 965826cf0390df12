#include "gfam/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace gfam {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 15);
  return std::string(buf.data(), res.ptr);
}

}  // namespace gfam
