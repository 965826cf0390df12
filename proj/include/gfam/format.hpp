#pragma once

#include <string>

namespace gfam {

/// 15 significant digits, trailing zeros dropped, '.' decimal separator
/// independent of the C locale. Non-finite values print as nan, inf, -inf.
std::string format_real(double value);

}  // namespace gfam
