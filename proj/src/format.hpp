#ifndef SPECTRADOM_SRC_FORMAT_HPP
#define SPECTRADOM_SRC_FORMAT_HPP

#include <cmath>
#include <cstdio>
#include <string>

namespace spectradom::detail {

/// Fixed-point with `digits` decimals; values that round to zero print as
/// "0.000..." without a sign.
inline std::string fixed(double value, int digits = 9) {
  if (std::abs(value) < 0.5 * std::pow(10.0, -digits)) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

}  // namespace spectradom::detail

#endif
