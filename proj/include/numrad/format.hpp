#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace numrad {

/// Real in %.17g form; non-finite values become `null` (JSON) or `nan` when
/// json_null is false.
inline std::string format_real(double x, bool json_null = true) {
  if (!std::isfinite(x)) return json_null ? "null" : "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace numrad
