#include "groverian/format.hpp"

#include <cstdio>

namespace groverian {

std::string format_real(double x) {
  // %g switches to exponent form exactly when the decimal exponent is < -4,
  // i.e. |x| < 1e-4, and 12 digits never overflow into exponent form above.
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_real(const std::optional<double>& x) { return x ? format_real(*x) : std::string(); }

}  // namespace groverian
