#pragma once

#include <optional>
#include <string>

namespace groverian {

/// 12 significant digits; lowercase scientific only when 0 < |x| < 1e-4.
std::string format_real(double x);
/// Empty string for std::nullopt.
std::string format_real(const std::optional<double>& x);

}  // namespace groverian
