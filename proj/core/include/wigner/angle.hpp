#pragma once

#include <string_view>

namespace wigner {

/// Parses an angle in radians. Accepts plain decimals ("0.785398") and
/// multiples of pi: "pi", "-pi/4", "3pi/4", "3*pi/8", "0.5pi". Throws
/// ConfigError naming `field` on malformed input.
double parse_angle(std::string_view text, std::string_view field = "angle");

}  // namespace wigner
