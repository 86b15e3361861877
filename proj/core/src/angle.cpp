#include "wigner/angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "wigner/errors.hpp"

namespace wigner {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// True iff all of `s` is one finite decimal number.
bool parse_decimal(std::string_view s, double& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

}  // namespace

double parse_angle(std::string_view text, std::string_view field) {
  const std::string name(field);
  const std::string_view s = trim(text);
  auto fail = [&]() -> double {
    throw ConfigError(name, "cannot parse angle '" + std::string(text) +
                                "' (expected radians or a multiple of pi such as 3pi/4)");
  };

  const std::size_t pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) {
    double value = 0.0;
    if (!parse_decimal(s, value)) return fail();
    return value;
  }

  std::string_view coefficient = s.substr(0, pi_pos);
  std::string_view rest = s.substr(pi_pos + 2);

  double sign = 1.0;
  if (!coefficient.empty() && (coefficient.front() == '-' || coefficient.front() == '+')) {
    if (coefficient.front() == '-') sign = -1.0;
    coefficient.remove_prefix(1);
  }
  if (!coefficient.empty() && coefficient.back() == '*') coefficient.remove_suffix(1);
  double multiplier = 1.0;
  if (!coefficient.empty()) {
    if (coefficient.front() == '-' || !parse_decimal(coefficient, multiplier)) return fail();
  }

  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') return fail();
    rest.remove_prefix(1);
    if (!parse_decimal(rest, divisor) || divisor == 0.0) return fail();
  }
  return sign * (multiplier * std::numbers::pi) / divisor;
}

}  // namespace wigner
