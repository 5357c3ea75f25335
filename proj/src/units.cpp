#include "units.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace eitnoise {

namespace {

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Splits "<multiplier*><number> <unit>" and returns multiplier * number,
// leaving the unit token in `unit`.
double parse_magnitude(const std::string& text, std::string& unit) {
  std::string body = strip(text);
  double multiplier = 1.0;
  if (body.rfind("2pi*", 0) == 0) {
    multiplier = 2.0 * std::numbers::pi;
    body = body.substr(4);
  } else if (body.rfind("2*pi*", 0) == 0) {
    multiplier = 2.0 * std::numbers::pi;
    body = body.substr(5);
  } else if (body.rfind("pi*", 0) == 0) {
    multiplier = std::numbers::pi;
    body = body.substr(3);
  }
  body = strip(body);

  size_t pos = 0;
  while (pos < body.size() &&
         (std::isdigit(static_cast<unsigned char>(body[pos])) || body[pos] == '.' ||
          body[pos] == '-' || body[pos] == '+' || body[pos] == 'e' || body[pos] == 'E')) {
    // 'e' only counts as part of the number when followed by a digit or sign
    if ((body[pos] == 'e' || body[pos] == 'E') &&
        !(pos + 1 < body.size() &&
          (std::isdigit(static_cast<unsigned char>(body[pos + 1])) || body[pos + 1] == '-' ||
           body[pos + 1] == '+')))
      break;
    ++pos;
  }
  if (pos == 0) fail(ErrorCode::ConfigError, "no numeric value in '" + text + "'");
  double value = 0.0;
  auto [p, ec] = std::from_chars(body.data(), body.data() + pos, value);
  if (ec != std::errc() || p != body.data() + pos)
    fail(ErrorCode::ConfigError, "cannot parse number in '" + text + "'");
  unit = strip(body.substr(pos));
  return multiplier * value;
}

}  // namespace

double parse_frequency(const std::string& text) {
  std::string unit;
  double magnitude = parse_magnitude(text, unit);
  if (unit.empty())
    fail(ErrorCode::ConfigError, "frequency '" + text + "' is missing a unit suffix");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  // ordinary frequency -> angular rad/us
  if (unit == "Hz") return magnitude * two_pi * 1e-6;
  if (unit == "kHz") return magnitude * two_pi * 1e-3;
  if (unit == "MHz") return magnitude * two_pi;
  if (unit == "GHz") return magnitude * two_pi * 1e3;
  // already angular
  if (unit == "rad/us" || unit == "rad_per_us") return magnitude;
  fail(ErrorCode::ConfigError, "unknown frequency unit '" + unit + "' in '" + text + "'");
}

double parse_time(const std::string& text) {
  std::string unit;
  double magnitude = parse_magnitude(text, unit);
  if (unit.empty()) fail(ErrorCode::ConfigError, "time '" + text + "' is missing a unit suffix");
  if (unit == "ns") return magnitude * 1e-3;
  if (unit == "us") return magnitude;
  if (unit == "ms") return magnitude * 1e3;
  if (unit == "s") return magnitude * 1e6;
  fail(ErrorCode::ConfigError, "unknown time unit '" + unit + "' in '" + text + "'");
}

double to_ordinary_mhz(double rad_per_us) { return rad_per_us / (2.0 * std::numbers::pi); }

}  // namespace eitnoise
