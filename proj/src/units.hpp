#pragma once

#include <string>

namespace eitnoise {

// Internal unit system: angular frequency in rad/us, time in us.
// Config files state frequencies in ordinary units (Hz family) with an
// explicit unit suffix and an optional literal pi multiplier, e.g.
// "pi*78 kHz", "2pi*1 MHz", "500 MHz", "0.3 rad/us".

// Parses a frequency literal into rad/us.  Throws ConfigError when the
// unit suffix is missing or unknown.
double parse_frequency(const std::string& text);

// Parses a duration literal ("0.5 us", "2 ms", "1 s") into us.
double parse_time(const std::string& text);

// rad/us -> ordinary-frequency MHz (divide by 2*pi).
double to_ordinary_mhz(double rad_per_us);

}  // namespace eitnoise
