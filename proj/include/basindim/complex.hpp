#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace basindim {

using Complex = std::complex<double>;

/// Any intermediate with modulus above this is reported as overflow instead
/// of being carried forward as a huge or infinite value.
inline constexpr double kOverflowThreshold = 1e150;

/// Moduli below this count as zero when dividing by f(z).
inline constexpr double kZeroThreshold = 1e-300;

/// Parses `re+imi`, `re-imi`, `re`, `imi` (e.g. "0-0.15i", "1.7", "0.8i",
/// "1e-3+2i"). Throws std::invalid_argument on malformed input.
Complex parse_complex(std::string_view text);

/// Shortest round-trip text for a double.
std::string format_double(double x);

/// Inverse of parse_complex, exact round trip.
std::string format_complex(Complex z);

}  // namespace basindim
