#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace lpwan {

// Locale-independent number text. Always '.' as the decimal separator.

/// Fixed notation with `decimals` digits after the point.
std::string format_fixed(double value, int decimals);

/// Shortest text that parses back to the same double.
std::string format_shortest(double value);

/// General notation with `digits` significant digits.
std::string format_general(double value, int digits);

/// Whole-string parse; rejects leading/trailing junk and non-finite values.
std::optional<double> parse_double(std::string_view text) noexcept;

} // namespace lpwan
