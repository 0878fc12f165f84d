#include "lpwan/number_format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace lpwan {
namespace {

template <class... Args> std::string to_chars_string(double value, Args... args) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, args...);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

} // namespace

std::string format_fixed(double value, int decimals) {
  auto text = to_chars_string(value, std::chars_format::fixed, decimals);
  if (text.starts_with('-') && text.find_first_not_of("-0.") == std::string::npos) {
    text.erase(0, 1); // no "-0.000000"
  }
  return text;
}

std::string format_shortest(double value) { return to_chars_string(value); }

std::string format_general(double value, int digits) {
  return to_chars_string(value, std::chars_format::general, digits);
}

std::optional<double> parse_double(std::string_view text) noexcept {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

} // namespace lpwan
