#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace zm {

/// Element of Z + 1/2, stored as twice its value (an odd integer).
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}

  /// n + 1/2 for an integer n.
  static constexpr HalfInt plus_half(int n) { return HalfInt(2 * n + 1); }
  /// n - 1/2 for an integer n.
  static constexpr HalfInt minus_half(int n) { return HalfInt(2 * n - 1); }

  /// This value plus 1/2, always an integer.
  constexpr int up() const { return (twice + 1) / 2; }
  /// This value minus 1/2, always an integer.
  constexpr int down() const { return (twice - 1) / 2; }

  constexpr bool positive() const { return twice > 0; }

  constexpr HalfInt operator+(int n) const { return HalfInt(twice + 2 * n); }
  constexpr HalfInt operator-(int n) const { return HalfInt(twice - 2 * n); }
  /// Difference of two half-integers, always an integer.
  constexpr int operator-(HalfInt o) const { return (twice - o.twice) / 2; }

  constexpr auto operator<=>(const HalfInt&) const = default;

  double value() const { return twice / 2.0; }

  /// Textual form "p/2" with odd p, e.g. "-3/2".
  std::string str() const { return std::to_string(twice) + "/2"; }

  /// Parses "p/2" with p odd.
  static HalfInt parse(const std::string& text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos || text.substr(slash + 1) != "2")
      throw std::invalid_argument("half-integer must look like p/2: " + text);
    int p = std::stoi(text.substr(0, slash));
    if (p % 2 == 0)
      throw std::invalid_argument("half-integer numerator must be odd: " + text);
    return HalfInt(p);
  }
};

}  // namespace zm
