#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pdcouple {

/// Exact value of a numeric literal such as "3", "-0.125", "1/8" or "2.5/3".
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  [[nodiscard]] std::string str() const;
};

/// Throws ConfigurationError for anything that is not a plain decimal or a
/// quotient of two decimals.
Fraction parse_fraction(std::string_view text);

/// parse_fraction(text).value(), but also accepts exponent notation, which
/// goes through strtod.
double parse_number(std::string_view text);

/// Integer literal; throws ConfigurationError otherwise.
int parse_int(std::string_view text);

}  // namespace pdcouple
