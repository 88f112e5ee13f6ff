#include "pdcouple/fraction.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "pdcouple/errors.hpp"

namespace pdcouple {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view text) {
  throw ConfigurationError("not a number: '" + std::string(text) + "'");
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b, std::string_view text) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ConfigurationError("number too long: '" + std::string(text) + "'");
  return r;
}

Fraction reduce(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Fraction parse_decimal(std::string_view s, std::string_view whole) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad(whole);
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_point = false;
  bool seen_digit = false;
  for (char ch : s) {
    if (ch == '.') {
      if (seen_point) bad(whole);
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      seen_digit = true;
      num = checked_mul(num, 10, whole) + (ch - '0');
      if (seen_point) den = checked_mul(den, 10, whole);
    } else {
      bad(whole);
    }
  }
  if (!seen_digit) bad(whole);
  return reduce(negative ? -num : num, den);
}

}  // namespace

std::string Fraction::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Fraction parse_fraction(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s, text);
  const Fraction p = parse_decimal(s.substr(0, slash), text);
  const Fraction q = parse_decimal(s.substr(slash + 1), text);
  if (q.num == 0) throw ConfigurationError("division by zero in '" + std::string(text) + "'");
  return reduce(checked_mul(p.num, q.den, text), checked_mul(p.den, q.num, text));
}

double parse_number(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.find_first_of("eE") != std::string_view::npos && s.find('/') == std::string_view::npos) {
    const std::string buf(s);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || !std::isfinite(v)) bad(text);
    return v;
  }
  return parse_fraction(s).value();
}

int parse_int(std::string_view text) {
  const Fraction f = parse_fraction(text);
  if (f.den != 1 || f.num > std::numeric_limits<int>::max() || f.num < std::numeric_limits<int>::min())
    throw ConfigurationError("not an integer: '" + std::string(text) + "'");
  return static_cast<int>(f.num);
}

}  // namespace pdcouple
