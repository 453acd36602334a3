#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "rankforge/errors.hpp"

namespace rankforge {

// Every rank decision in this library is made over exact arithmetic.
// cpp_rational keeps values in lowest terms with positive denominator,
// so equality is structural.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Accepts "p" or "p/q" with optional leading '-' on p; q must be positive
/// after sign normalization and nonzero always.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) -> Rational {
    throw ParseError("bad rational '" + std::string(text) + "': " + why);
  };
  if (text.empty()) fail("empty");
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
  if (digits == 0) fail("missing numerator");
  Integer num(std::string(text.substr(0, i)));
  if (i == text.size()) return Rational(num);
  if (text[i] != '/') fail("unexpected character");
  ++i;
  std::size_t den_begin = i;
  if (i < text.size() && text[i] == '-') ++i;
  digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
  if (digits == 0 || i != text.size()) fail("bad denominator");
  Integer den(std::string(text.substr(den_begin)));
  if (den == 0) fail("zero denominator");
  return Rational(num, den);
}

/// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
inline std::string rational_str(const Rational& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) {
    s += '/';
    s += denominator(value).str();
  }
  return s;
}

}  // namespace rankforge
