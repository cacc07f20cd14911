#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and rationals used throughout the library.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace twoorbit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "numerator/denominator" in lowest terms (0 renders as "0/1").
inline std::string to_fraction_string(const Rational& q)
{
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

/// Integers render bare, everything else as p/q.
inline std::string to_compact_string(const Rational& q)
{
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return to_fraction_string(q);
}

/// Parses "p/q" or a bare integer. Throws std::invalid_argument on malformed input.
inline Rational parse_fraction(std::string_view text)
{
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return BigInt(std::string(s.front() == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace twoorbit
