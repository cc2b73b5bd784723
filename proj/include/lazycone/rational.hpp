// Exact rational scalars. Every computation in this library is exact;
// there is no floating-point mode.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lazycone {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept canonical (positive denominator,
// gcd(num, den) = 1) by the backend.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p" or "p/q" with optional sign on p.
inline Rational parse_rational(std::string_view text) {
  const auto bad = [&](const char* why) {
    throw std::invalid_argument("bad rational '" + std::string(text) + "': " + why);
  };
  if (text.empty())
    bad("empty");
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos)
      return Rational(BigInt(std::string(text)));
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    if (den == 0)
      bad("zero denominator");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    bad("not a rational literal");
  }
  return Rational{};  // unreachable
}

// Canonical rendering: "p" when integral, otherwise "p/q".
inline std::string rational_str(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace lazycone
