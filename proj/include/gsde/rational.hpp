#pragma once

// Exact rational arithmetic for measure weights. All finite-group results in
// this library are zero-tolerance; nothing here may round.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gsde {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Accepts "p/q" or "p"; q must be nonzero. Sign may sit on either part.
inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw ParseError("rational '" + s + "': zero denominator");
    return Rational(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("cannot parse rational '" + s + "'");
  }
}

// Canonical "p/q" form; integers print without the "/1".
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace gsde
