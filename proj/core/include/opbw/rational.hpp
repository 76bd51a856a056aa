#pragma once
/**
 * Exact rational arithmetic.
 *
 * Thin aliases and helpers over boost::multiprecision::cpp_rational, which is
 * header-only and arbitrary-precision.  All library computations are exact;
 * nothing in opbw ever touches floating point.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "opbw/error.hpp"

namespace opbw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Renders "p" for integers and "p/q" otherwise (canonical lowest terms).
inline std::string rat_to_string(const Rat& r) {
  return r.str();
}

/// Parses "p", "-p", "p/q"; throws ParseError on malformed input.
inline Rat rat_from_string(const std::string& s) {
  try {
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational literal");
    return Rat(s);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "malformed rational literal: '" + s + "'");
  }
}

/// Exact factorial as a rational (used by exponential generating functions).
inline Rat factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rat(f);
}

/// True iff r is an integer.
inline bool rat_is_integer(const Rat& r) {
  return boost::multiprecision::denominator(r) == 1;
}

/// Integer value of an integral rational (precondition: rat_is_integer).
inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }

}  // namespace opbw
