#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cocycle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an input document (or an in-band request parameter) is
/// malformed.  The CLI maps this to exit code 2.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when the input parses fine but a mathematical precondition or
/// consistency check fails (non-skew derivation, broken cocycle, ...).
/// The CLI maps this to exit code 1.
struct check_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// cpp_rational's two-argument constructor aborts on a negative denominator,
// so every construction funnels through division, which normalizes signs and
// reduces to lowest terms.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw parse_error("rational with zero denominator");
  return Rat(num) / Rat(den);
}

inline Rat make_rat(long num, long den = 1) {
  return make_rat(Int(num), Int(den));
}

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// Accepts "p", "p/q", optional leading sign on either part, optional spaces
// around the slash.  Anything else is a parse_error.
inline Rat parse_rat(const std::string& s) {
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  auto scan_int = [&](size_t& i) -> Int {
    while (i < s.size() && s[i] == ' ') ++i;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    size_t start = i;
    while (i < s.size() && is_digit(s[i])) ++i;
    if (i == start) throw parse_error("bad rational literal: '" + s + "'");
    Int v(s.substr(start, i - start));
    return neg ? Int(-v) : v;
  };
  size_t i = 0;
  Int n = scan_int(i);
  while (i < s.size() && s[i] == ' ') ++i;
  if (i == s.size()) return Rat(n);
  if (s[i] != '/') throw parse_error("bad rational literal: '" + s + "'");
  ++i;
  Int d = scan_int(i);
  while (i < s.size() && s[i] == ' ') ++i;
  if (i != s.size()) throw parse_error("bad rational literal: '" + s + "'");
  return make_rat(n, d);
}

inline std::string format_rat(const Rat& r) {
  std::string out = num(r).str();
  if (den(r) != 1) out += "/" + den(r).str();
  return out;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;  // C++ truncates toward zero
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }

/// Canonical representative in [0,1) of a rational mod 1.
inline Rat mod1(const Rat& r) { return r - Rat(floor_rat(r)); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace cocycle
