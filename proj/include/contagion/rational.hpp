#pragma once

// Exact rationals for thresholds, bounds and theorem comparisons. Nothing in
// the infection decision ever touches floating point.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "contagion/error.hpp"

namespace contagion {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
  return Rational(Integer(num), Integer(den));
}

inline Integer numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline Integer denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

/// Smallest integer >= r.
inline Integer ceil(const Rational& r) {
  Integer num = numerator_of(r);
  Integer den = denominator_of(r);  // always positive
  Integer q = num / den;            // truncates toward zero
  if (num % den != 0 && num > 0) ++q;
  return q;
}

/// Largest integer <= r.
inline Integer floor(const Rational& r) {
  Integer num = numerator_of(r);
  Integer den = denominator_of(r);
  Integer q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

/// Serialises as "p/q" (always with a denominator, also for integers).
inline std::string to_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Parses "p/q", "p" or a plain decimal such as "0.55" into an exact value.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorKind::parse, "not a rational number: '" + std::string(text) + "'");
  };
  auto parse_int = [&](std::string_view s) -> Integer {
    if (s.empty()) throw fail();
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) throw fail();
    // Digit by digit: the string constructor treats a leading 0 as octal.
    Integer value = 0;
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw fail();
      value = value * 10 + (s[j] - '0');
    }
    return s[0] == '-' ? Integer(-value) : value;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw fail();
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.front() == '-' || frac.front() == '+') throw fail();
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    Integer num = parse_int(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    Integer den = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    return Rational(negative ? Integer(-num) : num, den);
  }
  return Rational(parse_int(text));
}

}  // namespace contagion
