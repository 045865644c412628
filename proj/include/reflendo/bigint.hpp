#pragma once

// Exact integer and rational arithmetic shared by every counting routine.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace reflendo {

using CountInt = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

inline CountInt factorial(unsigned n) {
  CountInt result = 1;
  for (unsigned k = 2; k <= n; ++k) result *= k;
  return result;
}

inline CountInt pow2(unsigned e) {
  CountInt result = 1;
  result <<= e;
  return result;
}

inline CountInt ipow(CountInt base, unsigned e) {
  CountInt result = 1;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

inline Ratio make_ratio(const CountInt& num, const CountInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Ratio(num, den);
}

inline CountInt numerator_of(const Ratio& r) { return boost::multiprecision::numerator(r); }
inline CountInt denominator_of(const Ratio& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Ratio& r) { return denominator_of(r) == 1; }

/// Converts a rational known to be an integer; throws if it is not.
inline CountInt to_integer(const Ratio& r, const char* what = "value") {
  if (!is_integral(r)) throw std::logic_error(std::string(what) + " is not an integer");
  return numerator_of(r);
}

inline std::string to_string(const CountInt& v) { return v.str(); }

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
inline std::string to_string(const Ratio& r) {
  if (is_integral(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline double to_double(const Ratio& r) { return r.convert_to<double>(); }
inline double to_double(const CountInt& v) { return v.convert_to<double>(); }

namespace detail {

inline std::string place_point(CountInt scaled, unsigned digits) {
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, 1, '.');
  }
  return negative ? "-" + s : s;
}

// Rounds num/den to the nearest integer, ties to even. den > 0.
inline CountInt round_half_even(const CountInt& num, const CountInt& den) {
  CountInt q = num / den;
  CountInt r = num % den;
  if (r < 0) {
    q -= 1;
    r += den;
  }
  const CountInt twice = 2 * r;
  if (twice > den || (twice == den && (q & 1) != 0)) q += 1;
  return q;
}

}  // namespace detail

/// Fixed-point decimal rendering with round-half-even at `digits` places.
inline std::string to_fixed(const Ratio& r, unsigned digits) {
  const CountInt scale = ipow(CountInt(10), digits);
  const CountInt scaled = detail::round_half_even(numerator_of(r) * scale, denominator_of(r));
  return detail::place_point(scaled, digits);
}

inline CountInt isqrt(const CountInt& v) {
  if (v < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(v);
}

/// sqrt(r) rendered to `digits` places, round-half-even, computed exactly.
inline std::string sqrt_fixed(const Ratio& r, unsigned digits) {
  if (r < 0) throw std::domain_error("sqrt of negative value");
  // x = r * 10^(2 digits); the answer is round(sqrt(x)).
  const CountInt scale = ipow(CountInt(10), 2 * digits);
  const Ratio x = r * scale;
  const CountInt k = isqrt(numerator_of(x) / denominator_of(x));
  // Compare x with (k + 1/2)^2 = k^2 + k + 1/4.
  const Ratio midpoint = Ratio(k * k + k) + Ratio(1, 4);
  CountInt rounded = k;
  if (x > midpoint || (x == midpoint && (k & 1) != 0)) rounded += 1;
  return detail::place_point(rounded, digits);
}

inline double sqrt_double(const Ratio& r) { return std::stod(sqrt_fixed(r, 17)); }

}  // namespace reflendo
