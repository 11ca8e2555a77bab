#pragma once

// Exact arithmetic primitives shared by all modules: arbitrary-precision
// rationals, parsing/printing helpers, and values of the form sign*sqrt(q)
// used to compare residuals whose closed forms carry a square-root prefactor.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace cbh {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

inline int sign_of(const Rational& q) { return q.sign(); }

inline Rational rat_pow(Rational base, unsigned exp) {
  Rational out = 1;
  while (exp) {
    if (exp & 1u) out *= base;
    base *= base;
    exp >>= 1u;
  }
  return out;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

namespace detail {

// Decimal digit-string to integer. cpp_int's string constructor treats a
// leading 0 as octal, so accumulate explicitly.
inline Int parse_decimal_digits(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("malformed integer literal '" + text + "'");
  Int value = 0;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("malformed integer literal '" + text + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Int(-value) : value;
}

}  // namespace detail

// Parses "p/q", integers, and plain decimals like "0.75" (no exponents).
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Int num = detail::parse_decimal_digits(text.substr(0, slash));
    Int den = detail::parse_decimal_digits(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(detail::parse_decimal_digits(text));
  Int num = detail::parse_decimal_digits(text.substr(0, dot) + text.substr(dot + 1));
  Int den = 1;
  for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
  return Rational(num, den);
}

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

inline std::string format_rational(const Rational& q) {
  const Int num = numerator(q);
  const Int den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// "p/q (decimal)" rendering used throughout the CLI output.
inline std::string format_rational_full(const Rational& q) {
  return format_rational(q) + " (" + format_double(to_double(q)) + ")";
}

// A real number of the form sign * sqrt(square) with square rational.
// Residual coefficients of all hypersurface families have this shape once
// the radical prefactor is kept symbolic, so exact equality of two residual
// routes reduces to comparing the sign and the rational square.
struct SqrtVal {
  int sign = 0;
  Rational square = 0;

  static SqrtVal from_parts(const Rational& cofactor, const Rational& prefactor_sq) {
    SqrtVal v;
    if (prefactor_sq < 0) throw std::logic_error("negative squared prefactor");
    if (prefactor_sq == 0 || cofactor == 0) return v;
    v.sign = sign_of(cofactor);
    v.square = cofactor * cofactor * prefactor_sq;
    return v;
  }

  double value() const {
    return sign * std::sqrt(to_double(square));
  }

  bool is_zero() const { return sign == 0; }

  friend bool operator==(const SqrtVal& a, const SqrtVal& b) {
    return a.sign == b.sign && a.square == b.square;
  }
};

// Raised by quadrature/ODE routines when a self-check fails.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cbh
