#pragma once

// Integer-coefficient polynomials (ascending order) plus the small rational
// polynomial toolkit needed for Sturm sequences and root bounds.

#include "cbh/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <vector>

namespace cbh {

struct ExactPolynomial {
  std::vector<Int> coeffs;      // ascending degree, no zero leading coefficient
  Int cleared_denominator = 1;  // factor applied when clearing denominators

  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<Int> c, Int cleared = 1)
      : coeffs(std::move(c)), cleared_denominator(std::move(cleared)) {
    normalize();
  }

  static ExactPolynomial from_ints(std::initializer_list<long long> c) {
    std::vector<Int> v;
    for (long long x : c) v.emplace_back(x);
    return ExactPolynomial(std::move(v));
  }

  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  }

  double eval(double x) const {
    double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
  }

  ExactPolynomial derivative() const {
    std::vector<Int> d;
    for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * Int(i));
    return ExactPolynomial(std::move(d), cleared_denominator);
  }

  Int content() const {
    Int g = 0;
    for (const Int& c : coeffs) g = boost::multiprecision::gcd(g, c);
    return g;
  }

  // Coefficients divided by their gcd, leading coefficient made positive.
  ExactPolynomial primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    if (coeffs.back() < 0) g = -g;
    std::vector<Int> out;
    out.reserve(coeffs.size());
    for (const Int& c : coeffs) out.push_back(c / g);
    return ExactPolynomial(std::move(out));
  }

  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
    return a.coeffs == b.coeffs;
  }
};

// ---- rational polynomials (dense ascending) ------------------------------

using RatPoly = std::vector<Rational>;

inline void rp_normalize(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int rp_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly to_rat(const ExactPolynomial& p) {
  RatPoly out;
  out.reserve(p.coeffs.size());
  for (const Int& c : p.coeffs) out.emplace_back(c);
  return out;
}

inline Rational rp_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline RatPoly rp_derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(Int(i)));
  return d;
}

inline RatPoly rp_scale(RatPoly p, const Rational& s) {
  for (auto& c : p) c *= s;
  return p;
}

inline RatPoly rp_add(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  rp_normalize(a);
  return a;
}

inline RatPoly rp_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  rp_normalize(a);
  return a;
}

inline RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  rp_normalize(out);
  return out;
}

// Remainder of num / den in Q[x].
inline RatPoly rp_rem(RatPoly num, const RatPoly& den) {
  rp_normalize(num);
  if (den.empty()) throw std::invalid_argument("polynomial division by zero");
  while (rp_degree(num) >= rp_degree(den)) {
    const int shift = rp_degree(num) - rp_degree(den);
    const Rational factor = num.back() / den.back();
    for (std::size_t i = 0; i < den.size(); ++i) num[i + shift] -= factor * den[i];
    num.pop_back();
    rp_normalize(num);
    if (num.empty()) break;
  }
  return num;
}

inline RatPoly rp_monic(RatPoly p) {
  rp_normalize(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
  rp_normalize(a);
  rp_normalize(b);
  while (!b.empty()) {
    RatPoly r = rp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return rp_monic(a);
}

// p with repeated roots stripped: p / gcd(p, p').
inline RatPoly rp_squarefree(const RatPoly& p) {
  RatPoly g = rp_gcd(p, rp_derivative(p));
  if (rp_degree(g) <= 0) return rp_monic(p);
  // exact division
  RatPoly num = p;
  RatPoly q(rp_degree(p) - rp_degree(g) + 1, Rational(0));
  while (rp_degree(num) >= rp_degree(g) && !num.empty()) {
    const int shift = rp_degree(num) - rp_degree(g);
    const Rational factor = num.back() / g.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < g.size(); ++i) num[i + shift] -= factor * g[i];
    rp_normalize(num);
  }
  return rp_monic(q);
}

}  // namespace cbh
