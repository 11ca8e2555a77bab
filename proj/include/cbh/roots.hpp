#pragma once

// Certified real-root isolation over exact rationals.
//
// Rational roots are found exactly by the rational-root theorem and deflated
// out; the remaining (irrational) roots are counted with Sturm sequences and
// bracketed by sign bisection. Positivity beyond a point is certified with a
// Fujiwara-style root bound evaluated as a rational predicate. No floating
// point anywhere in this header.

#include "cbh/polynomial.hpp"

#include <optional>
#include <vector>

namespace cbh {

struct RootInterval {
  Rational lo, hi;      // lo == hi for exact roots
  bool exact = false;
  int multiplicity = 1;  // multiplicity in the original polynomial

  Rational width() const { return hi - lo; }
  Rational midpoint_exact() const { return (lo + hi) / 2; }
  double midpoint() const { return to_double(midpoint_exact()); }
};

struct SturmChain {
  std::vector<RatPoly> seq;  // squarefree polynomial first

  int sign_changes(const Rational& x) const {
    int changes = 0, prev = 0;
    for (const RatPoly& p : seq) {
      const int s = sign_of(rp_eval(p, x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  }

  // Number of distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const {
    return sign_changes(a) - sign_changes(b);
  }
};

inline SturmChain sturm_chain(const RatPoly& squarefree) {
  SturmChain c;
  c.seq.push_back(squarefree);
  c.seq.push_back(rp_derivative(squarefree));
  rp_normalize(c.seq.back());
  while (!c.seq.back().empty() && rp_degree(c.seq.back()) > 0) {
    RatPoly r = rp_rem(c.seq[c.seq.size() - 2], c.seq.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    c.seq.push_back(std::move(r));
  }
  return c;
}

// True if x (> 0) strictly exceeds every real root of p. Uses the Fujiwara
// bound |root| <= 2 max_i |c_{n-i}/c_n|^{1/i}, checked in rational arithmetic
// as x^i |c_n| > 2^i |c_{n-i}|.
inline bool exceeds_all_roots(const RatPoly& p, const Rational& x) {
  const int n = rp_degree(p);
  if (n <= 0) return true;
  if (x <= 0) return false;
  const Rational lead = rat_abs(p.back());
  Rational xi = 1;    // x^i
  Rational twoi = 1;  // 2^i
  for (int i = 1; i <= n; ++i) {
    xi *= x;
    twoi *= 2;
    const Rational ci = rat_abs(p[n - i]);
    if (ci == 0) continue;
    if (xi * lead <= twoi * ci) return false;
  }
  return true;
}

// Smallest power of two exceeding all real roots of p.
inline Rational positive_root_bound(const RatPoly& p) {
  Rational x = 1;
  while (!exceeds_all_roots(p, x)) x *= 2;
  return x;
}

namespace detail {

// Divide by (x - root); requires root to be an exact root.
inline RatPoly rp_deflate(const RatPoly& p, const Rational& root) {
  RatPoly q(p.size() - 1, Rational(0));
  Rational carry = 0;
  for (int i = rp_degree(p); i >= 1; --i) {
    carry = p[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

// Multiplicity of an exact rational root by repeated deflation.
inline int exact_root_multiplicity(const ExactPolynomial& p, const Rational& root) {
  RatPoly cur = to_rat(p);
  int mult = 0;
  while (!cur.empty() && rp_eval(cur, root) == 0) {
    cur = rp_deflate(cur, root);
    rp_normalize(cur);
    ++mult;
  }
  return mult;
}

// Empty result means "enumeration abandoned" (1 always divides n != 0).
inline std::vector<Int> divisors_up_to(const Int& n, std::size_t cap) {
  std::vector<Int> out;
  if (n == 0) return out;
  const Int a = boost::multiprecision::abs(n);
  std::size_t iterations = 0;
  for (Int d = 1; d * d <= a; ++d) {
    if (++iterations > 100000) return {};
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
      if (out.size() > cap) return {};
    }
  }
  return out;
}

// All rational roots (rational-root theorem on the primitive part). Returns
// nullopt when the divisor enumeration would be too large; callers then rely
// on bisection alone.
inline std::optional<std::vector<Rational>> rational_roots(const ExactPolynomial& p) {
  const ExactPolynomial prim = p.primitive_part();
  std::vector<Rational> roots;
  RatPoly work = to_rat(prim);
  // factor out x^k
  while (!work.empty() && work[0] == 0) {
    if (roots.empty() || roots.back() != 0) roots.push_back(0);
    work.erase(work.begin());
  }
  rp_normalize(work);
  if (rp_degree(work) < 1) return roots;
  const Int lead = numerator(work.back());
  const Int constant = numerator(work.front());
  if (boost::multiprecision::abs(constant) > Int(1) << 62 ||
      boost::multiprecision::abs(lead) > Int(1) << 62)
    return std::nullopt;
  const auto nums = divisors_up_to(constant, 1024);
  const auto dens = divisors_up_to(lead, 1024);
  if (nums.empty() || dens.empty() || nums.size() * dens.size() > 20000) return std::nullopt;
  for (const Int& num : nums)
    for (const Int& den : dens)
      for (int sign : {1, -1}) {
        const Rational cand(sign * num, den);
        if (rp_eval(work, cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  return roots;
}

// Multiplicity of the single root inside (lo, hi): the root has multiplicity
// k in p iff it is a root of the (k-1)-th repeated-gcd reduction of p.
inline int interval_multiplicity(const ExactPolynomial& p, const Rational& lo,
                                 const Rational& hi) {
  RatPoly cur = to_rat(p);
  int mult = 0;
  for (;;) {
    const RatPoly sf = rp_squarefree(cur);
    if (rp_degree(sf) < 1 || sign_of(rp_eval(sf, lo)) * sign_of(rp_eval(sf, hi)) >= 0)
      return mult == 0 ? 1 : mult;
    ++mult;
    RatPoly g = rp_gcd(cur, rp_derivative(cur));
    if (rp_degree(g) < 1) return mult;
    cur = std::move(g);
  }
}

inline void isolate_rec(const SturmChain& chain, const RatPoly& sf, const Rational& a,
                        const Rational& b, const Rational& target_width,
                        std::vector<std::pair<Rational, Rational>>& out) {
  const int n = chain.count(a, b);  // endpoints are never roots of sf here
  if (n == 0) return;
  if (n == 1) {
    Rational lo = a, hi = b;
    const int sign_lo = sign_of(rp_eval(sf, lo));
    while (hi - lo >= target_width) {
      const Rational mid = (lo + hi) / 2;
      const int sm = sign_of(rp_eval(sf, mid));
      if (sm == 0) {
        // can only happen when the rational pre-pass was skipped
        const Rational eps = target_width / 4;
        out.emplace_back(mid - eps, mid + eps);
        return;
      }
      if (sm == sign_lo)
        lo = mid;
      else
        hi = mid;
    }
    out.emplace_back(lo, hi);
    return;
  }
  const Rational mid = (a + b) / 2;
  if (rp_eval(sf, mid) != 0) {
    isolate_rec(chain, sf, a, mid, target_width, out);
    isolate_rec(chain, sf, mid, b, target_width, out);
    return;
  }
  Rational eps = (b - a) / 4;
  while (rp_eval(sf, mid - eps) == 0 || rp_eval(sf, mid + eps) == 0 ||
         chain.count(mid - eps, mid + eps) != 1)
    eps /= 2;
  out.emplace_back(mid - eps, mid + eps);
  isolate_rec(chain, sf, a, mid - eps, target_width, out);
  isolate_rec(chain, sf, mid + eps, b, target_width, out);
}

}  // namespace detail

// All real roots of p in the open interval (lo, hi), each either exact
// (every rational root is) or bracketed by a sign-change interval of width
// below target_width holding exactly one root. Sorted, pairwise disjoint.
inline std::vector<RootInterval> isolate_roots(const ExactPolynomial& p, Rational lo,
                                               Rational hi, const Rational& target_width) {
  if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("empty root isolation interval");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;

  RatPoly sf = rp_squarefree(to_rat(p));

  // Exact rational roots first, deflated out of the squarefree part.
  const auto rational = detail::rational_roots(p);
  if (rational) {
    for (const Rational& root : *rational) {
      if (root > lo && root < hi) {
        RootInterval r;
        r.lo = r.hi = root;
        r.exact = true;
        r.multiplicity = detail::exact_root_multiplicity(p, root);
        out.push_back(std::move(r));
      }
      sf = detail::rp_deflate(sf, root);  // remove even if outside (lo, hi)
      rp_normalize(sf);
    }
  }

  if (rp_degree(sf) >= 1) {
    const SturmChain chain = sturm_chain(sf);
    // Endpoints cannot be roots of sf once rational roots are deflated, but
    // guard anyway for the no-pre-pass fallback.
    if (rp_eval(sf, lo) == 0) {
      Rational eps = (hi - lo) / 16;
      while (rp_eval(sf, lo + eps) == 0 || chain.count(lo, lo + eps) != 0) eps /= 2;
      lo += eps;
    }
    if (rp_eval(sf, hi) == 0) {
      Rational eps = (hi - lo) / 16;
      while (rp_eval(sf, hi - eps) == 0 || chain.count(hi - eps, hi) != 1) eps /= 2;
      hi -= eps;
    }
    if (lo < hi) {
      std::vector<std::pair<Rational, Rational>> brackets;
      detail::isolate_rec(chain, sf, lo, hi, target_width, brackets);
      for (const auto& [a, b] : brackets) {
        RootInterval r;
        r.lo = a;
        r.hi = b;
        r.exact = false;
        r.multiplicity = detail::interval_multiplicity(p, a, b);
        out.push_back(std::move(r));
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

// Number of distinct real roots in the open interval (lo, hi).
inline int count_roots_open(const ExactPolynomial& p, const Rational& lo, const Rational& hi) {
  const RatPoly sf = rp_squarefree(to_rat(p));
  const SturmChain chain = sturm_chain(sf);
  int n = chain.count(lo, hi);
  if (rp_eval(sf, hi) == 0) --n;  // (lo, hi] counts hi
  return n;
}

}  // namespace cbh
