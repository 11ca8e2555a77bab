#include "cbh/spectral.hpp"

#include "cbh/families.hpp"

namespace cbh {

namespace {

Int factorial(int n) {
  Int out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// Coefficient polynomials of the block entries in the Laplace eigenvalue.
// c23 is the conformal correction scalar (2/3)(m-1)(m-3)/r^2.
struct BlockPolys {
  RatPoly a, b, d_sq;     // in lambda
  RatPoly trace, det;     // a+b, a*b - d^2
  RatPoly divfree;        // in mu
};

BlockPolys block_polys(int m, const Rational& r2, bool include_correction) {
  const Rational R = (1 - r2) / r2;
  const Rational M = Rational(m) * R;
  const Rational E = (2 - r2 - m) / r2;
  const Rational c23 =
      include_correction ? Rational(2 * Int(m - 1) * (m - 3), 3) / r2 : Rational(0);
  const Rational m2(Int(m) * m);

  BlockPolys p;
  p.a = {M * M - 6 * m2 * R + m2 + c23 * (M - m), 2 * M + 4 * R - 2 * m + c23, Rational(1)};
  p.b = {E * E + rat_pow(Rational(1 - m), 2) - m2 * R - E * Rational(2 * (m - 1)) +
             c23 * (E - m + 1),
         2 * E + Rational(2 * (1 - m)) + 4 * R + c23, Rational(1)};
  // W = ((m+1) r^2 - 2)/r^2 + 3m - 1 - c23 = 4m - 2/r^2 - c23
  const Rational W = Rational(4 * m) - Rational(2) / r2 - c23;
  // d^2(lambda) = 4 R lambda (W - 2 lambda)^2
  p.d_sq = {Rational(0), 4 * R * W * W, -16 * R * W, 16 * R};
  p.trace = rp_add(p.a, p.b);
  p.det = rp_sub(rp_mul(p.a, p.b), p.d_sq);
  p.divfree = {E * E + Rational(2 * (1 - m)) * E + rat_pow(Rational(1 - m), 2) - m2 * R +
                   c23 * (E + 1 - m),
               2 * E + Rational(2 * (1 - m)) + c23, Rational(1)};
  return p;
}

RatPoly equator_normal_poly(int m) {
  const Rational c(2 * Int(m) * m - 11 * m + 6, 3);
  return {-Rational(m) * c, c - m, Rational(1)};
}

RatPoly equator_tangent_poly(int m) {
  const Rational c(2 * Int(m) * m - 14 * m + 12, 3);
  const Rational root(2 * m - 2);
  return {-root * c, c - root, Rational(1)};
}

BlockSpectrum classify_block(const Rational& a, const Rational& b, const Rational& d_sq) {
  BlockSpectrum s;
  s.a = a;
  s.b = b;
  s.d_sq = d_sq;
  s.trace = a + b;
  s.det = a * b - d_sq;
  const int st = sign_of(s.trace), sd = sign_of(s.det);
  if (sd < 0) {
    s.negative_count = 1;
    s.zero_count = 0;
  } else if (sd > 0) {
    if (st == 0) throw std::logic_error("symmetric 2x2 block with det > 0 and trace 0");
    s.negative_count = st < 0 ? 2 : 0;
    s.zero_count = 0;
  } else {
    s.zero_count = st == 0 ? 2 : 1;
    s.negative_count = st < 0 ? 1 : 0;
    if (st == 0 && !(a == 0 && b == 0 && d_sq == 0))
      throw std::logic_error("double-zero block must have a = b = d = 0");
  }
  return s;
}

int sign_to_counts(const Rational& v, Int mult, Int& neg, Int& zero) {
  const int s = sign_of(v);
  if (s < 0) neg += mult;
  if (s == 0) zero += mult;
  return s;
}

// First level (>= from) whose eigenvalue exceeds every root of all given
// polynomials; evaluation at that level is asserted positive by the caller.
template <class EigFn>
int first_certified_level(const std::vector<const RatPoly*>& polys, EigFn eig, int from) {
  for (int level = from;; ++level) {
    const Rational x = eig(level);
    bool ok = x > 0;
    for (const RatPoly* p : polys) ok = ok && exceeds_all_roots(*p, x);
    if (ok) return level;
  }
}

}  // namespace

Rational laplace_eigenvalue(int m, const Rational& r2, int j) {
  if (j < 0 || m < 1) throw std::domain_error("laplace_eigenvalue: m >= 1 and j >= 0 required");
  return Rational(Int(j) * (m + j - 1)) / r2;
}

Rational divfree_laplace_eigenvalue(int m, const Rational& r2, int k) {
  if (k < 1 || m < 1)
    throw std::domain_error("divfree_laplace_eigenvalue: m >= 1 and k >= 1 required");
  return Rational(Int(k + 1) * (k + m - 2)) / r2;
}

Int sph_multiplicity(int m, int j) {
  if (m < 1 || j < 0) throw std::domain_error("sph_multiplicity: m >= 1 and j >= 0 required");
  if (j == 0) return 1;
  if (m == 1) return 2;
  return Int(2 * j + m - 1) * factorial(j + m - 2) / (factorial(j) * factorial(m - 1));
}

Int divfree_multiplicity(int m, int k) {
  if (m < 1 || k < 1) throw std::domain_error("divfree_multiplicity: m >= 1 and k >= 1 required");
  if (m == 1) return k == 1 ? Int(1) : Int(0);
  return Int(k) * (k + m - 1) * (2 * k + m - 1) * factorial(k + m - 3) /
         (factorial(k + 1) * factorial(m - 2));
}

EigenStream normal_stream(int m, const Rational& r2, int j) {
  return {EigenStream::Kind::NormalFunction, j, laplace_eigenvalue(m, r2, j),
          sph_multiplicity(m, j)};
}
EigenStream gradient_stream(int m, const Rational& r2, int j) {
  if (j < 1) throw std::domain_error("gradient_stream: j >= 1 required");
  return {EigenStream::Kind::GradientField, j, laplace_eigenvalue(m, r2, j),
          sph_multiplicity(m, j)};
}
EigenStream divfree_stream(int m, const Rational& r2, int k) {
  return {EigenStream::Kind::DivergenceFree, k, divfree_laplace_eigenvalue(m, r2, k),
          divfree_multiplicity(m, k)};
}

Rational equator_normal_eigenvalue(int m, const Rational& lambda) {
  return (lambda - m) * (lambda + Rational(2 * Int(m) * m - 11 * m + 6, 3));
}

Rational equator_tangent_eigenvalue(int m, const Rational& mu) {
  return (mu - (2 * m - 2)) * (mu + Rational(2 * Int(m) * m - 14 * m + 12, 3));
}

BlockSpectrum hypersphere_block(int m, const Rational& r2, int j, bool include_correction) {
  if (j < 1) throw std::domain_error("hypersphere_block: j >= 1 required (j = 0 is scalar)");
  if (!(r2 > 0 && r2 <= 1)) throw std::domain_error("hypersphere_block: 0 < r^2 <= 1 required");
  const BlockPolys p = block_polys(m, r2, include_correction);
  const Rational lam = laplace_eigenvalue(m, r2, j);
  return classify_block(rp_eval(p.a, lam), rp_eval(p.b, lam), rp_eval(p.d_sq, lam));
}

Rational hypersphere_s0_coefficient(int m, const Rational& r2, bool include_correction) {
  const BlockPolys p = block_polys(m, r2, include_correction);
  return rp_eval(p.a, Rational(0));
}

Rational hypersphere_divfree_eigenvalue(int m, const Rational& r2, const Rational& mu,
                                        bool include_correction) {
  const BlockPolys p = block_polys(m, r2, include_correction);
  return rp_eval(p.divfree, mu);
}

IndexNullityReport index_nullity_equator(int m) {
  if (m < 1) throw std::domain_error("index_nullity_equator: m >= 1 required");
  IndexNullityReport rep;
  rep.m = m;
  rep.r2 = 1;
  rep.variational = true;

  const RatPoly gamma = equator_normal_poly(m);
  const RatPoly theta = equator_tangent_poly(m);
  const auto lam = [&](int j) { return laplace_eigenvalue(m, Rational(1), j); };
  const auto mu = [&](int k) { return divfree_laplace_eigenvalue(m, Rational(1), k); };

  const int j_normal = first_certified_level({&gamma}, lam, 1);
  const int j_grad = first_certified_level({&theta}, lam, 1);
  const int k_div = m == 1 ? 1 : first_certified_level({&theta}, mu, 1);

  for (int j = 0; j <= j_normal; ++j) {
    StreamEntry e;
    e.kind = StreamEntry::Kind::NormalFunction;
    e.level = j;
    e.eigen_param = lam(j);
    e.value = equator_normal_eigenvalue(m, e.eigen_param);
    e.multiplicity = sph_multiplicity(m, j);
    sign_to_counts(*e.value, e.multiplicity, e.negative, e.zero);
    if (j == j_normal && sign_of(*e.value) <= 0)
      throw std::logic_error("truncation level not positive (normal stream)");
    rep.index += e.negative;
    rep.nullity += e.zero;
    rep.breakdown.push_back(std::move(e));
  }
  for (int j = 1; j <= j_grad; ++j) {
    StreamEntry e;
    e.kind = StreamEntry::Kind::GradientField;
    e.level = j;
    e.eigen_param = lam(j);
    e.value = equator_tangent_eigenvalue(m, e.eigen_param);
    e.multiplicity = sph_multiplicity(m, j);
    sign_to_counts(*e.value, e.multiplicity, e.negative, e.zero);
    if (j == j_grad && sign_of(*e.value) <= 0)
      throw std::logic_error("truncation level not positive (gradient stream)");
    rep.index += e.negative;
    rep.nullity += e.zero;
    rep.breakdown.push_back(std::move(e));
  }
  for (int k = 1; k <= k_div; ++k) {
    StreamEntry e;
    e.kind = StreamEntry::Kind::DivergenceFree;
    e.level = k;
    e.eigen_param = mu(k);
    e.value = equator_tangent_eigenvalue(m, e.eigen_param);
    e.multiplicity = divfree_multiplicity(m, k);
    sign_to_counts(*e.value, e.multiplicity, e.negative, e.zero);
    if (m > 1 && k == k_div && sign_of(*e.value) <= 0)
      throw std::logic_error("truncation level not positive (divergence-free stream)");
    rep.index += e.negative;
    rep.nullity += e.zero;
    rep.breakdown.push_back(std::move(e));
  }

  rep.truncation.method = "fujiwara-root-bound";
  rep.truncation.streams = {
      {StreamEntry::Kind::NormalFunction, j_normal, lam(j_normal)},
      {StreamEntry::Kind::GradientField, j_grad, lam(j_grad)},
      {StreamEntry::Kind::DivergenceFree, k_div, mu(k_div)}};
  return rep;
}

IndexNullityReport index_nullity_hypersphere(int m, const Rational& r2) {
  if (m < 1) throw std::domain_error("index_nullity_hypersphere: m >= 1 required");
  if (!(r2 > 0 && r2 <= 1))
    throw std::domain_error("index_nullity_hypersphere: 0 < r^2 <= 1 required");
  IndexNullityReport rep;
  rep.m = m;
  rep.r2 = r2;
  rep.variational = (r2 == 1) || (r2 == hypersphere_cbih_r2(m));

  const BlockPolys polys = block_polys(m, r2, true);
  const auto lam = [&](int j) { return laplace_eigenvalue(m, r2, j); };
  const auto mu = [&](int k) { return divfree_laplace_eigenvalue(m, r2, k); };

  const int j_star = first_certified_level({&polys.trace, &polys.det}, lam, 1);
  const int k_star = m == 1 ? 1 : first_certified_level({&polys.divfree}, mu, 1);

  {
    StreamEntry e;
    e.kind = StreamEntry::Kind::NormalFunction;
    e.level = 0;
    e.eigen_param = 0;
    e.value = hypersphere_s0_coefficient(m, r2);
    e.multiplicity = 1;
    sign_to_counts(*e.value, e.multiplicity, e.negative, e.zero);
    rep.index += e.negative;
    rep.nullity += e.zero;
    rep.breakdown.push_back(std::move(e));
  }
  for (int j = 1; j <= j_star; ++j) {
    StreamEntry e;
    e.kind = StreamEntry::Kind::CoupledBlock;
    e.level = j;
    e.eigen_param = lam(j);
    e.block = hypersphere_block(m, r2, j);
    e.multiplicity = sph_multiplicity(m, j);
    e.negative = Int(e.block->negative_count) * e.multiplicity;
    e.zero = Int(e.block->zero_count) * e.multiplicity;
    if (j == j_star && (e.block->negative_count || e.block->zero_count))
      throw std::logic_error("truncation level not positive (coupled blocks)");
    rep.index += e.negative;
    rep.nullity += e.zero;
    rep.breakdown.push_back(std::move(e));
  }
  for (int k = 1; k <= k_star; ++k) {
    StreamEntry e;
    e.kind = StreamEntry::Kind::DivergenceFree;
    e.level = k;
    e.eigen_param = mu(k);
    e.value = hypersphere_divfree_eigenvalue(m, r2, e.eigen_param);
    e.multiplicity = divfree_multiplicity(m, k);
    sign_to_counts(*e.value, e.multiplicity, e.negative, e.zero);
    if (m > 1 && k == k_star && sign_of(*e.value) <= 0)
      throw std::logic_error("truncation level not positive (divergence-free stream)");
    rep.index += e.negative;
    rep.nullity += e.zero;
    rep.breakdown.push_back(std::move(e));
  }

  rep.truncation.method = "fujiwara-root-bound";
  rep.truncation.streams = {
      {StreamEntry::Kind::CoupledBlock, j_star, lam(j_star)},
      {StreamEntry::Kind::DivergenceFree, k_star, mu(k_star)}};
  return rep;
}

}  // namespace cbh
