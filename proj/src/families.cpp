#include "cbh/families.hpp"

#include <cmath>
#include <sstream>

namespace cbh {

namespace {

template <class K>
K conv(const Rational& q);
template <>
Rational conv<Rational>(const Rational& q) { return q; }
template <>
double conv<double>(const Rational& q) { return to_double(q); }

double as_double(const Rational& q) { return to_double(q); }
double as_double(double x) { return x; }

[[noreturn]] void domain_fail(const std::string& family, const std::string& constraint) {
  throw std::domain_error(family + ": violated constraint " + constraint);
}

template <class K>
struct ResidualPartsT {
  K prefactor_sq{};  // P^2, P >= 0
  K tension_cof{}, bitension_cof{}, c_bitension_cof{};
};

// ---- per-family kernels; K is Rational or double --------------------------

template <class K>
GeometricDataT<K> data_sphere_in_sphere(int m, K r2) {
  GeometricDataT<K> d;
  d.ambient_c = 1;
  d.m = m;
  d.radical_sq = (K(1) - r2) / r2;
  d.f_cof = K(-1);
  d.shape_norm_sq = K(m) * (K(1) - r2) / r2;
  d.scal = K(m) * K(m - 1) / r2;
  d.ric_eigenvalues = {{K(m - 1) / r2, m}};
  d.a_dot_ric_cof = -K(m) * K(m - 1) / r2;
  return d;
}

template <class K>
ResidualPartsT<K> parts_sphere_in_sphere(int m, K r2) {
  ResidualPartsT<K> p;
  p.prefactor_sq = (K(1) - r2) / (r2 * r2 * r2);  // (sqrt(1-r^2)/r^3)^2
  p.tension_cof = -K(m) * r2;
  p.bitension_cof = K(m) * K(m) * (K(1) - K(2) * r2);
  p.c_bitension_cof = K(m) * (K(2 * m * m - 5 * m + 6) - K(6 * m) * r2) / K(3);
  return p;
}

template <class K>
GeometricDataT<K> data_clifford(int m1, int m2, K T) {
  const int m = m1 + m2;
  const K U = K(1) - T;
  GeometricDataT<K> d;
  d.ambient_c = 1;
  d.m = m;
  d.radical_sq = K(1) / (T * U);
  d.f_cof = (K(m2) * T - K(m1) * U) / K(m);
  d.shape_norm_sq = K(m1) * U / T + K(m2) * T / U;
  d.scal = K(m1) * K(m1 - 1) / T + K(m2) * K(m2 - 1) / U;
  d.ric_eigenvalues = {{K(m1 - 1) / T, m1}, {K(m2 - 1) / U, m2}};
  d.a_dot_ric_cof = -K(m1) * K(m1 - 1) * U / T + K(m2) * K(m2 - 1) * T / U;
  return d;
}

template <class K>
ResidualPartsT<K> parts_clifford(int m1, int m2, K T) {
  const int m = m1 + m2;
  const K U = K(1) - T;
  const K u = K(m1) * U - K(m2) * T;  // m1 r2^2 - m2 r1^2
  ResidualPartsT<K> p;
  const K TU = T * U;
  p.prefactor_sq = K(1) / (TU * TU * TU);  // (r1 r2)^{-3}
  p.tension_cof = -u * TU;
  p.bitension_cof = u * u * (U - T);
  p.c_bitension_cof =
      u * ((U - T) * u +
           K(2) * (K((m1 - 1) * (m1 - 3)) * U + K((m2 - 1) * (m2 - 3)) * T) / K(3)) -
      K(2 * (m1 - m2)) * TU;
  return p;
}

template <class K>
GeometricDataT<K> data_equidistant(int m, K r2) {
  const K w = K(1) + r2;
  GeometricDataT<K> d;
  d.ambient_c = -1;
  d.m = m;
  d.radical_sq = r2 / w;
  d.f_cof = K(-1);
  d.shape_norm_sq = K(m) * r2 / w;
  d.scal = -K(m) * K(m - 1) / w;
  d.ric_eigenvalues = {{-K(m - 1) / w, m}};
  d.a_dot_ric_cof = K(m) * K(m - 1) / w;
  return d;
}

template <class K>
ResidualPartsT<K> parts_equidistant(int m, K r2) {
  const K w = K(1) + r2;
  ResidualPartsT<K> p;
  p.prefactor_sq = r2 / (w * w * w);  // (r / (1+r^2)^{3/2})^2
  p.tension_cof = -K(m) * w;
  p.bitension_cof = K(m) * K(m) * (K(1) + K(2) * r2);
  p.c_bitension_cof = K(m) * (K(6 * m) * r2 - K(2 * m * m - 11 * m + 6)) / K(3);
  return p;
}

template <class K>
GeometricDataT<K> data_horosphere(int m) {
  GeometricDataT<K> d;
  d.ambient_c = -1;
  d.m = m;
  d.radical_sq = K(1);
  d.f_cof = K(-1);
  d.shape_norm_sq = K(m);
  d.scal = K(0);
  d.ric_eigenvalues = {{K(0), m}};
  d.a_dot_ric_cof = K(0);
  return d;
}

template <class K>
ResidualPartsT<K> parts_horosphere(int m) {
  ResidualPartsT<K> p;
  p.prefactor_sq = K(1);
  p.tension_cof = -K(m);
  p.bitension_cof = K(2 * m * m);
  p.c_bitension_cof = K(2 * m * m);
  return p;
}

template <class K>
GeometricDataT<K> data_geodesic_sphere(int m, K r2) {
  GeometricDataT<K> d;
  d.ambient_c = -1;
  d.m = m;
  d.radical_sq = (K(1) + r2) / r2;
  d.f_cof = K(-1);
  d.shape_norm_sq = K(m) * (K(1) + r2) / r2;
  d.scal = K(m) * K(m - 1) / r2;
  d.ric_eigenvalues = {{K(m - 1) / r2, m}};
  d.a_dot_ric_cof = -K(m) * K(m - 1) / r2;
  return d;
}

template <class K>
ResidualPartsT<K> parts_geodesic_sphere(int m, K r2) {
  ResidualPartsT<K> p;
  p.prefactor_sq = (K(1) + r2) / (r2 * r2 * r2);
  p.tension_cof = -K(m) * r2;
  p.bitension_cof = K(m) * K(m) * (K(1) + K(2) * r2);
  p.c_bitension_cof = K(m) * (K(6 * m) * r2 + K(2 * m * m - 5 * m + 6)) / K(3);
  return p;
}

template <class K>
GeometricDataT<K> data_hyp_product(int m, int k, K r2) {
  const K w = K(1) + r2;
  const int mk = m - k;
  GeometricDataT<K> d;
  d.ambient_c = -1;
  d.m = m;
  d.radical_sq = K(1) / (r2 * w);
  d.f_cof = -(K(k) + K(m) * r2) / K(m);
  d.shape_norm_sq = K(k) * w / r2 + K(mk) * r2 / w;
  d.scal = K(k) * K(k - 1) / r2 - K(mk) * K(mk - 1) / w;
  if (k > 0) d.ric_eigenvalues.push_back({K(k - 1) / r2, k});
  d.ric_eigenvalues.push_back({-K(mk - 1) / w, mk});
  d.a_dot_ric_cof = -K(k) * K(k - 1) * w / r2 + K(mk) * K(mk - 1) * r2 / w;
  return d;
}

template <class K>
ResidualPartsT<K> parts_hyp_product(int m, int k, K s) {
  const K w = K(1) + s;
  ResidualPartsT<K> p;
  p.prefactor_sq = K(1) / (s * s * s * w * w * w);
  p.tension_cof = -(K(k) + K(m) * s) * s * w;
  p.bitension_cof = (K(k) + K(m) * s) * (K(k) * w * w + K(m - k) * s * s + K(m) * s * w);
  // cubic in s from the c-biharmonicity condition of the S^k x H^{m-k} family
  const K c3 = K(6 * m * m);
  const K c2 = K(-2 * m * m * m + 11 * m * m - 6 * m + 4 * k * (m * m - m + 3));
  const K c1 = K(2 * k) * K(k * (3 * m - 5) - m * m + 3 * m + 6);
  const K c0 = K(2 * k * k * k - 5 * k * k + 6 * k);
  p.c_bitension_cof = (((c3 * s + c2) * s + c1) * s + c0) / K(3);
  return p;
}

template <class K>
GeometricDataT<K> data_hyperplane(int m) {
  GeometricDataT<K> d;
  d.ambient_c = 0;
  d.m = m;
  d.radical_sq = K(1);
  d.f_cof = K(0);
  d.shape_norm_sq = K(0);
  d.scal = K(0);
  d.ric_eigenvalues = {{K(0), m}};
  d.a_dot_ric_cof = K(0);
  return d;
}

template <class K>
ResidualPartsT<K> parts_hyperplane(int) {
  ResidualPartsT<K> p;
  p.prefactor_sq = K(1);
  p.tension_cof = K(0);
  p.bitension_cof = K(0);
  p.c_bitension_cof = K(0);
  return p;
}

template <class K>
GeometricDataT<K> data_euclidean_sphere(int m, K r2) {
  GeometricDataT<K> d;
  d.ambient_c = 0;
  d.m = m;
  d.radical_sq = K(1) / r2;
  d.f_cof = K(-1);
  d.shape_norm_sq = K(m) / r2;
  d.scal = K(m) * K(m - 1) / r2;
  d.ric_eigenvalues = {{K(m - 1) / r2, m}};
  d.a_dot_ric_cof = -K(m) * K(m - 1) / r2;
  return d;
}

template <class K>
ResidualPartsT<K> parts_euclidean_sphere(int m, K r2) {
  ResidualPartsT<K> p;
  p.prefactor_sq = K(1) / (r2 * r2 * r2);
  p.tension_cof = -K(m) * r2;
  p.bitension_cof = K(m) * K(m);
  p.c_bitension_cof = K(m) * K(2 * m * m - 5 * m + 6) / K(3);
  return p;
}

template <class K>
GeometricDataT<K> data_euclidean_cylinder(int m, int k, K r2) {
  GeometricDataT<K> d;
  d.ambient_c = 0;
  d.m = m;
  d.radical_sq = K(1) / r2;
  d.f_cof = -K(k) / K(m);
  d.shape_norm_sq = K(k) / r2;
  d.scal = K(k) * K(k - 1) / r2;
  d.ric_eigenvalues = {{K(k - 1) / r2, k}, {K(0), m - k}};
  d.a_dot_ric_cof = -K(k) * K(k - 1) / r2;
  return d;
}

template <class K>
ResidualPartsT<K> parts_euclidean_cylinder(int, int k, K r2) {
  ResidualPartsT<K> p;
  p.prefactor_sq = K(1) / (r2 * r2 * r2);
  p.tension_cof = -K(k) * r2;
  p.bitension_cof = K(k) * K(k);
  p.c_bitension_cof = K(k) * K(2 * k * k - 5 * k + 6) / K(3);
  return p;
}

template <class K>
GeometricDataT<K> geometric_data_t(const HypersurfaceFamily& family) {
  return std::visit(
      [](const auto& f) -> GeometricDataT<K> {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, SphereInSphere>)
          return data_sphere_in_sphere(f.m, conv<K>(f.r2));
        else if constexpr (std::is_same_v<F, CliffordTorus>)
          return data_clifford(f.m1, f.m2, conv<K>(f.r1_sq));
        else if constexpr (std::is_same_v<F, HypEquidistant>)
          return data_equidistant(f.m, conv<K>(f.r) * conv<K>(f.r));
        else if constexpr (std::is_same_v<F, Horosphere>)
          return data_horosphere<K>(f.m);
        else if constexpr (std::is_same_v<F, HypGeodesicSphere>)
          return data_geodesic_sphere(f.m, conv<K>(f.r) * conv<K>(f.r));
        else if constexpr (std::is_same_v<F, HypProduct>)
          return data_hyp_product(f.m, f.k, conv<K>(f.r) * conv<K>(f.r));
        else if constexpr (std::is_same_v<F, EuclideanHyperplane>)
          return data_hyperplane<K>(f.m);
        else if constexpr (std::is_same_v<F, EuclideanSphere>)
          return data_euclidean_sphere(f.m, conv<K>(f.r) * conv<K>(f.r));
        else
          return data_euclidean_cylinder(f.m, f.k, conv<K>(f.r) * conv<K>(f.r));
      },
      family);
}

template <class K>
ResidualPartsT<K> residual_parts_t(const HypersurfaceFamily& family) {
  return std::visit(
      [](const auto& f) -> ResidualPartsT<K> {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, SphereInSphere>)
          return parts_sphere_in_sphere(f.m, conv<K>(f.r2));
        else if constexpr (std::is_same_v<F, CliffordTorus>)
          return parts_clifford(f.m1, f.m2, conv<K>(f.r1_sq));
        else if constexpr (std::is_same_v<F, HypEquidistant>)
          return parts_equidistant(f.m, conv<K>(f.r) * conv<K>(f.r));
        else if constexpr (std::is_same_v<F, Horosphere>)
          return parts_horosphere<K>(f.m);
        else if constexpr (std::is_same_v<F, HypGeodesicSphere>)
          return parts_geodesic_sphere(f.m, conv<K>(f.r) * conv<K>(f.r));
        else if constexpr (std::is_same_v<F, HypProduct>)
          return parts_hyp_product(f.m, f.k, conv<K>(f.r) * conv<K>(f.r));
        else if constexpr (std::is_same_v<F, EuclideanHyperplane>)
          return parts_hyperplane<K>(f.m);
        else if constexpr (std::is_same_v<F, EuclideanSphere>)
          return parts_euclidean_sphere(f.m, conv<K>(f.r) * conv<K>(f.r));
        else
          return parts_euclidean_cylinder(f.m, f.k, conv<K>(f.r) * conv<K>(f.r));
      },
      family);
}

// The r = 0 equidistant and r^2 = 1 hypersphere limits zero out the radical;
// those closed endpoints stay inside the domain.
void validate_impl(const HypersurfaceFamily& family) {
  std::visit(
      [](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, SphereInSphere>) {
          if (f.m < 1) domain_fail("hypersphere", "m >= 1");
          if (!(f.r2 > 0 && f.r2 <= 1)) domain_fail("hypersphere", "0 < r^2 <= 1");
        } else if constexpr (std::is_same_v<F, CliffordTorus>) {
          if (f.m1 < 1 || f.m2 < 1) domain_fail("clifford", "m1, m2 >= 1");
          if (!(f.r1_sq > 0 && f.r1_sq < 1)) domain_fail("clifford", "0 < r1^2 < 1");
        } else if constexpr (std::is_same_v<F, HypEquidistant>) {
          if (f.m < 2) domain_fail("equidistant", "m >= 2");
          if (f.r < 0) domain_fail("equidistant", "r >= 0");
        } else if constexpr (std::is_same_v<F, Horosphere>) {
          if (f.m < 2) domain_fail("horosphere", "m >= 2");
          if (!(f.a > 0)) domain_fail("horosphere", "a > 0");
        } else if constexpr (std::is_same_v<F, HypGeodesicSphere>) {
          if (f.m < 2) domain_fail("geodesic-sphere", "m >= 2");
          if (!(f.r > 0)) domain_fail("geodesic-sphere", "r > 0");
        } else if constexpr (std::is_same_v<F, HypProduct>) {
          if (f.m < 2) domain_fail("hyperbolic-product", "m >= 2");
          if (f.k < 0 || f.k > f.m - 1) domain_fail("hyperbolic-product", "0 <= k <= m-1");
          if (!(f.r > 0)) domain_fail("hyperbolic-product", "r > 0");
        } else if constexpr (std::is_same_v<F, EuclideanHyperplane>) {
          if (f.m < 1) domain_fail("hyperplane", "m >= 1");
        } else if constexpr (std::is_same_v<F, EuclideanSphere>) {
          if (f.m < 1) domain_fail("euclidean-sphere", "m >= 1");
          if (!(f.r > 0)) domain_fail("euclidean-sphere", "r > 0");
        } else {
          if (f.m < 2) domain_fail("euclidean-cylinder", "m >= 2");
          if (f.k < 1 || f.k > f.m - 1) domain_fail("euclidean-cylinder", "1 <= k <= m-1");
          if (!(f.r > 0)) domain_fail("euclidean-cylinder", "r > 0");
        }
      },
      family);
}

}  // namespace

void validate(const HypersurfaceFamily& family) { validate_impl(family); }

std::string family_name(const HypersurfaceFamily& family) {
  return std::visit(
      [](const auto& f) -> std::string {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, SphereInSphere>) return "hypersphere";
        else if constexpr (std::is_same_v<F, CliffordTorus>) return "clifford";
        else if constexpr (std::is_same_v<F, HypEquidistant>) return "equidistant";
        else if constexpr (std::is_same_v<F, Horosphere>) return "horosphere";
        else if constexpr (std::is_same_v<F, HypGeodesicSphere>) return "geodesic-sphere";
        else if constexpr (std::is_same_v<F, HypProduct>) return "hyperbolic-product";
        else if constexpr (std::is_same_v<F, EuclideanHyperplane>) return "hyperplane";
        else if constexpr (std::is_same_v<F, EuclideanSphere>) return "euclidean-sphere";
        else return "euclidean-cylinder";
      },
      family);
}

std::vector<std::pair<std::string, std::string>> family_params(const HypersurfaceFamily& family) {
  using P = std::vector<std::pair<std::string, std::string>>;
  return std::visit(
      [](const auto& f) -> P {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, SphereInSphere>)
          return {{"m", std::to_string(f.m)}, {"r2", format_rational(f.r2)}};
        else if constexpr (std::is_same_v<F, CliffordTorus>)
          return {{"m1", std::to_string(f.m1)},
                  {"m2", std::to_string(f.m2)},
                  {"r1sq", format_rational(f.r1_sq)}};
        else if constexpr (std::is_same_v<F, HypEquidistant>)
          return {{"m", std::to_string(f.m)}, {"r", format_rational(f.r)}};
        else if constexpr (std::is_same_v<F, Horosphere>)
          return {{"m", std::to_string(f.m)}, {"a", format_rational(f.a)}};
        else if constexpr (std::is_same_v<F, HypGeodesicSphere>)
          return {{"m", std::to_string(f.m)}, {"r", format_rational(f.r)}};
        else if constexpr (std::is_same_v<F, HypProduct>)
          return {{"m", std::to_string(f.m)},
                  {"k", std::to_string(f.k)},
                  {"r", format_rational(f.r)}};
        else if constexpr (std::is_same_v<F, EuclideanHyperplane>)
          return {{"m", std::to_string(f.m)}};
        else if constexpr (std::is_same_v<F, EuclideanSphere>)
          return {{"m", std::to_string(f.m)}, {"r", format_rational(f.r)}};
        else
          return {{"m", std::to_string(f.m)},
                  {"k", std::to_string(f.k)},
                  {"r", format_rational(f.r)}};
      },
      family);
}

int ambient_curvature(const HypersurfaceFamily& family) {
  return std::visit(
      [](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, SphereInSphere> || std::is_same_v<F, CliffordTorus>)
          return 1;
        else if constexpr (std::is_same_v<F, EuclideanHyperplane> ||
                           std::is_same_v<F, EuclideanSphere> ||
                           std::is_same_v<F, EuclideanCylinder>)
          return 0;
        else
          return -1;
      },
      family);
}

int family_dimension(const HypersurfaceFamily& family) {
  return std::visit(
      [](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, CliffordTorus>)
          return f.m1 + f.m2;
        else
          return f.m;
      },
      family);
}

template <class K>
double GeometricDataT<K>::f() const {
  return as_double(f_cof) * std::sqrt(as_double(radical_sq));
}
template <class K>
double GeometricDataT<K>::a_dot_ric() const {
  return as_double(a_dot_ric_cof) * std::sqrt(as_double(radical_sq));
}
template struct GeometricDataT<Rational>;
template struct GeometricDataT<double>;

GeometricData geometric_data(const HypersurfaceFamily& family) {
  validate(family);
  return geometric_data_t<Rational>(family);
}

GeometricDataF geometric_data_fp(const HypersurfaceFamily& family) {
  validate(family);
  return geometric_data_t<double>(family);
}

namespace {

ResidualReport make_exact_report(const ResidualPartsT<Rational>& parts) {
  ResidualReport rep;
  rep.mode = ArithmeticMode::Exact;
  rep.prefactor_sq = parts.prefactor_sq;
  rep.tension_cof = parts.tension_cof;
  rep.bitension_cof = parts.bitension_cof;
  rep.c_bitension_cof = parts.c_bitension_cof;
  rep.tension_exact = SqrtVal::from_parts(parts.tension_cof, parts.prefactor_sq);
  rep.bitension_exact = SqrtVal::from_parts(parts.bitension_cof, parts.prefactor_sq);
  rep.c_bitension_exact = SqrtVal::from_parts(parts.c_bitension_cof, parts.prefactor_sq);
  rep.tension_coeff = rep.tension_exact.value();
  rep.bitension_coeff = rep.bitension_exact.value();
  rep.c_bitension_coeff = rep.c_bitension_exact.value();
  rep.is_c_biharmonic = rep.c_bitension_exact.is_zero();
  return rep;
}

}  // namespace

ResidualReport residual(const HypersurfaceFamily& family) {
  validate(family);
  return make_exact_report(residual_parts_t<Rational>(family));
}

ResidualReport residual_equidistant_sq(int m, const Rational& r_sq) {
  if (m < 2 || r_sq < 0) throw std::domain_error("equidistant: m >= 2 and r^2 >= 0 required");
  return make_exact_report(parts_equidistant<Rational>(m, r_sq));
}

ResidualReport residual_geodesic_sphere_sq(int m, const Rational& r_sq) {
  if (m < 2 || !(r_sq > 0)) throw std::domain_error("geodesic-sphere: m >= 2 and r^2 > 0 required");
  return make_exact_report(parts_geodesic_sphere<Rational>(m, r_sq));
}

ResidualReport residual_hyp_product_sq(int m, int k, const Rational& r_sq) {
  if (m < 2 || k < 0 || k > m - 1 || !(r_sq > 0))
    throw std::domain_error("hyperbolic-product: m >= 2, 0 <= k <= m-1, r^2 > 0 required");
  return make_exact_report(parts_hyp_product<Rational>(m, k, r_sq));
}

ResidualReport residual_fp(const HypersurfaceFamily& family, double tolerance) {
  validate(family);
  const auto parts = residual_parts_t<double>(family);
  ResidualReport rep;
  rep.mode = ArithmeticMode::Floating;
  rep.tolerance = tolerance;
  const double pref = std::sqrt(parts.prefactor_sq);
  rep.tension_coeff = parts.tension_cof * pref;
  rep.bitension_coeff = parts.bitension_cof * pref;
  rep.c_bitension_coeff = parts.c_bitension_cof * pref;
  rep.is_c_biharmonic = std::abs(rep.c_bitension_coeff) <= tolerance;
  return rep;
}

CmcResidual cmc_residual(const GeometricData& data) {
  CmcResidual out;
  const Rational m(data.m);
  out.cofactor = m * data.f_cof *
                     (-data.shape_norm_sq + m * Rational(data.ambient_c) -
                      Rational(2, 3) * data.scal) +
                 2 * data.a_dot_ric_cof;
  out.radical_sq = data.radical_sq;
  out.exact = SqrtVal::from_parts(out.cofactor, out.radical_sq);
  out.value = out.exact.value();
  return out;
}

double cmc_residual_fp(const GeometricDataF& data) {
  const double m = data.m;
  const double cof = m * data.f_cof *
                         (-data.shape_norm_sq + m * data.ambient_c -
                          (2.0 / 3.0) * data.scal) +
                     2 * data.a_dot_ric_cof;
  return cof * std::sqrt(data.radical_sq);
}

bool radius_validity(int m, const Rational& c, const Rational& r) {
  if (!(r > 0)) throw std::domain_error("radius_validity: r > 0 required");
  return c > Rational(2 * Int(m - 1) * (m - 3), 3 * Int(m)) / (r * r);
}

bool radius_validity(int m, double c, double r) {
  if (!(r > 0)) throw std::domain_error("radius_validity: r > 0 required");
  return c > (2.0 / 3.0) * (m - 1) * (m - 3) / (m * r * r);
}

double sphere_volume(int m) {
  const double half = 0.5 * (m + 1);
  return 2.0 * std::pow(M_PI, half) / std::tgamma(half);
}

EnergyCurvePoint energy_curve(int m, double t) {
  if (!(std::abs(t) < 1)) throw std::domain_error("energy_curve: |t| < 1 required");
  const double pre = 0.5 * m * m * sphere_volume(m);
  const double s = 1 - t * t;
  EnergyCurvePoint p;
  p.h = pre * s * t * t;
  p.h_c = pre * s * (t * t + (2.0 / 3.0) * (m - 1) * (m - 3) / m);
  return p;
}

Rational energy_curve_shape_c(int m, const Rational& t2) {
  return (1 - t2) * (t2 + Rational(2 * Int(m - 1) * (m - 3), 3 * Int(m)));
}

std::optional<Rational> energy_curve_critical_t2(int m) {
  const Rational t2(-2 * Int(m) * m + 11 * m - 6, 6 * Int(m));
  if (t2 > 0 && t2 < 1) return t2;
  return std::nullopt;
}

}  // namespace cbh
