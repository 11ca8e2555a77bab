#pragma once

// Explicit hypersurface families in space forms with their closed-form
// invariants, and the tension / bitension / conformal-bitension residuals
// evaluated both from per-family closed forms and from the generic CMC
// reduction.
//
// Every residual coefficient factors as  cofactor * P  where P > 0 is a
// radical prefactor (e.g. sqrt(1-r^2)/r^3) and the cofactor is rational in
// the squared parameters. Zero tests and cross-route comparisons happen on
// the cofactors and the squared prefactors, which keeps the whole module in
// exact rational arithmetic; doubles are derived views.

#include "cbh/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cbh {

// ---- family parameter records ---------------------------------------------

struct SphereInSphere {       // S^m(r) in S^{m+1}, 0 < r <= 1 (r = 1: equator)
  int m;
  Rational r2;
};
struct CliffordTorus {        // S^{m1}(r1) x S^{m2}(r2) in S^{m+1}, r1^2+r2^2 = 1
  int m1, m2;
  Rational r1_sq;
};
struct HypEquidistant {       // {x^1 = r} in H^{m+1}, r >= 0 (r = 0: geodesic)
  int m;
  Rational r;
};
struct Horosphere {           // {x^{m+2} = x^{m+1} + a} in H^{m+1}, a > 0
  int m;
  Rational a;
};
struct HypGeodesicSphere {    // geodesic sphere of radius parameter r in H^{m+1}
  int m;
  Rational r;
};
struct HypProduct {           // S^k(r) x H^{m-k} in H^{m+1}, 0 <= k <= m-1
  int m, k;
  Rational r;
};
struct EuclideanHyperplane {  // hyperplane in R^{m+1}
  int m;
};
struct EuclideanSphere {      // S^m(r) in R^{m+1}
  int m;
  Rational r;
};
struct EuclideanCylinder {    // S^k(r) x R^{m-k} in R^{m+1}, 1 <= k <= m-1
  int m, k;
  Rational r;
};

using HypersurfaceFamily =
    std::variant<SphereInSphere, CliffordTorus, HypEquidistant, Horosphere,
                 HypGeodesicSphere, HypProduct, EuclideanHyperplane,
                 EuclideanSphere, EuclideanCylinder>;

// Throws std::domain_error naming the violated constraint.
void validate(const HypersurfaceFamily& family);

std::string family_name(const HypersurfaceFamily& family);
std::vector<std::pair<std::string, std::string>> family_params(const HypersurfaceFamily& family);
int ambient_curvature(const HypersurfaceFamily& family);
int family_dimension(const HypersurfaceFamily& family);

// ---- geometric invariants --------------------------------------------------

// All residual-relevant invariants of a CMC hypersurface with constant
// scalar curvature (every family here qualifies; the grad Scal = 0 branch
// of the CMC reduction is vacuous). The mean curvature f and <A,Ric> carry
// a common positive radical sigma with sigma^2 rational:
//   f = f_cof * sigma,   <A,Ric> = a_dot_ric_cof * sigma.
template <class K>
struct GeometricDataT {
  int ambient_c = 0;  // -1, 0, +1
  int m = 0;
  K radical_sq{};     // sigma^2 >= 0
  K f_cof{};
  K shape_norm_sq{};  // |A|^2
  K scal{};
  std::vector<std::pair<K, int>> ric_eigenvalues;  // (eigenvalue, multiplicity)
  K a_dot_ric_cof{};

  double f() const;
  double a_dot_ric() const;
};

using GeometricData = GeometricDataT<Rational>;
using GeometricDataF = GeometricDataT<double>;

GeometricData geometric_data(const HypersurfaceFamily& family);
GeometricDataF geometric_data_fp(const HypersurfaceFamily& family);

// ---- residuals --------------------------------------------------------------

enum class ArithmeticMode { Exact, Floating };

struct ResidualReport {
  double tension_coeff = 0;      // coefficient of eta in tau
  double bitension_coeff = 0;    // coefficient of eta in tau_2
  double c_bitension_coeff = 0;  // coefficient of eta in tau_2^c
  bool is_c_biharmonic = false;
  ArithmeticMode mode = ArithmeticMode::Exact;
  double tolerance = 0;  // used for the zero decision in floating mode

  // Exact decomposition (valid in exact mode): coefficient = cofactor * P
  // with P = sqrt(prefactor_sq) >= 0 shared by the three coefficients.
  Rational prefactor_sq = 0;
  Rational tension_cof = 0, bitension_cof = 0, c_bitension_cof = 0;
  SqrtVal tension_exact, bitension_exact, c_bitension_exact;
};

ResidualReport residual(const HypersurfaceFamily& family);
ResidualReport residual_fp(const HypersurfaceFamily& family, double tolerance = 1e-10);

// Residuals of the radial families as exact functions of the squared radius
// (classification roots live in r^2; r itself may be irrational).
ResidualReport residual_equidistant_sq(int m, const Rational& r_sq);
ResidualReport residual_geodesic_sphere_sq(int m, const Rational& r_sq);
ResidualReport residual_hyp_product_sq(int m, int k, const Rational& r_sq);

// Normal residual of the CMC reduction:
//   m f (-|A|^2 + m c - (2/3) Scal) + 2 <A,Ric>,
// the coefficient of eta in tau_2^c for a CMC hypersurface with constant
// scalar curvature. Vanishes exactly when the hypersurface is c-biharmonic.
struct CmcResidual {
  Rational cofactor;    // relative to sigma of the input data
  Rational radical_sq;  // sigma^2
  SqrtVal exact;
  double value = 0;
};

CmcResidual cmc_residual(const GeometricData& data);
double cmc_residual_fp(const GeometricDataF& data);

// ---- small closed forms ------------------------------------------------------

// Radius bound for c-biharmonic submanifolds S^m(r) -> N(c): true iff
// c > (2/3)(m-1)(m-3)/(m r^2). A non-minimal c-biharmonic immersion
// violating this cannot exist.
bool radius_validity(int m, const Rational& c, const Rational& r);
bool radius_validity(int m, double c, double r);

// Squared radius of the non-geodesic c-biharmonic hypersphere in S^{m+1}.
inline Rational hypersphere_cbih_r2(int m) {
  return Rational(2 * Int(m) * m - 5 * m + 6, 6 * Int(m));
}

// vol(S^m) = 2 pi^{(m+1)/2} / Gamma((m+1)/2)
double sphere_volume(int m);

// Second-variation energy curves along the hypersphere deformation
// phi_t(x) = (sqrt(1-t^2) x, t):
//   h(t)   = 1/2 m^2 vol(S^m) (1-t^2) t^2
//   h_c(t) = 1/2 m^2 vol(S^m) (1-t^2) (t^2 + (2/3)(m-1)(m-3)/m)
struct EnergyCurvePoint {
  double h = 0;
  double h_c = 0;
};
EnergyCurvePoint energy_curve(int m, double t);

// Rational part of h_c (h_c divided by m^2 vol(S^m)/2), exact in t^2.
Rational energy_curve_shape_c(int m, const Rational& t2);

// Nonzero critical points t*^2 = (-2m^2+11m-6)/(6m) of h_c when inside (0,1).
std::optional<Rational> energy_curve_critical_t2(int m);

}  // namespace cbh
