#pragma once

// Rotationally symmetric geometry on S^q x I with metric dr^2 + alpha(r)^2 g_{S^q}:
// curvature, the tension of maps (theta, r) -> (theta, zeta(r)) into
// S^q x J with metric dzeta^2 + beta(zeta)^2 g_{S^q}, the conformal bienergy
// by composite Gauss-Legendre quadrature, and the conformal-invariance check
// via reparametrization of e^{2 rho} g as a warped product.

#include "cbh/profiles.hpp"
#include "cbh/rational.hpp"
#include "cbh/sweep.hpp"

#include <string>

namespace cbh {

struct RicciEigenvalues {
  double radial = 0;
  double fiber = 0;
};

// Scal and Ricci of dr^2 + alpha^2 g_{S^q}; throws NumericError at alpha = 0.
double warped_scal(const Profile& alpha, int q, double r);
RicciEigenvalues warped_ric(const Profile& alpha, int q, double r);

// d/dzeta-component of the tension field (the S^q-component vanishes by
// equivariance): zeta'' + q (alpha'/alpha) zeta' - q beta(zeta) beta'(zeta) / alpha^2.
double rotsym_tension(const Profile& alpha, const Profile& beta, const Profile& zeta,
                      int q, double r);

struct QuadratureSpec {
  int gauss_order = 16;
  int panels = 64;
  double pole_margin = 1e-4;     // offset from endpoints where alpha vanishes
  double convergence_tol = 1e-10;  // doubling panels must move the value less
  bool richardson = true;          // extrapolate the pole margin to zero
  bool parallel = parallel_enabled();
};

struct RotSymConfig {
  std::string name;
  Profile alpha, beta, zeta;
  double r_lo = 0, r_hi = 0;
  int q = 3;  // fiber dimension; domain dimension m = q + 1
};

// E_2^c = 1/2 int (|tau|^2 + (2/3) Scal |dphi|^2 - 2 Tr<dphi(Ric .), dphi .>) dV
// reduced to one dimension with dV = vol(S^q) alpha^q dr.
double c_bienergy_rotsym(const RotSymConfig& cfg, const QuadratureSpec& spec = {});

struct ConformalCheck {
  double e_original = 0;
  double e_conformal = 0;
  double relative_deviation = 0;
};

// Replaces g by e^{2 rho} g, rewrites it as a warped product in arclength,
// and re-evaluates the conformal bienergy of the unchanged map.
ConformalCheck conformal_invariance_check(const RotSymConfig& cfg, const Profile& rho,
                                          const QuadratureSpec& spec = {});

// Scal of e^{2 rho} g computed two ways: the conformal-change formula
// (positive-spectrum Laplacian) versus the reparametrized warped product.
struct ScalPair {
  double via_formula = 0;
  double via_reparam = 0;
};
ScalPair conformal_scal_crosscheck(const Profile& alpha, const Profile& rho, int q, double r);

struct RicPair {
  RicciEigenvalues via_formula, via_reparam;
};
RicPair conformal_ric_crosscheck(const Profile& alpha, const Profile& rho, int q, double r);

// The built-in configuration suite for the invariance check: spherical,
// hyperbolic, flat and mixed warps with conformal and non-conformal maps.
std::vector<RotSymConfig> invariance_presets(int q);

// Conformal factor paired with a preset: cosine-type on full-sphere
// intervals (rho' = 0 at the poles), polynomial smooth step on truncated
// ones (rho' = rho'' = 0 at both ends, so no boundary terms).
Profile preset_conformal_factor(const RotSymConfig& cfg, double amplitude = 0.25);

struct SuiteOutcome {
  std::string name;
  double e_original = 0, e_conformal = 0, relative_deviation = 0;
};

// Runs the whole preset suite at fiber dimension q.
std::vector<SuiteOutcome> run_invariance_suite(int q, const QuadratureSpec& spec = {});

}  // namespace cbh
