#pragma once

// Adaptive Dormand-Prince 5(4) integration with dense output, the constant
// scalar-curvature profile equation for rotationally symmetric targets, and
// the conformal-profile ODE zeta' = beta(zeta)/alpha(r).

#include "cbh/profiles.hpp"
#include "cbh/rational.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace cbh {

using OdeRhs = std::function<std::vector<double>(double, const std::vector<double>&)>;

struct OdeResult {
  std::vector<double> t;
  std::vector<std::vector<double>> y;   // states at t
  std::vector<std::vector<double>> dy;  // right-hand sides at t
  bool complete = false;
  std::string diagnostic;

  double t_begin() const { return t.front(); }
  double t_end() const { return t.back(); }
  // Cubic Hermite interpolation between accepted steps.
  std::vector<double> at(double ti) const;
  std::vector<double> deriv_at(double ti) const;
};

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double hmax = 0.005;  // keeps the Hermite interpolant error well below 1e-9
  std::size_t max_steps = 2000000;
};

OdeResult integrate_ode(const OdeRhs& rhs, std::vector<double> y0, double t0, double t1,
                        const OdeOptions& opts = {});

// Residual of the constant-scalar-curvature equation for the target profile
// beta(zeta):  2 beta'^3 - 2 beta' - beta beta' beta'' - beta^2 beta'''.
double beta_residual(const Jet& b);
double beta_residual(const Profile& beta, double zeta);

// First integral beta^2 (1 - beta'^2 + beta beta''); constant along solutions.
double beta_first_integral(const Jet& b);
double beta_first_integral(const Profile& beta, double zeta);

// Integrates the profile equation as a first-order system in
// (beta, beta', beta''). Stops with complete = false at beta = 0.
OdeResult integrate_beta_equation(double beta0, double dbeta0, double d2beta0,
                                  double zeta_lo, double zeta_hi,
                                  const OdeOptions& opts = {});

enum class DomainModel { Euclidean, Sphere };  // alpha = r or alpha = sin r

struct ConformalSolve {
  std::shared_ptr<OdeResult> ode;  // scalar state: zeta
  Profile zeta;   // dense output; derivatives from the ODE right-hand side
  Profile alpha;
  double r_lo = 0, r_hi = 0;
  int sign = +1;
};

// Solves zeta' = sign * beta(zeta) / alpha(r); throws NumericError with the
// last valid point on blow-up.
ConformalSolve solve_conformal_profile(const Profile& beta, DomainModel domain, double zeta0,
                                       double r_lo, double r_hi, int sign = +1,
                                       const OdeOptions& opts = {});

}  // namespace cbh
