#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cbh/ode.hpp"
#include "cbh/warped.hpp"

#include <cmath>

using namespace cbh;

TEST_CASE("constant-curvature targets solve the profile equation") {
  const std::vector<Profile> exact = {Profile::identity(), Profile::sin_scaled(1),
                                      Profile::sinh_scaled(1), Profile::sin_scaled(2),
                                      Profile::sinh_scaled(0.5)};
  for (const auto& beta : exact) {
    for (double z : {0.2, 0.7, 1.3}) {
      CHECK(std::abs(beta_residual(beta, z)) < 1e-10);
      CHECK(std::abs(beta_first_integral(beta, z)) < 1e-12);
    }
  }
}

TEST_CASE("frozen non-solution value") {
  // beta(zeta) = zeta^2 at zeta = 1: 2*8 - 2*2 - 1*2*2 - 0 = 8
  CHECK(beta_residual(Profile::polynomial({0, 0, 1}), 1.0) == doctest::Approx(8.0));
}

TEST_CASE("first integral is conserved along integrated solutions") {
  // a != 0 initial data
  const double b0 = 1.0, b1 = 0.3, b2 = -0.2;
  const double a = b0 * b0 * (1 - b1 * b1 + b0 * b2);
  const auto res = integrate_beta_equation(b0, b1, b2, 0.0, 2.0);
  REQUIRE(res.complete);
  for (std::size_t i = 0; i < res.t.size(); ++i) {
    const double b = res.y[i][0], p = res.y[i][1], s = res.y[i][2];
    CHECK(std::abs(b * b * (1 - p * p + b * s) - a) < 1e-8);
  }
}

TEST_CASE("integrating from sine initial data reproduces the sine") {
  const double z0 = 0.5;
  const auto res = integrate_beta_equation(std::sin(z0), std::cos(z0), -std::sin(z0), z0, 2.5);
  REQUIRE(res.complete);
  for (double z : {0.8, 1.2, 1.9, 2.4}) {
    CHECK(res.at(z)[0] == doctest::Approx(std::sin(z)).epsilon(1e-9));
  }
}

TEST_CASE("beta equation stops near a zero of beta") {
  // beta = sin zeta hits zero at pi; the equation divides by beta^2
  const double z0 = 2.0;
  const auto res = integrate_beta_equation(std::sin(z0), std::cos(z0), -std::sin(z0), z0, 4.0);
  CHECK_FALSE(res.complete);
  CHECK(res.t.back() < 3.6);
  CHECK_FALSE(res.diagnostic.empty());
}

TEST_CASE("conformal profile on the sphere matches the separable closed form") {
  // zeta' = sin(zeta)/sin(r): tan(zeta/2) = C tan(r/2)
  const auto sol = solve_conformal_profile(Profile::sin_scaled(1), DomainModel::Sphere, 0.6,
                                           0.4, 2.6);
  const double C = std::tan(0.3) / std::tan(0.2);
  for (int i = 0; i <= 200; ++i) {
    const double r = 0.4 + 2.2 * i / 200.0;
    const double closed = 2 * std::atan(C * std::tan(r / 2));
    CHECK(std::abs(sol.zeta(r) - closed) < 1e-8);
  }
}

TEST_CASE("conformality holds pointwise for solved profiles") {
  const auto sol = solve_conformal_profile(Profile::sin_scaled(1), DomainModel::Sphere, 0.6,
                                           0.4, 2.6);
  for (int i = 0; i <= 200; ++i) {
    const double r = 0.4 + 2.2 * i / 200.0;
    // Hermite-interpolated derivative of the numerical solution
    const double dz = sol.ode->deriv_at(r)[0];
    CHECK(std::abs(dz * std::sin(r) - std::sin(sol.zeta(r))) < 1e-8);
  }
}

TEST_CASE("linear profile on the euclidean domain") {
  // beta = zeta: zeta = C r
  const auto sol = solve_conformal_profile(Profile::identity(), DomainModel::Euclidean, 0.5,
                                           0.5, 3.0);
  for (int i = 0; i <= 100; ++i) {
    const double r = 0.5 + 2.5 * i / 100.0;
    CHECK(std::abs(sol.zeta(r) - r) < 1e-10);
  }
}

TEST_CASE("solved profiles pass the dimension-four invariance check") {
  const auto sol = solve_conformal_profile(Profile::sin_scaled(1), DomainModel::Sphere, 0.6,
                                           0.4, 2.6);
  RotSymConfig cfg{"solved", sol.alpha, Profile::sin_scaled(1), sol.zeta, 0.4, 2.6, 3};
  const auto chk = conformal_invariance_check(cfg, Profile::smooth_step(0.25, 0.4, 2.6));
  CHECK(chk.relative_deviation < 1e-8);
}

TEST_CASE("blow-up raises a numeric error naming the last valid point") {
  // zeta' = zeta^2 / r from zeta(1) = 5 blows up at r = e^{1/5}
  CHECK_THROWS_AS(solve_conformal_profile(Profile::polynomial({0, 0, 1}),
                                          DomainModel::Euclidean, 5.0, 1.0, 2.0),
                  NumericError);
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(solve_conformal_profile(Profile::identity(), DomainModel::Sphere, 0.5,
                                          0.0, 1.0),
                  std::domain_error);
  const auto sol = solve_conformal_profile(Profile::identity(), DomainModel::Euclidean, 0.5,
                                           0.5, 1.0);
  CHECK_THROWS_AS(sol.ode->at(0.1), std::out_of_range);
}
