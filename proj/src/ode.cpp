#include "cbh/ode.hpp"

#include <algorithm>
#include <cmath>

namespace cbh {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
constexpr double E1 = 35.0 / 384 - 5179.0 / 57600, E3 = 500.0 / 1113 - 7571.0 / 16695,
                 E4 = 125.0 / 192 - 393.0 / 640, E5 = -2187.0 / 6784 + 92097.0 / 339200,
                 E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;

bool finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

std::vector<double> OdeResult::at(double ti) const {
  const auto idx = [&] {
    if (ti < t.front() - 1e-12 || ti > t.back() + 1e-12)
      throw std::out_of_range("ODE interpolation outside integration range");
    auto it = std::upper_bound(t.begin(), t.end(), ti);
    std::size_t i = static_cast<std::size_t>(it - t.begin());
    if (i == 0) i = 1;
    if (i >= t.size()) i = t.size() - 1;
    return i;
  }();
  const double t0 = t[idx - 1], t1 = t[idx], h = t1 - t0;
  const double s = (ti - t0) / h;
  const double h00 = (2 * s - 3) * s * s + 1, h10 = ((s - 2) * s + 1) * s,
               h01 = (3 - 2 * s) * s * s, h11 = (s - 1) * s * s;
  std::vector<double> out(y[idx].size());
  for (std::size_t c = 0; c < out.size(); ++c)
    out[c] = h00 * y[idx - 1][c] + h10 * h * dy[idx - 1][c] + h01 * y[idx][c] +
             h11 * h * dy[idx][c];
  return out;
}

std::vector<double> OdeResult::deriv_at(double ti) const {
  const auto it = std::upper_bound(t.begin(), t.end(), ti);
  std::size_t i = static_cast<std::size_t>(it - t.begin());
  if (i == 0) i = 1;
  if (i >= t.size()) i = t.size() - 1;
  const double t0 = t[i - 1], t1 = t[i], h = t1 - t0;
  const double s = (ti - t0) / h;
  const double g00 = (6 * s - 6) * s / h, g10 = (3 * s - 4) * s + 1,
               g01 = (6 - 6 * s) * s / h, g11 = (3 * s - 2) * s;
  std::vector<double> out(y[i].size());
  for (std::size_t c = 0; c < out.size(); ++c)
    out[c] = g00 * y[i - 1][c] + g10 * dy[i - 1][c] + g01 * y[i][c] + g11 * dy[i][c];
  return out;
}

OdeResult integrate_ode(const OdeRhs& rhs, std::vector<double> y0, double t0, double t1,
                        const OdeOptions& opts) {
  OdeResult res;
  const std::size_t n = y0.size();
  double t = t0;
  std::vector<double> y = std::move(y0);
  std::vector<double> k1 = rhs(t, y);
  if (!finite(k1)) {
    res.diagnostic = "right-hand side not finite at the initial point";
    return res;
  }
  res.t.push_back(t);
  res.y.push_back(y);
  res.dy.push_back(k1);

  double h = std::min(opts.hmax, (t1 - t0) / 16);
  std::vector<double> k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n), err(n);

  const double t_eps = 1e-12 * (t1 - t0);
  for (std::size_t step = 0; step < opts.max_steps && t < t1 - t_eps; ++step) {
    h = std::min({h, opts.hmax, t1 - t});
    if (h < 1e-14 * (t1 - t0)) {
      res.diagnostic = "step size underflow at t = " + format_double(t);
      return res;
    }
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * A21 * k1[i];
    k2 = rhs(t + h / 5, ytmp);
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (A31 * k1[i] + A32 * k2[i]);
    k3 = rhs(t + 3 * h / 10, ytmp);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i]);
    k4 = rhs(t + 4 * h / 5, ytmp);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] + A54 * k4[i]);
    k5 = rhs(t + 8 * h / 9, ytmp);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i] + A64 * k4[i] + A65 * k5[i]);
    k6 = rhs(t + h, ytmp);
    for (std::size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + h * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i] + B5 * k5[i] + B6 * k6[i]);
    k7 = rhs(t + h, ynew);

    if (!finite(ynew) || !finite(k7)) {
      res.diagnostic = "solution not finite near t = " + format_double(t);
      return res;
    }

    double errnorm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      err[i] = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
      const double sc = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      errnorm += (err[i] / sc) * (err[i] / sc);
    }
    errnorm = std::sqrt(errnorm / n);

    if (errnorm <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      res.t.push_back(t);
      res.y.push_back(y);
      res.dy.push_back(k1);
    }
    const double factor =
        std::clamp(0.9 * std::pow(std::max(errnorm, 1e-16), -0.2), 0.2, 5.0);
    h *= factor;
  }
  res.complete = t >= t1 - t_eps;
  if (!res.complete && res.diagnostic.empty()) res.diagnostic = "maximum step count reached";
  return res;
}

double beta_residual(const Jet& b) {
  return 2 * b.df * b.df * b.df - 2 * b.df - b.f * b.df * b.d2f - b.f * b.f * b.d3f;
}

double beta_residual(const Profile& beta, double zeta) {
  return beta_residual(beta.jet(zeta));
}

double beta_first_integral(const Jet& b) {
  return b.f * b.f * (1 - b.df * b.df + b.f * b.d2f);
}

double beta_first_integral(const Profile& beta, double zeta) {
  return beta_first_integral(beta.jet(zeta));
}

OdeResult integrate_beta_equation(double beta0, double dbeta0, double d2beta0, double zeta_lo,
                                  double zeta_hi, const OdeOptions& opts) {
  const OdeRhs rhs = [](double, const std::vector<double>& s) {
    const double b = s[0], b1 = s[1], b2 = s[2];
    const double b3 = (2 * b1 * b1 * b1 - 2 * b1 - b * b1 * b2) / (b * b);
    return std::vector<double>{b1, b2, b3};
  };
  return integrate_ode(rhs, {beta0, dbeta0, d2beta0}, zeta_lo, zeta_hi, opts);
}

ConformalSolve solve_conformal_profile(const Profile& beta, DomainModel domain, double zeta0,
                                       double r_lo, double r_hi, int sign,
                                       const OdeOptions& opts) {
  if (!(r_lo < r_hi)) throw std::domain_error("solve_conformal_profile: r_lo < r_hi required");
  const Profile alpha =
      domain == DomainModel::Euclidean ? Profile::identity() : Profile::sin_scaled(1);
  if (std::abs(alpha(r_lo)) < 1e-12 || std::abs(alpha(r_hi)) < 1e-12)
    throw std::domain_error("solve_conformal_profile: range touches a zero of alpha");

  const OdeRhs rhs = [beta, alpha, sign](double r, const std::vector<double>& s) {
    return std::vector<double>{sign * beta(s[0]) / alpha(r)};
  };
  OdeResult ode = integrate_ode(rhs, {zeta0}, r_lo, r_hi, opts);
  if (!ode.complete)
    throw NumericError("conformal profile integration stopped: " + ode.diagnostic +
                       " (last zeta = " + format_double(ode.y.back()[0]) +
                       " at r = " + format_double(ode.t.back()) + ")");

  ConformalSolve out;
  out.ode = std::make_shared<OdeResult>(std::move(ode));
  out.alpha = alpha;
  out.r_lo = r_lo;
  out.r_hi = r_hi;
  out.sign = sign;
  auto shared = out.ode;
  out.zeta = Profile("solved-zeta", [shared, beta, alpha, sign](double r) {
    Jet j;
    j.f = shared->at(r)[0];
    const Jet a = alpha.jet(r);
    const Jet b = beta.jet(j.f);
    j.df = sign * b.f / a.f;
    j.d2f = sign * (b.df * j.df * a.f - b.f * a.df) / (a.f * a.f);
    j.d3f = 0;  // not used downstream
    return j;
  });
  return out;
}

}  // namespace cbh
