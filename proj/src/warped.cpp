#include "cbh/warped.hpp"

#include "cbh/families.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace cbh {

namespace {

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

// Legendre nodes by Newton iteration on P_n.
GaussRule make_gauss(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1 - x * x) * pp * pp);
  }
  return rule;
}

const GaussRule& gauss_rule(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss(n)).first;
  return it->second;
}

// Per-panel sums are accumulated into a vector and added serially, so the
// result does not depend on the thread count.
template <class F>
double integrate_panels(const F& f, double a, double b, int order, int panels, bool parallel) {
  const GaussRule& rule = gauss_rule(order);
  std::vector<double> partial(panels, 0.0);
  const double h = (b - a) / panels;
  parallel_for(
      static_cast<std::size_t>(panels),
      [&](std::size_t p) {
        const double lo = a + h * static_cast<double>(p);
        double sum = 0;
        for (int i = 0; i < order; ++i) {
          const double x = lo + 0.5 * h * (1 + rule.nodes[i]);
          sum += rule.weights[i] * f(x);
        }
        partial[p] = 0.5 * h * sum;
      },
      parallel);
  double total = 0;
  for (double v : partial) total += v;
  return total;
}

struct WarpedPoint {
  double alpha, dalpha, d2alpha;
  double zeta, dzeta, d2zeta;
};

double scal_of(const WarpedPoint& w, int q) {
  const double a = w.alpha;
  return -2.0 * q * w.d2alpha / a + q * (q - 1) * (1 - w.dalpha * w.dalpha) / (a * a);
}

RicciEigenvalues ric_of(const WarpedPoint& w, int q) {
  const double a = w.alpha;
  RicciEigenvalues ric;
  ric.radial = -q * w.d2alpha / a;
  ric.fiber = -w.d2alpha / a + (q - 1) * (1 - w.dalpha * w.dalpha) / (a * a);
  return ric;
}

// Integrand of 2 E_2^c / vol(S^q) without the volume density.
double c_bienergy_integrand(const WarpedPoint& w, const Jet& b, int q) {
  const double a = w.alpha;
  const double bz = b.f;
  const double tau = w.d2zeta + q * (w.dalpha / a) * w.dzeta - q * bz * b.df / (a * a);
  const double dphi2 = w.dzeta * w.dzeta + q * bz * bz / (a * a);
  const double scal = scal_of(w, q);
  const RicciEigenvalues ric = ric_of(w, q);
  const double ric_trace = ric.radial * w.dzeta * w.dzeta + ric.fiber * q * bz * bz / (a * a);
  return tau * tau + (2.0 / 3.0) * scal * dphi2 - 2.0 * ric_trace;
}

void check_alpha(double a, double r) {
  if (std::abs(a) < 1e-13)
    throw NumericError("warp factor vanishes at r = " + format_double(r));
}

WarpedPoint plain_point(const RotSymConfig& cfg, double r) {
  const Jet a = cfg.alpha.jet(r);
  const Jet z = cfg.zeta.jet(r);
  check_alpha(a.f, r);
  return {a.f, a.df, a.d2f, z.f, z.df, z.d2f};
}

// The conformally changed metric e^{2 rho}(dr^2 + alpha^2 g) is again a
// warped product in the arclength variable rt with drt = e^{rho} dr,
// warp factor e^{rho} alpha, and the same map re-expressed in rt. All
// rt-derivatives are evaluated by the chain rule at the original node, and
// the volume element picks up the extra e^{rho}.
WarpedPoint conformal_point(const RotSymConfig& cfg, const Profile& rho, double r) {
  const Jet a = cfg.alpha.jet(r);
  const Jet z = cfg.zeta.jet(r);
  const Jet p = rho.jet(r);
  const double ep = std::exp(p.f);
  WarpedPoint w;
  w.alpha = ep * a.f;
  w.dalpha = p.df * a.f + a.df;
  w.d2alpha = (p.d2f * a.f + p.df * a.df + a.d2f) / ep;
  w.zeta = z.f;
  w.dzeta = z.df / ep;
  w.d2zeta = (z.d2f - p.df * z.df) / (ep * ep);
  check_alpha(w.alpha, r);
  return w;
}

struct Integrals {
  double value = 0;
};

template <class PointFn, class DensityFn>
double bienergy_integral(const RotSymConfig& cfg, const QuadratureSpec& spec,
                         const PointFn& point, const DensityFn& density) {
  const auto integrand = [&](double r) {
    const WarpedPoint w = point(r);
    const Jet b = cfg.beta.jet(w.zeta);
    return c_bienergy_integrand(w, b, cfg.q) * density(r, w);
  };

  const bool pole_lo = std::abs(cfg.alpha(cfg.r_lo)) < 1e-12;
  const bool pole_hi = std::abs(cfg.alpha(cfg.r_hi)) < 1e-12;

  const auto eval = [&](int panels) {
    const auto with_margin = [&](double eps) {
      const double a = cfg.r_lo + (pole_lo ? eps : 0.0);
      const double b = cfg.r_hi - (pole_hi ? eps : 0.0);
      return integrate_panels(integrand, a, b, spec.gauss_order, panels, spec.parallel);
    };
    if (!(pole_lo || pole_hi)) return with_margin(0);
    const double e1 = with_margin(spec.pole_margin);
    if (!spec.richardson) return e1;
    // integrand ~ alpha^q near a pole, so the truncation error is O(eps^{q+1})
    const double e2 = with_margin(2 * spec.pole_margin);
    const double scale = std::pow(2.0, cfg.q + 1);
    return e1 + (e1 - e2) / (scale - 1.0);
  };

  const double coarse = eval(spec.panels);
  const double fine = eval(2 * spec.panels);
  if (std::abs(fine - coarse) > spec.convergence_tol * std::max(1.0, std::abs(fine)))
    throw NumericError("quadrature self-check failed for '" + cfg.name +
                       "': panels=" + std::to_string(spec.panels) +
                       " value=" + format_double(coarse) + " refined=" + format_double(fine));
  return fine;
}

}  // namespace

double warped_scal(const Profile& alpha, int q, double r) {
  const Jet a = alpha.jet(r);
  check_alpha(a.f, r);
  return scal_of({a.f, a.df, a.d2f, 0, 0, 0}, q);
}

RicciEigenvalues warped_ric(const Profile& alpha, int q, double r) {
  const Jet a = alpha.jet(r);
  check_alpha(a.f, r);
  return ric_of({a.f, a.df, a.d2f, 0, 0, 0}, q);
}

double rotsym_tension(const Profile& alpha, const Profile& beta, const Profile& zeta,
                      int q, double r) {
  const Jet a = alpha.jet(r);
  const Jet z = zeta.jet(r);
  check_alpha(a.f, r);
  const Jet b = beta.jet(z.f);
  return z.d2f + q * (a.df / a.f) * z.df - q * b.f * b.df / (a.f * a.f);
}

double c_bienergy_rotsym(const RotSymConfig& cfg, const QuadratureSpec& spec) {
  const double vol = sphere_volume(cfg.q);
  const double integral = bienergy_integral(
      cfg, spec, [&](double r) { return plain_point(cfg, r); },
      [&](double, const WarpedPoint& w) { return std::pow(w.alpha, cfg.q); });
  return 0.5 * vol * integral;
}

ConformalCheck conformal_invariance_check(const RotSymConfig& cfg, const Profile& rho,
                                          const QuadratureSpec& spec) {
  ConformalCheck out;
  out.e_original = c_bienergy_rotsym(cfg, spec);
  const double vol = sphere_volume(cfg.q);
  const double integral = bienergy_integral(
      cfg, spec, [&](double r) { return conformal_point(cfg, rho, r); },
      [&](double r, const WarpedPoint& w) {
        return std::pow(w.alpha, cfg.q) * std::exp(rho(r));  // alpha~^q drt
      });
  out.e_conformal = 0.5 * vol * integral;
  const double scale = std::max({std::abs(out.e_original), std::abs(out.e_conformal), 1e-30});
  out.relative_deviation = std::abs(out.e_conformal - out.e_original) / scale;
  return out;
}

ScalPair conformal_scal_crosscheck(const Profile& alpha, const Profile& rho, int q, double r) {
  const int m = q + 1;
  const Jet a = alpha.jet(r);
  const Jet p = rho.jet(r);
  check_alpha(a.f, r);
  // positive-spectrum convention: Delta f = -(f'' + q (alpha'/alpha) f')
  const double lap_rho = -(p.d2f + q * (a.df / a.f) * p.df);
  const double grad_sq = p.df * p.df;
  const double scal = warped_scal(alpha, q, r);
  ScalPair out;
  out.via_formula =
      std::exp(-2 * p.f) * (scal + (m - 1) * (2 * lap_rho - (m - 2) * grad_sq));
  RotSymConfig cfg;
  cfg.alpha = alpha;
  cfg.zeta = Profile::identity();
  cfg.q = q;
  const WarpedPoint w = conformal_point(cfg, rho, r);
  out.via_reparam = scal_of(w, q);
  return out;
}

std::vector<RotSymConfig> invariance_presets(int q) {
  std::vector<RotSymConfig> v;
  const double pi = M_PI;
  v.push_back({"identity-sphere", Profile::sin_scaled(1), Profile::sin_scaled(1),
               Profile::identity(), 0, pi, q});
  v.push_back({"stereographic", Profile::sin_scaled(1), Profile::identity(),
               Profile::tan_half(1), 0.3, 2.2, q});
  v.push_back({"sphere-half-angle", Profile::sin_scaled(1), Profile::sin_scaled(2),
               Profile::linear(0.5), 0, pi, q});
  v.push_back({"hyperbolic-identity", Profile::sinh_scaled(1), Profile::sinh_scaled(1),
               Profile::identity(), 0.5, 2.0, q});
  v.push_back({"flat-to-hyperbolic", Profile::identity(), Profile::sinh_scaled(1),
               Profile::two_artanh(0.3), 0.5, 2.5, q});
  v.push_back({"sphere-to-flat-scaled", Profile::sin_scaled(1), Profile::identity(),
               Profile::tan_half(2), 0.2, 2.0, q});
  v.push_back({"cross-warp", Profile::sin_scaled(1), Profile::sinh_scaled(1),
               Profile::linear(0.7), 0.4, 2.6, q});
  return v;
}

Profile preset_conformal_factor(const RotSymConfig& cfg, double amplitude) {
  if (cfg.r_lo == 0.0)
    return Profile::cos_sum({{amplitude, 1.0}, {-amplitude / 2, 2.0}});
  return Profile::smooth_step(amplitude, cfg.r_lo, cfg.r_hi);
}

std::vector<SuiteOutcome> run_invariance_suite(int q, const QuadratureSpec& spec) {
  std::vector<SuiteOutcome> out;
  for (const RotSymConfig& cfg : invariance_presets(q)) {
    const ConformalCheck chk = conformal_invariance_check(cfg, preset_conformal_factor(cfg), spec);
    out.push_back({cfg.name, chk.e_original, chk.e_conformal, chk.relative_deviation});
  }
  return out;
}

RicPair conformal_ric_crosscheck(const Profile& alpha, const Profile& rho, int q, double r) {
  const int m = q + 1;
  const Jet a = alpha.jet(r);
  const Jet p = rho.jet(r);
  check_alpha(a.f, r);
  const double lap_rho = -(p.d2f + q * (a.df / a.f) * p.df);
  const double grad_sq = p.df * p.df;
  const RicciEigenvalues ric = warped_ric(alpha, q, r);
  const double common = lap_rho - (m - 2) * grad_sq;
  RicPair out;
  // Hess rho eigenvalues for rho = rho(r): rho'' radially, (alpha'/alpha) rho'
  // on the fiber; (X rho) grad rho contributes only radially.
  out.via_formula.radial =
      std::exp(-2 * p.f) * (ric.radial - (m - 2) * (p.d2f - grad_sq) + common);
  out.via_formula.fiber =
      std::exp(-2 * p.f) * (ric.fiber - (m - 2) * (a.df / a.f) * p.df + common);
  RotSymConfig cfg;
  cfg.alpha = alpha;
  cfg.zeta = Profile::identity();
  cfg.q = q;
  const WarpedPoint w = conformal_point(cfg, rho, r);
  out.via_reparam = ric_of(w, q);
  return out;
}

}  // namespace cbh
