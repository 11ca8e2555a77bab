#include "cbh/profiles.hpp"

#include <cmath>
#include <stdexcept>

namespace cbh {

Profile Profile::zero() {
  return {"0", [](double) { return Jet{}; }};
}

Profile Profile::constant(double c) {
  return {"const", [c](double) { return Jet{c, 0, 0, 0}; }};
}

Profile Profile::identity() {
  return {"id", [](double x) { return Jet{x, 1, 0, 0}; }};
}

Profile Profile::linear(double slope) {
  return {"linear", [slope](double x) { return Jet{slope * x, slope, 0, 0}; }};
}

Profile Profile::sin_scaled(double d) {
  return {"sin", [d](double x) {
            const double s = std::sin(d * x), c = std::cos(d * x);
            return Jet{s / d, c, -d * s, -d * d * c};
          }};
}

Profile Profile::sinh_scaled(double d) {
  return {"sinh", [d](double x) {
            const double s = std::sinh(d * x), c = std::cosh(d * x);
            return Jet{s / d, c, d * s, d * d * c};
          }};
}

Profile Profile::polynomial(std::vector<double> coeffs) {
  return {"poly", [c = std::move(coeffs)](double x) {
            Jet j;
            for (auto it = c.rbegin(); it != c.rend(); ++it) {
              j.d3f = j.d3f * x + 3 * j.d2f;
              j.d2f = j.d2f * x + 2 * j.df;
              j.df = j.df * x + j.f;
              j.f = j.f * x + *it;
            }
            return j;
          }};
}

Profile Profile::cos_sum(std::vector<std::pair<double, double>> amp_freq) {
  return {"cos", [terms = std::move(amp_freq)](double x) {
            Jet j;
            for (const auto& [a, w] : terms) {
              const double c = std::cos(w * x), s = std::sin(w * x);
              j.f += a * c;
              j.df += -a * w * s;
              j.d2f += -a * w * w * c;
              j.d3f += a * w * w * w * s;
            }
            return j;
          }};
}

Profile Profile::smooth_step(double amp, double lo, double hi) {
  const double L = hi - lo;
  return {"smoothstep", [amp, lo, hi, L](double x) {
            if (x <= lo) return Jet{0, 0, 0, 0};
            if (x >= hi) return Jet{amp, 0, 0, 0};
            const double s = (x - lo) / L;
            const double w = ((6 * s - 15) * s + 10) * s * s * s;
            const double dw = ((30 * s - 60) * s + 30) * s * s;
            const double d2w = ((120 * s - 180) * s + 60) * s;
            const double d3w = (360 * s - 360) * s + 60;
            return Jet{amp * w, amp * dw / L, amp * d2w / (L * L), amp * d3w / (L * L * L)};
          }};
}

Profile Profile::tan_half(double c) {
  return {"tan-half", [c](double x) {
            const double t = std::tan(x / 2);
            const double u = 1 + t * t;
            return Jet{c * t, c / 2 * u, c / 2 * t * u, c / 4 * u * (1 + 3 * t * t)};
          }};
}

Profile Profile::two_artanh(double c) {
  return {"two-artanh", [c](double x) {
            const double u = 1 - c * c * x * x;
            return Jet{2 * std::atanh(c * x), 2 * c / u, 4 * c * c * c * x / (u * u),
                       4 * c * c * c * (1 + 3 * c * c * x * x) / (u * u * u)};
          }};
}

Profile Profile::two_arctan_tan(double c) {
  return {"two-arctan-tan", [c](double x) {
            const double t = std::tan(x / 2);
            const double u = 1 + t * t;       // sec^2(x/2)
            const double v = 1 + c * c * t * t;
            Jet j;
            j.f = 2 * std::atan(c * t);
            j.df = c * u / v;
            j.d2f = c * t * u * (1 - c * c) / (v * v);
            j.d3f = c * (1 - c * c) * u / 2 *
                    ((1 + 3 * t * t) * v - 4 * c * c * t * t * u) / (v * v * v);
            return j;
          }};
}

Profile Profile::by_name(const std::string& name, const std::vector<double>& coeffs) {
  if (name == "sin") return sin_scaled(coeffs.empty() ? 1.0 : coeffs[0]);
  if (name == "sinh") return sinh_scaled(coeffs.empty() ? 1.0 : coeffs[0]);
  if (name == "id") return identity();
  if (name == "const") {
    if (coeffs.empty()) throw std::domain_error("profile 'const' needs one coefficient");
    return constant(coeffs[0]);
  }
  if (name == "poly") {
    if (coeffs.empty()) throw std::domain_error("profile 'poly' needs coefficients");
    return polynomial(coeffs);
  }
  if (name == "cos") {
    if (coeffs.size() < 2 || coeffs.size() % 2 != 0)
      throw std::domain_error("profile 'cos' needs amplitude/frequency pairs");
    std::vector<std::pair<double, double>> terms;
    for (std::size_t i = 0; i + 1 < coeffs.size(); i += 2)
      terms.emplace_back(coeffs[i], coeffs[i + 1]);
    return cos_sum(std::move(terms));
  }
  if (name == "linear") {
    if (coeffs.empty()) throw std::domain_error("profile 'linear' needs a slope");
    return linear(coeffs[0]);
  }
  if (name == "tan-half") return tan_half(coeffs.empty() ? 1.0 : coeffs[0]);
  if (name == "smoothstep") {
    if (coeffs.size() != 3)
      throw std::domain_error("profile 'smoothstep' needs amplitude, lo, hi");
    return smooth_step(coeffs[0], coeffs[1], coeffs[2]);
  }
  throw std::domain_error("unknown profile preset '" + name + "'");
}

}  // namespace cbh
