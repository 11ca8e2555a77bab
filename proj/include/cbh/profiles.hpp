#pragma once

// Smooth scalar profiles with analytic derivatives up to third order.
// Warp factors, target profiles, radial maps and conformal factors are all
// Profiles; the presets cover every closed form used by the verification
// suites, and polynomial coefficient lists cover custom input.

#include <functional>
#include <string>
#include <vector>

namespace cbh {

struct Jet {
  double f = 0, df = 0, d2f = 0, d3f = 0;
};

class Profile {
 public:
  Profile() = default;
  Profile(std::string name, std::function<Jet(double)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}

  bool valid() const { return static_cast<bool>(fn_); }
  const std::string& name() const { return name_; }

  Jet jet(double x) const { return fn_(x); }
  double operator()(double x) const { return fn_(x).f; }
  double deriv(double x) const { return fn_(x).df; }

  static Profile zero();
  static Profile constant(double c);
  static Profile identity();                 // x
  static Profile linear(double slope);       // slope * x
  static Profile sin_scaled(double d = 1);   // sin(d x) / d
  static Profile sinh_scaled(double d = 1);  // sinh(d x) / d
  static Profile polynomial(std::vector<double> coeffs);  // ascending degree
  static Profile cos_sum(std::vector<std::pair<double, double>> amp_freq);
  // amp * smootherstep((x-lo)/(hi-lo)); first and second derivatives vanish
  // at both endpoints, so conformal factors built from it contribute no
  // boundary terms on [lo, hi].
  static Profile smooth_step(double amp, double lo, double hi);
  static Profile tan_half(double c = 1);        // c tan(x/2)
  static Profile two_artanh(double c);          // 2 artanh(c x)
  static Profile two_arctan_tan(double c);      // 2 arctan(c tan(x/2))

  // Presets addressable by name: "sin" [d], "sinh" [d], "id", "const" c,
  // "poly" c0 c1 ..., "cos" amp freq [amp freq ...].
  static Profile by_name(const std::string& name, const std::vector<double>& coeffs = {});

 private:
  std::string name_;
  std::function<Jet(double)> fn_;
};

}  // namespace cbh
