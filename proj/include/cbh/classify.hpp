#pragma once

// Exact polynomial c-biharmonicity conditions for each family, certified
// root isolation, and the complete classification scans.

#include "cbh/families.hpp"
#include "cbh/roots.hpp"
#include "cbh/sweep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cbh {

// Condition polynomials (integer coefficients, ascending degree).
// Hypersphere in S^{m+1}, variable x = r^2:  6m x - (2m^2 - 5m + 6).
ExactPolynomial hypersphere_condition(int m);
// Generalized Clifford torus, cubic in T = r1^2 (denominators cleared by 3).
ExactPolynomial clifford_condition(int m1, int m2);
// Equidistant hypersurface of H^{m+1}, variable x = r^2: 6m x - (2m^2 - 11m + 6).
ExactPolynomial equidistant_condition(int m);
// S^k(r) x H^{m-k} family, cubic in s = r^2 (denominators cleared by 3).
ExactPolynomial product_condition(int m, int k);

// Nonexistence certificate: the residual cofactor rewritten so that every
// coefficient is positive, which makes nonvanishing on the open parameter
// domain a finite integer check rather than a sampling claim.
struct PositivityCertificate {
  bool certified = false;
  std::string statement;
  std::vector<Int> coeffs;  // all > 0 when certified (variable: r^2)
};
PositivityCertificate horosphere_nonexistence(int m);
PositivityCertificate geodesic_sphere_nonexistence(int m);

// ---- classification results -------------------------------------------------

struct ClassificationSolution {
  std::string family;  // "hypersphere" | "clifford" | "equidistant" | "hyperbolic-product"
  std::vector<std::pair<std::string, int>> int_params;
  std::string param_name;  // squared-parameter name: "r2" or "r1sq"
  std::optional<Rational> exact_value;
  std::optional<RootInterval> interval;  // when the root is irrational
  std::string kind;                      // "totally-geodesic" | "minimal" | "proper"
  double residual_abs = 0;               // |tau_2^c| substituted back
  bool residual_exact_zero = false;

  Rational value_or_mid() const {
    return exact_value ? *exact_value : interval->midpoint_exact();
  }
};

struct CompletenessCertificate {
  std::string method;  // "linear-root" | "sturm" | "positive-coefficients"
  int degree = 0;
  Rational scan_lo = 0, scan_hi = 0;
  int root_count = 0;
  std::string note;
};

struct ScanCell {
  std::vector<std::pair<std::string, int>> int_params;
  int root_count = 0;
  bool existence = false;
  CompletenessCertificate certificate;
};

struct ClassificationResult {
  std::string family_template;
  std::string scanned;
  std::vector<ClassificationSolution> solutions;
  std::vector<ScanCell> cells;
};

// Default isolation width 2^-48, far below every acceptance tolerance.
Rational default_refine_width();

// S^m(r) in S^{m+1}: totally geodesic branch plus the small-sphere branch
// when its squared radius lies in (0,1); certified nonexistence otherwise.
ClassificationResult classify_hyperspheres(int m_max,
                                           const Rational& refine_width = default_refine_width());

// All unordered pairs m1 <= m2 with m1 + m2 <= m_max: full root list of the
// Clifford cubic in (0,1), plus existence flags backed by the sign anchors.
ClassificationResult classify_clifford(int m_max,
                                       const Rational& refine_width = default_refine_width(),
                                       bool parallel = parallel_enabled());

// Equal-radius mixed tori r1 = r2 = 1/sqrt(2): pairs m1 < m2 with
// m1 + m2 <= cap whose condition vanishes exactly at T = 1/2. Exhaustiveness
// beyond the cap is not claimed.
std::vector<std::pair<int, int>> clifford_equal_radius_scan(int cap = 30,
                                                            bool parallel = parallel_enabled());

// Equidistant hypersurfaces of H^{m+1} for m = 2..m_max.
ClassificationResult classify_equidistant(int m_max);

// Horosphere / geodesic-sphere nonexistence certificates for m = 2..m_max.
std::vector<PositivityCertificate> horosphere_scan(int m_max);
std::vector<PositivityCertificate> geodesic_sphere_scan(int m_max);

// S^k(r) x H^{m-k} for m = 2..m_max, k = 1..m-1: complete positive-root
// isolation of the cubic in s = r^2.
ClassificationResult classify_hyp_product(int m_max,
                                          const Rational& refine_width = default_refine_width(),
                                          bool parallel = parallel_enabled());

}  // namespace cbh
