#include "cbh/classify.hpp"

#include <algorithm>

namespace cbh {

namespace {

Int I(long long v) { return Int(v); }

}  // namespace

Rational default_refine_width() {
  return Rational(1, Int(1) << 48);
}

ExactPolynomial hypersphere_condition(int m) {
  if (m < 1) throw std::domain_error("hypersphere_condition: m >= 1 required");
  return ExactPolynomial({-(2 * I(m) * m - 5 * m + 6), 6 * I(m)});
}

ExactPolynomial equidistant_condition(int m) {
  if (m < 2) throw std::domain_error("equidistant_condition: m >= 2 required");
  return ExactPolynomial({-(2 * I(m) * m - 11 * m + 6), 6 * I(m)});
}

ExactPolynomial clifford_condition(int m1, int m2) {
  if (m1 < 1 || m2 < 1) throw std::domain_error("clifford_condition: m1, m2 >= 1 required");
  const Int M1 = m1, M2 = m2;
  const Int a0 = -2 * M1 * M1 * M1 + 5 * M1 * M1 - 6 * M1;
  const Int a1 = 2 * M1 * (6 + 2 * M1 * M1 + M1 * (M2 - 2) - M2 * (M2 - 3));
  const Int a2 = -M1 * (M1 + 2) * (2 * M1 + 3) + 6 * M2 - 2 * M1 * M2 * (M1 + 9) +
                 (2 * M1 - 11) * M2 * M2 + 2 * M2 * M2 * M2;
  const Int a3 = 6 * (M1 + M2) * (M1 + M2);
  return ExactPolynomial({a0, a1, a2, a3}, 3);
}

ExactPolynomial product_condition(int m, int k) {
  if (m < 2 || k < 1 || k > m - 1)
    throw std::domain_error("product_condition: m >= 2 and 1 <= k <= m-1 required");
  const Int M = m, Kk = k;
  const Int c0 = 2 * Kk * Kk * Kk - 5 * Kk * Kk + 6 * Kk;
  const Int c1 = 2 * Kk * (Kk * (3 * M - 5) - M * M + 3 * M + 6);
  const Int c2 = -2 * M * M * M + 11 * M * M - 6 * M + 4 * Kk * (M * M - M + 3);
  const Int c3 = 6 * M * M;
  return ExactPolynomial({c0, c1, c2, c3}, 3);
}

PositivityCertificate horosphere_nonexistence(int m) {
  PositivityCertificate cert;
  cert.coeffs = {2 * I(m) * m};
  cert.certified = cert.coeffs[0] > 0;
  cert.statement = "residual cofactor 2m^2 = " + cert.coeffs[0].str() + " > 0 for all a > 0";
  return cert;
}

PositivityCertificate geodesic_sphere_nonexistence(int m) {
  // cofactor/m = 6m r^2 + (2m^2 - 5m + 6); both coefficients positive makes
  // the residual nonzero for every r > 0.
  PositivityCertificate cert;
  cert.coeffs = {2 * I(m) * m - 5 * m + 6, 6 * I(m)};
  cert.certified = std::all_of(cert.coeffs.begin(), cert.coeffs.end(),
                               [](const Int& c) { return c > 0; });
  cert.statement = "residual cofactor m (6m r^2 + " + cert.coeffs[0].str() +
                   ") has positive coefficients in r^2";
  return cert;
}

namespace {

ClassificationSolution back_substituted(ClassificationSolution sol, const ResidualReport& rep) {
  sol.residual_abs = std::abs(rep.c_bitension_coeff);
  sol.residual_exact_zero = rep.is_c_biharmonic;
  return sol;
}

ResidualReport residual_for_solution(const ClassificationSolution& sol) {
  const Rational v = sol.exact_value ? *sol.exact_value : sol.interval->midpoint_exact();
  if (sol.family == "hypersphere")
    return residual(SphereInSphere{sol.int_params[0].second, v});
  if (sol.family == "clifford")
    return residual(CliffordTorus{sol.int_params[0].second, sol.int_params[1].second, v});
  if (sol.family == "equidistant")
    return residual_equidistant_sq(sol.int_params[0].second, v);
  if (sol.family == "hyperbolic-product")
    return residual_hyp_product_sq(sol.int_params[0].second, sol.int_params[1].second, v);
  throw std::logic_error("unknown solution family " + sol.family);
}

}  // namespace

ClassificationResult classify_hyperspheres(int m_max, const Rational& refine_width) {
  if (m_max < 1) throw std::domain_error("classify_hyperspheres: m_max >= 1 required");
  (void)refine_width;  // the condition is linear; roots are exact
  ClassificationResult out;
  out.family_template = "S^m(r) in S^{m+1}";
  out.scanned = "m = 1.." + std::to_string(m_max) + ", r^2 in (0,1]";
  for (int m = 1; m <= m_max; ++m) {
    const ExactPolynomial cond = hypersphere_condition(m);
    ScanCell cell;
    cell.int_params = {{"m", m}};
    cell.certificate.method = "linear-root";
    cell.certificate.degree = 1;
    cell.certificate.scan_lo = 0;
    cell.certificate.scan_hi = 1;

    ClassificationSolution geo;
    geo.family = "hypersphere";
    geo.int_params = {{"m", m}};
    geo.param_name = "r2";
    geo.exact_value = Rational(1);
    geo.kind = "totally-geodesic";
    out.solutions.push_back(back_substituted(geo, residual(SphereInSphere{m, Rational(1)})));
    ++cell.root_count;

    const Rational r2 = hypersphere_cbih_r2(m);
    if (cond.eval(r2) != 0) throw std::logic_error("hypersphere condition root mismatch");
    if (r2 > 0 && r2 < 1) {
      ClassificationSolution sol;
      sol.family = "hypersphere";
      sol.int_params = {{"m", m}};
      sol.param_name = "r2";
      sol.exact_value = r2;
      sol.kind = "proper";
      out.solutions.push_back(back_substituted(sol, residual(SphereInSphere{m, r2})));
      ++cell.root_count;
      cell.certificate.note = "unique linear root r^2 = " + format_rational(r2) + " inside (0,1)";
    } else {
      cell.certificate.note =
          "linear root r^2 = " + format_rational(r2) + " outside (0,1): no non-geodesic solution";
    }
    cell.existence = true;  // the totally geodesic branch always exists
    cell.certificate.root_count = cell.root_count;
    out.cells.push_back(std::move(cell));
  }
  return out;
}

ClassificationResult classify_clifford(int m_max, const Rational& refine_width, bool parallel) {
  if (m_max < 2) throw std::domain_error("classify_clifford: m_max >= 2 required");
  ClassificationResult out;
  out.family_template = "S^{m1}(r1) x S^{m2}(r2) in S^{m+1}";
  out.scanned = "m1 <= m2, m1 + m2 <= " + std::to_string(m_max) + ", r1^2 in (0,1)";

  std::vector<std::pair<int, int>> pairs;
  for (int m1 = 1; m1 <= m_max / 2; ++m1)
    for (int m2 = m1; m1 + m2 <= m_max; ++m2) pairs.emplace_back(m1, m2);

  std::vector<ScanCell> cells(pairs.size());
  std::vector<std::vector<ClassificationSolution>> sols(pairs.size());
  parallel_for(
      pairs.size(),
      [&](std::size_t i) {
        const auto [m1, m2] = pairs[i];
        const ExactPolynomial cond = clifford_condition(m1, m2);
        const auto roots = isolate_roots(cond, 0, 1, refine_width);
        ScanCell cell;
        cell.int_params = {{"m1", m1}, {"m2", m2}};
        cell.root_count = static_cast<int>(roots.size());
        cell.existence = !roots.empty();
        cell.certificate.method = "sturm";
        cell.certificate.degree = cond.degree();
        cell.certificate.scan_lo = 0;
        cell.certificate.scan_hi = 1;
        cell.certificate.root_count = cell.root_count;
        cell.certificate.note = "sign anchors: p(0) = " + format_rational(cond.eval(Rational(0))) +
                                " < 0, p(1) = " + format_rational(cond.eval(Rational(1))) + " > 0";
        cells[i] = std::move(cell);
        for (const RootInterval& root : roots) {
          ClassificationSolution sol;
          sol.family = "clifford";
          sol.int_params = {{"m1", m1}, {"m2", m2}};
          sol.param_name = "r1sq";
          if (root.exact)
            sol.exact_value = root.lo;
          else
            sol.interval = root;
          sol.kind = (m1 == m2 && root.exact && root.lo == Rational(1, 2)) ? "minimal" : "proper";
          sols[i].push_back(back_substituted(sol, residual_for_solution(sol)));
        }
      },
      parallel);

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.cells.push_back(std::move(cells[i]));
    for (auto& s : sols[i]) out.solutions.push_back(std::move(s));
  }
  return out;
}

std::vector<std::pair<int, int>> clifford_equal_radius_scan(int cap, bool parallel) {
  if (cap < 3) throw std::domain_error("clifford_equal_radius_scan: cap >= 3 required");
  std::vector<std::pair<int, int>> pairs;
  for (int m1 = 1; m1 <= cap / 2; ++m1)
    for (int m2 = m1 + 1; m1 + m2 <= cap; ++m2) pairs.emplace_back(m1, m2);
  std::vector<char> hit(pairs.size(), 0);
  parallel_for(
      pairs.size(),
      [&](std::size_t i) {
        const auto [m1, m2] = pairs[i];
        hit[i] = clifford_condition(m1, m2).eval(Rational(1, 2)) == 0 ? 1 : 0;
      },
      parallel);
  std::vector<std::pair<int, int>> found;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (hit[i]) found.push_back(pairs[i]);
  return found;
}

ClassificationResult classify_equidistant(int m_max) {
  if (m_max < 2) throw std::domain_error("classify_equidistant: m_max >= 2 required");
  ClassificationResult out;
  out.family_template = "equidistant hypersurface {x^1 = r} in H^{m+1}";
  out.scanned = "m = 2.." + std::to_string(m_max) + ", r >= 0";
  for (int m = 2; m <= m_max; ++m) {
    const ExactPolynomial cond = equidistant_condition(m);
    ScanCell cell;
    cell.int_params = {{"m", m}};
    cell.certificate.method = "linear-root";
    cell.certificate.degree = 1;
    cell.certificate.scan_lo = 0;
    cell.certificate.scan_hi = 0;  // unbounded scan; linear condition

    ClassificationSolution geo;
    geo.family = "equidistant";
    geo.int_params = {{"m", m}};
    geo.param_name = "r2";
    geo.exact_value = Rational(0);
    geo.kind = "totally-geodesic";
    out.solutions.push_back(back_substituted(geo, residual_equidistant_sq(m, Rational(0))));
    ++cell.root_count;

    const Rational r2(2 * Int(m) * m - 11 * m + 6, 6 * Int(m));
    if (cond.eval(r2) != 0) throw std::logic_error("equidistant condition root mismatch");
    if (r2 > 0) {
      ClassificationSolution sol;
      sol.family = "equidistant";
      sol.int_params = {{"m", m}};
      sol.param_name = "r2";
      sol.exact_value = r2;
      sol.kind = "proper";
      out.solutions.push_back(back_substituted(sol, residual_equidistant_sq(m, r2)));
      ++cell.root_count;
      cell.certificate.note = "unique linear root r^2 = " + format_rational(r2) + " > 0";
    } else {
      cell.certificate.note = "linear root r^2 = " + format_rational(r2) +
                              " <= 0: totally geodesic solution only";
    }
    cell.existence = true;
    cell.certificate.root_count = cell.root_count;
    out.cells.push_back(std::move(cell));
  }
  return out;
}

std::vector<PositivityCertificate> horosphere_scan(int m_max) {
  std::vector<PositivityCertificate> out;
  for (int m = 2; m <= m_max; ++m) out.push_back(horosphere_nonexistence(m));
  return out;
}

std::vector<PositivityCertificate> geodesic_sphere_scan(int m_max) {
  std::vector<PositivityCertificate> out;
  for (int m = 2; m <= m_max; ++m) out.push_back(geodesic_sphere_nonexistence(m));
  return out;
}

ClassificationResult classify_hyp_product(int m_max, const Rational& refine_width, bool parallel) {
  if (m_max < 2) throw std::domain_error("classify_hyp_product: m_max >= 2 required");
  ClassificationResult out;
  out.family_template = "S^k(r) x H^{m-k} in H^{m+1}";
  out.scanned = "m = 2.." + std::to_string(m_max) + ", k = 1..m-1, r^2 in (0, inf)";

  std::vector<std::pair<int, int>> cells_mk;
  for (int m = 2; m <= m_max; ++m)
    for (int k = 1; k <= m - 1; ++k) cells_mk.emplace_back(m, k);

  std::vector<ScanCell> cells(cells_mk.size());
  std::vector<std::vector<ClassificationSolution>> sols(cells_mk.size());
  parallel_for(
      cells_mk.size(),
      [&](std::size_t i) {
        const auto [m, k] = cells_mk[i];
        const ExactPolynomial cond = product_condition(m, k);
        const Rational bound = positive_root_bound(to_rat(cond));
        const auto roots = isolate_roots(cond, 0, bound, refine_width);
        ScanCell cell;
        cell.int_params = {{"m", m}, {"k", k}};
        cell.root_count = static_cast<int>(roots.size());
        cell.existence = !roots.empty();
        cell.certificate.method = "sturm";
        cell.certificate.degree = cond.degree();
        cell.certificate.scan_lo = 0;
        cell.certificate.scan_hi = bound;
        cell.certificate.root_count = cell.root_count;
        cell.certificate.note =
            "all real roots lie below the Fujiwara bound " + format_rational(bound);
        cells[i] = std::move(cell);
        for (const RootInterval& root : roots) {
          ClassificationSolution sol;
          sol.family = "hyperbolic-product";
          sol.int_params = {{"m", m}, {"k", k}};
          sol.param_name = "r2";
          if (root.exact)
            sol.exact_value = root.lo;
          else
            sol.interval = root;
          sol.kind = "proper";
          sols[i].push_back(back_substituted(sol, residual_for_solution(sol)));
        }
      },
      parallel);

  for (std::size_t i = 0; i < cells_mk.size(); ++i) {
    out.cells.push_back(std::move(cells[i]));
    for (auto& s : sols[i]) out.solutions.push_back(std::move(s));
  }
  return out;
}

}  // namespace cbh
