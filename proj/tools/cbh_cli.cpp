// Command-line front end: classification tables, residual evaluation,
// stability reports, energy curves and the numerical verification suites,
// all emitted as deterministic key/value documents (CSV for curves).
//
// Exit codes: 0 success, 2 usage/domain error, 3 numeric failure.

#include <CLI11.hpp>

#include "cbh/classify.hpp"
#include "cbh/families.hpp"
#include "cbh/ode.hpp"
#include "cbh/output.hpp"
#include "cbh/spectral.hpp"
#include "cbh/warped.hpp"

#include <cmath>
#include <iostream>

namespace {

using namespace cbh;

Profile parse_profile(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return Profile::by_name(text);
  std::vector<double> coeffs;
  std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    const auto comma = rest.find(',', pos);
    const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
    coeffs.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Profile::by_name(text.substr(0, colon), coeffs);
}

double default_tolerance() {
  if (const char* env = std::getenv("CBH_TOLERANCE")) {
    try {
      return std::stod(env);
    } catch (...) {
      throw std::domain_error("CBH_TOLERANCE is not a number");
    }
  }
  return 1e-10;
}

std::string format_sqrtval(const SqrtVal& v) {
  if (v.is_zero()) return "0 (exact)";
  const std::string sign = v.sign < 0 ? "-" : "";
  return sign + "sqrt(" + format_rational(v.square) + ") (" + format_double(v.value()) + ")";
}

std::string stream_kind_name(StreamEntry::Kind k) {
  switch (k) {
    case StreamEntry::Kind::NormalFunction: return "normal-function";
    case StreamEntry::Kind::GradientField: return "gradient-field";
    case StreamEntry::Kind::DivergenceFree: return "divergence-free";
    default: return "coupled-block";
  }
}

OutputNode solution_node(const ClassificationSolution& sol) {
  OutputNode n("solution");
  n.add("family", sol.family);
  for (const auto& [k, v] : sol.int_params) n.add(k, std::to_string(v));
  if (sol.exact_value) {
    n.add(sol.param_name, format_rational_full(*sol.exact_value));
  } else {
    n.add(sol.param_name, format_double(sol.interval->midpoint()));
    n.add("certified-error", format_double(to_double(sol.interval->width() / 2)));
    n.add("bracket", "[" + format_double(to_double(sol.interval->lo)) + ", " +
                         format_double(to_double(sol.interval->hi)) + "]");
  }
  n.add("kind", sol.kind);
  n.add("residual",
        sol.residual_exact_zero ? "0 (exact)" : format_double(sol.residual_abs));
  return n;
}

OutputNode cell_node(const ScanCell& cell) {
  OutputNode n("cell");
  for (const auto& [k, v] : cell.int_params) n.add(k, std::to_string(v));
  n.add("root-count", std::to_string(cell.root_count));
  n.add("existence", cell.existence ? "true" : "false");
  OutputNode cert("certificate");
  cert.add("method", cell.certificate.method);
  cert.add("degree", std::to_string(cell.certificate.degree));
  cert.add("scan", "(" + format_rational(cell.certificate.scan_lo) + ", " +
                       format_rational(cell.certificate.scan_hi) + ")");
  if (!cell.certificate.note.empty()) cert.add("note", cell.certificate.note);
  n.add(std::move(cert));
  return n;
}

void emit_classification(OutputDocument& doc, const ClassificationResult& res) {
  OutputNode head("result");
  head.add("family-template", res.family_template);
  head.add("scanned", res.scanned);
  head.add("solution-count", std::to_string(res.solutions.size()));
  doc.add(std::move(head));
  for (const auto& sol : res.solutions) doc.add(solution_node(sol));
  for (const auto& cell : res.cells) doc.add(cell_node(cell));
}

void emit_certificates(OutputDocument& doc, const std::string& family,
                       const std::vector<PositivityCertificate>& certs, int m_lo) {
  int m = m_lo;
  for (const auto& cert : certs) {
    OutputNode n("nonexistence");
    n.add("family", family);
    n.add("m", std::to_string(m++));
    n.add("certified", cert.certified ? "true" : "false");
    n.add("statement", cert.statement);
    doc.add(std::move(n));
  }
}

void emit_stability(OutputDocument& doc, const IndexNullityReport& rep) {
  OutputNode head("report");
  head.add("m", std::to_string(rep.m));
  head.add("r2", format_rational_full(rep.r2));
  head.add("variational", rep.variational ? "true" : "false");
  if (!rep.variational)
    head.add("note", "parameters are not a critical point; exploratory report");
  head.add("index", rep.index.str());
  head.add("nullity", rep.nullity.str());
  doc.add(std::move(head));
  for (const auto& e : rep.breakdown) {
    OutputNode n("stream");
    n.add("kind", stream_kind_name(e.kind));
    n.add("level", std::to_string(e.level));
    n.add("eigenvalue", format_rational_full(e.eigen_param));
    if (e.value) n.add("value", format_rational_full(*e.value));
    if (e.block) {
      OutputNode b("block");
      b.add("a", format_rational_full(e.block->a));
      b.add("b", format_rational_full(e.block->b));
      b.add("d2", format_rational_full(e.block->d_sq));
      b.add("trace", format_rational_full(e.block->trace));
      b.add("det", format_rational_full(e.block->det));
      n.add(std::move(b));
    }
    n.add("multiplicity", e.multiplicity.str());
    n.add("negative", e.negative.str());
    n.add("zero", e.zero.str());
    doc.add(std::move(n));
  }
  OutputNode t("truncation");
  t.add("method", rep.truncation.method);
  for (const auto& s : rep.truncation.streams) {
    OutputNode n("stream");
    n.add("kind", stream_kind_name(s.kind));
    n.add("first-certified-level", std::to_string(s.first_certified_level));
    n.add("eigenvalue", format_rational_full(s.eigen_param));
    n.add("statement", "all levels from here on are certified positive");
    t.add(std::move(n));
  }
  doc.add(std::move(t));
}

// ---- verify suites ---------------------------------------------------------

int run_verify_conformal(int m, double tol) {
  const int q = m - 1;
  OutputDocument doc;
  doc.command = "verify conformal";
  doc.params = {{"m", std::to_string(m)}};
  doc.mode = "float";
  doc.tolerance = format_double(tol);
  bool ok = true;
  const auto suite = run_invariance_suite(q);
  for (const auto& out : suite) {
    OutputNode n("configuration");
    n.add("name", out.name);
    n.add("energy", format_double(out.e_original));
    n.add("energy-conformal", format_double(out.e_conformal));
    n.add("relative-deviation", format_double(out.relative_deviation));
    const bool pass = m == 4 ? out.relative_deviation < tol : out.relative_deviation > 1e-3;
    ok = ok && pass;
    n.add("pass", pass ? "true" : "false");
    doc.add(std::move(n));
  }
  OutputNode s("summary");
  s.add("criterion", m == 4 ? "relative deviation below tolerance"
                            : "relative deviation above 1e-3 (no invariance off dimension 4)");
  s.add("pass", ok ? "true" : "false");
  doc.add(std::move(s));
  std::cout << doc.render();
  return ok ? 0 : 3;
}

int run_verify_ode(double tol) {
  OutputDocument doc;
  doc.command = "verify ode";
  doc.mode = "float";
  doc.tolerance = format_double(tol);
  bool ok = true;

  const std::vector<std::pair<std::string, Profile>> exact = {
      {"beta=zeta", Profile::identity()},
      {"beta=sin", Profile::sin_scaled(1)},
      {"beta=sinh", Profile::sinh_scaled(1)}};
  for (const auto& [name, beta] : exact) {
    double worst = 0;
    for (int i = 0; i <= 50; ++i) {
      const double z = 0.1 + 1.2 * i / 50.0;
      worst = std::max(worst, std::abs(beta_residual(beta, z)));
    }
    OutputNode n("profile-residual");
    n.add("profile", name);
    n.add("max-abs-residual", format_double(worst));
    const bool pass = worst < tol;
    ok = ok && pass;
    n.add("pass", pass ? "true" : "false");
    doc.add(std::move(n));
  }

  {
    const double b0 = 1.0, b1 = 0.3, b2 = -0.2;
    const double a = b0 * b0 * (1 - b1 * b1 + b0 * b2);
    const auto res = integrate_beta_equation(b0, b1, b2, 0.0, 2.0);
    double drift = 0;
    for (std::size_t i = 0; i < res.t.size(); ++i) {
      const double b = res.y[i][0], p = res.y[i][1], s = res.y[i][2];
      drift = std::max(drift, std::abs(b * b * (1 - p * p + b * s) - a));
    }
    OutputNode n("first-integral");
    n.add("complete", res.complete ? "true" : "false");
    n.add("value", format_double(a));
    n.add("max-drift", format_double(drift));
    const bool pass = res.complete && drift < 1e-8;
    ok = ok && pass;
    n.add("pass", pass ? "true" : "false");
    doc.add(std::move(n));
  }

  {
    const auto sol =
        solve_conformal_profile(Profile::sin_scaled(1), DomainModel::Sphere, 0.6, 0.4, 2.6);
    double worst = 0;
    for (int i = 0; i <= 200; ++i) {
      const double r = 0.4 + 2.2 * i / 200.0;
      const double dz = sol.ode->deriv_at(r)[0];
      worst = std::max(worst, std::abs(dz * std::sin(r) - std::sin(sol.zeta(r))));
    }
    OutputNode n("conformality");
    n.add("equation", "zeta' sin(r) = sin(zeta)");
    n.add("max-abs-defect", format_double(worst));
    const bool pass = worst < 1e-8;
    ok = ok && pass;
    n.add("pass", pass ? "true" : "false");
    doc.add(std::move(n));
  }

  OutputNode s("summary");
  s.add("pass", ok ? "true" : "false");
  doc.add(std::move(s));
  std::cout << doc.render();
  return ok ? 0 : 3;
}

int run_verify_crosscheck(double tol) {
  OutputDocument doc;
  doc.command = "verify crosscheck";
  doc.mode = "float";
  doc.tolerance = format_double(tol);
  bool ok = true;
  const std::vector<std::pair<std::string, Profile>> alphas = {
      {"sin", Profile::sin_scaled(1)},
      {"sinh", Profile::sinh_scaled(1)},
      {"id", Profile::identity()}};
  const std::vector<std::pair<std::string, Profile>> rhos = {
      {"cos", Profile::cos_sum({{0.2, 1.0}})},
      {"step", Profile::smooth_step(0.3, 0.2, 2.6)},
      {"const", Profile::constant(0.4)}};
  for (int q : {2, 3, 4}) {
    for (const auto& [aname, alpha] : alphas) {
      for (const auto& [rname, rho] : rhos) {
        double worst = 0;
        for (int i = 0; i <= 200; ++i) {
          const double r = 0.4 + 2.0 * i / 200.0;
          const auto sp = conformal_scal_crosscheck(alpha, rho, q, r);
          const auto rp = conformal_ric_crosscheck(alpha, rho, q, r);
          const double scale = 1 + std::abs(sp.via_formula);
          worst = std::max(worst, std::abs(sp.via_formula - sp.via_reparam) / scale);
          worst = std::max(worst,
                           std::abs(rp.via_formula.radial - rp.via_reparam.radial) / scale);
          worst = std::max(worst,
                           std::abs(rp.via_formula.fiber - rp.via_reparam.fiber) / scale);
        }
        OutputNode n("crosscheck");
        n.add("q", std::to_string(q));
        n.add("alpha", aname);
        n.add("rho", rname);
        n.add("max-relative-difference", format_double(worst));
        const bool pass = worst < 1e-9;
        ok = ok && pass;
        n.add("pass", pass ? "true" : "false");
        doc.add(std::move(n));
      }
    }
  }
  OutputNode s("summary");
  s.add("pass", ok ? "true" : "false");
  doc.add(std::move(s));
  std::cout << doc.render();
  return ok ? 0 : 3;
}

// ---- command wiring ---------------------------------------------------------

struct Args {
  int m = 0, m1 = 0, m2 = 0, k = 0, m_max = 0;
  int samples = 101;
  int equal_radius_cap = 30;
  int refine_bits = 48;
  double t_max = 0.99;
  std::string r2, r, r1sq, a;
  std::string family = "all";
  bool use_float = false;
  double tol = 1e-10;       // floating-mode zero tolerance
  double verify_tol = 1e-8; // conformal-invariance pass tolerance at m = 4
};

const std::string& require_param(const std::string& value, const char* what) {
  if (value.empty()) throw std::domain_error(std::string("missing required option ") + what);
  return value;
}

Rational refine_width(int bits) { return Rational(1, Int(1) << bits); }

void emit_residual(const std::string& command,
                   const std::vector<std::pair<std::string, std::string>>& params,
                   const HypersurfaceFamily& fam, bool use_float, double tol) {
  OutputDocument doc;
  doc.command = command;
  doc.params = params;
  const ResidualReport rep = use_float ? residual_fp(fam, tol) : residual(fam);
  doc.mode = rep.mode == ArithmeticMode::Exact ? "exact" : "float";
  if (rep.mode == ArithmeticMode::Floating) doc.tolerance = format_double(rep.tolerance);
  OutputNode n("residual");
  if (rep.mode == ArithmeticMode::Exact) {
    n.add("tension", format_sqrtval(rep.tension_exact));
    n.add("bitension", format_sqrtval(rep.bitension_exact));
    n.add("c-bitension", format_sqrtval(rep.c_bitension_exact));
  } else {
    n.add("tension", format_double(rep.tension_coeff));
    n.add("bitension", format_double(rep.bitension_coeff));
    n.add("c-bitension", format_double(rep.c_bitension_coeff));
  }
  n.add("c-biharmonic", rep.is_c_biharmonic ? "true" : "false");
  doc.add(std::move(n));
  std::cout << doc.render();
}

int run(int argc, char** argv) {
  CLI::App app{"c-biharmonic hypersurfaces: classification, stability, verification"};
  app.require_subcommand(1);
  Args args;
  args.tol = default_tolerance();
  if (std::getenv("CBH_TOLERANCE")) args.verify_tol = default_tolerance();

  // classify
  auto* classify = app.add_subcommand("classify", "classification tables");
  classify->require_subcommand(1);
  auto* cl_hs = classify->add_subcommand("hypersphere", "S^m(r) in S^{m+1}");
  cl_hs->add_option("--m-max", args.m_max, "largest dimension")->required();
  auto* cl_cl = classify->add_subcommand("clifford", "generalized Clifford tori");
  cl_cl->add_option("--m-max", args.m_max, "largest total dimension m1+m2");
  cl_cl->add_option("--m1", args.m1, "first factor dimension");
  cl_cl->add_option("--m2", args.m2, "second factor dimension");
  cl_cl->add_option("--equal-radius-cap", args.equal_radius_cap,
                    "cap for the equal-radius mixed scan");
  cl_cl->add_option("--refine-bits", args.refine_bits, "root interval width 2^-bits");
  auto* cl_hy = classify->add_subcommand("hyperbolic", "hypersurfaces of H^{m+1}");
  cl_hy->add_option("--family", args.family,
                    "equidistant|horosphere|geodesic-sphere|product|all");
  cl_hy->add_option("--m", args.m, "single dimension");
  cl_hy->add_option("--m-max", args.m_max, "largest dimension");
  cl_hy->add_option("--refine-bits", args.refine_bits, "root interval width 2^-bits");

  // residual
  auto* residual_cmd = app.add_subcommand("residual", "tension/bitension/c-bitension");
  residual_cmd->require_subcommand(1);
  std::map<std::string, CLI::App*> res_subs;
  for (const char* name : {"hypersphere", "clifford", "equidistant", "horosphere",
                           "geodesic-sphere", "product", "hyperplane", "euclidean-sphere",
                           "euclidean-cylinder"}) {
    auto* sub = residual_cmd->add_subcommand(name, "");
    sub->add_option("--m", args.m, "dimension");
    sub->add_option("--m1", args.m1, "first factor dimension");
    sub->add_option("--m2", args.m2, "second factor dimension");
    sub->add_option("--k", args.k, "sphere factor dimension");
    sub->add_option("--r", args.r, "radius (rational or decimal)");
    sub->add_option("--r2", args.r2, "squared radius");
    sub->add_option("--r1sq", args.r1sq, "squared first radius");
    sub->add_option("--a", args.a, "horosphere parameter");
    sub->add_flag("--float", args.use_float, "evaluate in floating point");
    sub->add_option("--tol", args.tol, "zero tolerance in floating mode");
    res_subs[name] = sub;
  }

  // stability
  auto* stability = app.add_subcommand("stability", "index and nullity reports");
  stability->require_subcommand(1);
  auto* st_eq = stability->add_subcommand("equator", "totally geodesic S^m in S^{m+1}");
  st_eq->add_option("--m", args.m, "dimension")->required();
  auto* st_hs = stability->add_subcommand("hypersphere", "small hypersphere S^m(r)");
  st_hs->add_option("--m", args.m, "dimension")->required();
  st_hs->add_option("--r2", args.r2, "squared radius (rational)")->required();

  // energy-curve
  auto* curve = app.add_subcommand("energy-curve", "h_m and h_m^c samples as CSV");
  curve->add_option("--m", args.m, "dimension")->required();
  curve->add_option("--samples", args.samples, "sample count");
  curve->add_option("--t-max", args.t_max, "sample range (-t_max, t_max)");

  // verify
  auto* verify = app.add_subcommand("verify", "numerical verification suites");
  verify->require_subcommand(1);
  auto* vf_conf = verify->add_subcommand("conformal", "conformal invariance of E_2^c");
  vf_conf->add_option("--m", args.m, "domain dimension")->default_val(4);
  vf_conf->add_option("--tol", args.verify_tol, "pass tolerance at m = 4");
  std::string opt_alpha, opt_beta, opt_zeta, opt_rho;
  double opt_rlo = 0, opt_rhi = 0;
  vf_conf->add_option("--alpha", opt_alpha, "warp profile, e.g. sin or poly:0,1,0.1");
  vf_conf->add_option("--beta", opt_beta, "target profile preset");
  vf_conf->add_option("--zeta", opt_zeta, "radial map preset");
  vf_conf->add_option("--rho", opt_rho, "conformal factor preset (default: smooth step)");
  vf_conf->add_option("--r-lo", opt_rlo, "interval start for a custom configuration");
  vf_conf->add_option("--r-hi", opt_rhi, "interval end for a custom configuration");
  auto* vf_ode = verify->add_subcommand("ode", "profile equation and conformal profiles");
  vf_ode->add_option("--tol", args.tol, "residual tolerance");
  auto* vf_cross = verify->add_subcommand("crosscheck", "conformal curvature formulas");
  vf_cross->add_option("--tol", args.tol, "agreement tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Rational width = refine_width(args.refine_bits);

  if (cl_hs->parsed()) {
    OutputDocument doc;
    doc.command = "classify hypersphere";
    doc.params = {{"m-max", std::to_string(args.m_max)}};
    emit_classification(doc, classify_hyperspheres(args.m_max, width));
    std::cout << doc.render();
    return 0;
  }
  if (cl_cl->parsed()) {
    OutputDocument doc;
    doc.command = "classify clifford";
    if (args.m1 > 0 && args.m2 > 0) {
      doc.params = {{"m1", std::to_string(args.m1)}, {"m2", std::to_string(args.m2)}};
      ClassificationResult res;
      res.family_template = "S^{m1}(r1) x S^{m2}(r2) in S^{m+1}";
      res.scanned = "single pair, r1^2 in (0,1)";
      const auto cond = clifford_condition(args.m1, args.m2);
      for (const auto& root : isolate_roots(cond, 0, 1, width)) {
        ClassificationSolution sol;
        sol.family = "clifford";
        sol.int_params = {{"m1", args.m1}, {"m2", args.m2}};
        sol.param_name = "r1sq";
        if (root.exact)
          sol.exact_value = root.lo;
        else
          sol.interval = root;
        sol.kind = (args.m1 == args.m2 && root.exact && root.lo == Rational(1, 2))
                       ? "minimal"
                       : "proper";
        const auto rep = residual(CliffordTorus{args.m1, args.m2, sol.value_or_mid()});
        sol.residual_abs = std::abs(rep.c_bitension_coeff);
        sol.residual_exact_zero = rep.is_c_biharmonic;
        res.solutions.push_back(std::move(sol));
      }
      emit_classification(doc, res);
      OutputNode poly("condition");
      poly.add("cubic", "coefficients ascending in T = r1^2");
      std::string cs;
      for (const auto& c : cond.coeffs) cs += (cs.empty() ? "" : " ") + c.str();
      poly.add("coefficients", cs);
      doc.add(std::move(poly));
    } else {
      if (args.m_max < 2) throw std::domain_error("classify clifford needs --m-max or --m1/--m2");
      doc.params = {{"m-max", std::to_string(args.m_max)},
                    {"equal-radius-cap", std::to_string(args.equal_radius_cap)}};
      emit_classification(doc, classify_clifford(args.m_max, width));
      for (const auto& [m1, m2] : clifford_equal_radius_scan(args.equal_radius_cap)) {
        OutputNode n("equal-radius-solution");
        n.add("m1", std::to_string(m1));
        n.add("m2", std::to_string(m2));
        n.add("r1sq", "1/2 (0.5)");
        doc.add(std::move(n));
      }
      OutputNode note("equal-radius-scan");
      note.add("cap", std::to_string(args.equal_radius_cap));
      note.add("note", "exhaustive up to the cap; beyond it unverified");
      doc.add(std::move(note));
    }
    std::cout << doc.render();
    return 0;
  }
  if (cl_hy->parsed()) {
    OutputDocument doc;
    doc.command = "classify hyperbolic";
    const int m_max = args.m_max > 0 ? args.m_max : args.m;
    if (m_max < 2) throw std::domain_error("classify hyperbolic needs --m or --m-max >= 2");
    if (args.family != "equidistant" && args.family != "horosphere" &&
        args.family != "geodesic-sphere" && args.family != "product" && args.family != "all")
      throw std::domain_error("unknown hyperbolic family '" + args.family + "'");
    doc.params = {{"family", args.family}, {"m-max", std::to_string(m_max)}};
    const auto restrict_m = [&](ClassificationResult res) {
      if (args.m > 0) {
        ClassificationResult out = res;
        out.solutions.clear();
        out.cells.clear();
        for (auto& s : res.solutions)
          if (s.int_params[0].second == args.m) out.solutions.push_back(s);
        for (auto& c : res.cells)
          if (c.int_params[0].second == args.m) out.cells.push_back(c);
        return out;
      }
      return res;
    };
    if (args.family == "equidistant" || args.family == "all")
      emit_classification(doc, restrict_m(classify_equidistant(m_max)));
    if (args.family == "horosphere" || args.family == "all")
      emit_certificates(doc, "horosphere", horosphere_scan(m_max), 2);
    if (args.family == "geodesic-sphere" || args.family == "all")
      emit_certificates(doc, "geodesic-sphere", geodesic_sphere_scan(m_max), 2);
    if (args.family == "product" || args.family == "all")
      emit_classification(doc, restrict_m(classify_hyp_product(m_max, width)));
    std::cout << doc.render();
    return 0;
  }

  for (auto& [name, sub] : res_subs) {
    if (!sub->parsed()) continue;
    std::vector<std::pair<std::string, std::string>> params;
    const auto rat = [&](const std::string& text) { return parse_rational(text); };
    HypersurfaceFamily fam = EuclideanHyperplane{1};
    if (name == "hypersphere") {
      if (args.r2.empty()) require_param(args.r, "--r2 or --r");
      const Rational r2 = !args.r2.empty() ? rat(args.r2) : rat(args.r) * rat(args.r);
      params = {{"m", std::to_string(args.m)},
                {!args.r2.empty() ? "r2" : "r", !args.r2.empty() ? args.r2 : args.r}};
      fam = SphereInSphere{args.m, r2};
    } else if (name == "clifford") {
      if (args.r1sq.empty()) require_param(args.r, "--r1sq or --r");
      const Rational t = !args.r1sq.empty() ? rat(args.r1sq) : rat(args.r) * rat(args.r);
      params = {{"m1", std::to_string(args.m1)},
                {"m2", std::to_string(args.m2)},
                {!args.r1sq.empty() ? "r1sq" : "r1", !args.r1sq.empty() ? args.r1sq : args.r}};
      fam = CliffordTorus{args.m1, args.m2, t};
    } else if (name == "equidistant") {
      params = {{"m", std::to_string(args.m)}, {"r", require_param(args.r, "--r")}};
      fam = HypEquidistant{args.m, rat(args.r)};
    } else if (name == "horosphere") {
      const std::string a = args.a.empty() ? "1" : args.a;
      params = {{"m", std::to_string(args.m)}, {"a", a}};
      fam = Horosphere{args.m, rat(a)};
    } else if (name == "geodesic-sphere") {
      params = {{"m", std::to_string(args.m)}, {"r", require_param(args.r, "--r")}};
      fam = HypGeodesicSphere{args.m, rat(args.r)};
    } else if (name == "product") {
      params = {{"m", std::to_string(args.m)},
                {"k", std::to_string(args.k)},
                {"r", require_param(args.r, "--r")}};
      fam = HypProduct{args.m, args.k, rat(args.r)};
    } else if (name == "hyperplane") {
      params = {{"m", std::to_string(args.m)}};
      fam = EuclideanHyperplane{args.m};
    } else if (name == "euclidean-sphere") {
      params = {{"m", std::to_string(args.m)}, {"r", require_param(args.r, "--r")}};
      fam = EuclideanSphere{args.m, rat(args.r)};
    } else {
      params = {{"m", std::to_string(args.m)},
                {"k", std::to_string(args.k)},
                {"r", require_param(args.r, "--r")}};
      fam = EuclideanCylinder{args.m, args.k, rat(args.r)};
    }
    emit_residual("residual " + name, params, fam, args.use_float, args.tol);
    return 0;
  }

  if (st_eq->parsed() || st_hs->parsed()) {
    OutputDocument doc;
    IndexNullityReport rep;
    if (st_eq->parsed()) {
      doc.command = "stability equator";
      doc.params = {{"m", std::to_string(args.m)}};
      rep = index_nullity_equator(args.m);
    } else {
      doc.command = "stability hypersphere";
      doc.params = {{"m", std::to_string(args.m)}, {"r2", args.r2}};
      rep = index_nullity_hypersphere(args.m, parse_rational(args.r2));
    }
    emit_stability(doc, rep);
    std::cout << doc.render();
    return 0;
  }

  if (curve->parsed()) {
    if (args.samples < 2) throw std::domain_error("energy-curve needs --samples >= 2");
    if (!(args.t_max > 0 && args.t_max < 1))
      throw std::domain_error("energy-curve needs 0 < t-max < 1");
    std::cout << "t,h,h_c\n";
    for (int i = 0; i < args.samples; ++i) {
      const double t = -args.t_max + 2 * args.t_max * i / (args.samples - 1);
      const auto p = energy_curve(args.m, t);
      std::cout << format_double(t) << "," << format_double(p.h) << ","
                << format_double(p.h_c) << "\n";
    }
    return 0;
  }

  if (vf_conf->parsed()) {
    if (!opt_alpha.empty() || !opt_beta.empty() || !opt_zeta.empty()) {
      if (opt_alpha.empty() || opt_beta.empty() || opt_zeta.empty() || !(opt_rlo < opt_rhi))
        throw std::domain_error(
            "custom configuration needs --alpha, --beta, --zeta and --r-lo < --r-hi");
      RotSymConfig cfg{"custom", parse_profile(opt_alpha), parse_profile(opt_beta),
                       parse_profile(opt_zeta), opt_rlo, opt_rhi, args.m - 1};
      const Profile rho = opt_rho.empty() ? preset_conformal_factor(cfg) : parse_profile(opt_rho);
      const auto chk = conformal_invariance_check(cfg, rho);
      OutputDocument doc;
      doc.command = "verify conformal";
      doc.params = {{"m", std::to_string(args.m)}, {"alpha", opt_alpha},
                    {"beta", opt_beta},           {"zeta", opt_zeta},
                    {"rho", opt_rho.empty() ? "smoothstep" : opt_rho}};
      doc.mode = "float";
      doc.tolerance = format_double(args.verify_tol);
      OutputNode n("configuration");
      n.add("name", "custom");
      n.add("energy", format_double(chk.e_original));
      n.add("energy-conformal", format_double(chk.e_conformal));
      n.add("relative-deviation", format_double(chk.relative_deviation));
      const bool pass =
          args.m == 4 ? chk.relative_deviation < args.verify_tol : chk.relative_deviation > 1e-3;
      n.add("pass", pass ? "true" : "false");
      doc.add(std::move(n));
      std::cout << doc.render();
      return pass ? 0 : 3;
    }
    return run_verify_conformal(args.m, args.verify_tol);
  }
  if (vf_ode->parsed()) return run_verify_ode(args.tol == 1e-10 ? default_tolerance() : args.tol);
  if (vf_cross->parsed()) return run_verify_crosscheck(args.tol);

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cbh::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
