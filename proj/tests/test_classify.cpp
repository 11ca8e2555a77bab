#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cbh/classify.hpp"

#include <cmath>
#include <map>
#include <random>

using namespace cbh;

namespace {

std::vector<ClassificationSolution> proper_solutions(const ClassificationResult& res) {
  std::vector<ClassificationSolution> out;
  for (const auto& s : res.solutions)
    if (s.kind != "totally-geodesic") out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("hypersphere condition") {
  CHECK(hypersphere_condition(2).eval(Rational(1, 3)) == 0);
  CHECK(hypersphere_condition(1).eval(Rational(1, 2)) == 0);
  CHECK(hypersphere_cbih_r2(5) == Rational(31, 30));  // > 1, rejected
  CHECK_FALSE(radius_validity(5, Rational(1), Rational(1)));
}

TEST_CASE("clifford condition coefficients match the cubic") {
  CHECK(clifford_condition(1, 2) == ExactPolynomial::from_ints({-3, 20, -63, 54}));
  CHECK(clifford_condition(1, 3).primitive_part() ==
        ExactPolynomial::from_ints({-1, 6, -28, 32}));
  // equal dimensions: T = 1/2 is always a root
  for (int m1 : {1, 2, 3, 5, 8}) CHECK(clifford_condition(m1, m1).eval(Rational(1, 2)) == 0);
}

TEST_CASE("clifford cubic equals -3 x the residual cofactor") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> md(1, 9), num(1, 19);
  for (int i = 0; i < 200; ++i) {
    const int m1 = md(rng), m2 = md(rng);
    const Rational T(num(rng), 20);
    const auto rep = residual(CliffordTorus{m1, m2, T});
    CHECK(clifford_condition(m1, m2).eval(T) == -3 * rep.c_bitension_cof);
  }
}

TEST_CASE("clifford swap symmetry: zeta_{m2,m1}(1-T) = -zeta_{m1,m2}(T)") {
  for (int m1 = 1; m1 <= 8; ++m1)
    for (int m2 = 1; m2 <= 8; ++m2) {
      const auto p = clifford_condition(m1, m2);
      const auto q = clifford_condition(m2, m1);
      for (int i = 0; i <= 3; ++i) {  // four points pin a cubic
        const Rational T(i, 7);
        CHECK(q.eval(1 - T) == -p.eval(T));
      }
    }
}

TEST_CASE("clifford sign anchors") {
  for (int m1 = 1; m1 <= 12; ++m1)
    for (int m2 = 1; m2 <= 12; ++m2) {
      const auto p = clifford_condition(m1, m2);
      CHECK(p.eval(Rational(0)) < 0);
      CHECK(p.eval(Rational(1)) > 0);
    }
}

TEST_CASE("hypersphere classification matches the theorem") {
  const auto res = classify_hyperspheres(12);
  const auto proper = proper_solutions(res);
  REQUIRE(proper.size() == 4);
  const std::map<int, Rational> expected = {
      {1, Rational(1, 2)}, {2, Rational(1, 3)}, {3, Rational(1, 2)}, {4, Rational(3, 4)}};
  for (const auto& s : proper) {
    const int m = s.int_params[0].second;
    REQUIRE(expected.count(m) == 1);
    CHECK(*s.exact_value == expected.at(m));
    CHECK(s.residual_exact_zero);
  }
  // geodesic branch present for every m
  int geodesic = 0;
  for (const auto& s : res.solutions)
    if (s.kind == "totally-geodesic") {
      CHECK(*s.exact_value == Rational(1));
      ++geodesic;
    }
  CHECK(geodesic == 12);
}

TEST_CASE("clifford classification reproduces the low-dimensional theorem") {
  const auto res = classify_clifford(4);
  std::map<std::pair<int, int>, std::vector<ClassificationSolution>> by_pair;
  for (const auto& s : res.solutions)
    by_pair[{s.int_params[0].second, s.int_params[1].second}].push_back(s);

  // m = 2: only the minimal torus
  REQUIRE(by_pair[{1, 1}].size() == 1);
  CHECK(*by_pair[{1, 1}][0].exact_value == Rational(1, 2));
  CHECK(by_pair[{1, 1}][0].kind == "minimal");

  // m = 3: unique root of 54T^3-63T^2+20T-3 and T != 1/2
  REQUIRE(by_pair[{1, 2}].size() == 1);
  {
    const auto& s = by_pair[{1, 2}][0];
    REQUIRE(s.interval.has_value());
    CHECK(s.interval->width() < Rational(1, Int(1) << 40));
    CHECK(s.residual_abs < 1e-10);
    CHECK(s.value_or_mid() != Rational(1, 2));
  }

  // m = 4, (1,3): unique root of 32T^3-28T^2+6T-1
  REQUIRE(by_pair[{1, 3}].size() == 1);
  CHECK(by_pair[{1, 3}][0].residual_abs < 1e-10);

  // m = 4, (2,2): {1/2, (1-1/sqrt3)/2, (1+1/sqrt3)/2}
  REQUIRE(by_pair[{2, 2}].size() == 3);
  {
    const auto& v = by_pair[{2, 2}];
    const double lo = (1 - 1 / std::sqrt(3.0)) / 2;
    const double hi = (1 + 1 / std::sqrt(3.0)) / 2;
    CHECK(std::abs(to_double(v[0].value_or_mid()) - lo) < 1e-12);
    CHECK(v[1].exact_value.has_value());
    CHECK(*v[1].exact_value == Rational(1, 2));
    CHECK(std::abs(to_double(v[2].value_or_mid()) - hi) < 1e-12);
  }

  // every scanned pair admits at least one solution
  for (const auto& cell : res.cells) CHECK(cell.existence);
}

TEST_CASE("equal-radius mixed tori") {
  const auto found = clifford_equal_radius_scan(30);
  REQUIRE(found.size() == 2);
  CHECK(found[0] == std::pair<int, int>{1, 4});
  CHECK(found[1] == std::pair<int, int>{3, 4});
}

TEST_CASE("uniqueness for m1 = 1") {
  for (int m2 = 1; m2 <= 50; ++m2)
    CHECK(count_roots_open(clifford_condition(1, m2), 0, 1) == 1);
}

TEST_CASE("equidistant classification") {
  const auto res = classify_equidistant(10);
  const auto proper = proper_solutions(res);
  REQUIRE(proper.size() == 6);  // m = 5..10
  for (const auto& s : proper) {
    const int m = s.int_params[0].second;
    CHECK(m >= 5);
    CHECK(*s.exact_value == Rational(2 * Int(m) * m - 11 * m + 6, 6 * Int(m)));
    CHECK(s.residual_exact_zero);
  }
  CHECK(proper[1].int_params[0].second == 6);
  CHECK(*proper[1].exact_value == Rational(1, 3));
}

TEST_CASE("horosphere and geodesic sphere nonexistence certificates") {
  for (const auto& cert : horosphere_scan(20)) CHECK(cert.certified);
  for (const auto& cert : geodesic_sphere_scan(20)) CHECK(cert.certified);
}

TEST_CASE("hyperbolic product family") {
  const auto res = classify_hyp_product(10);
  std::map<std::pair<int, int>, int> counts;
  for (const auto& cell : res.cells)
    counts[{cell.int_params[0].second, cell.int_params[1].second}] = cell.root_count;

  for (int m = 2; m <= 7; ++m)
    for (int k = 1; k <= m - 1; ++k) CHECK(counts[{m, k}] == 0);
  CHECK(counts[{8, 1}] == 2);

  // m = 8, k = 1 roots lie in (0, 1/2), i.e. r < 1/sqrt(2)
  for (const auto& s : res.solutions)
    if (s.int_params[0].second == 8 && s.int_params[1].second == 1) {
      CHECK(s.value_or_mid() > 0);
      CHECK(s.value_or_mid() < Rational(1, 2));
      CHECK(s.residual_abs < 1e-10);
    }

  for (int m = 9; m <= 20; ++m)
    CHECK(count_roots_open(product_condition(m, 1), 0, Rational(1, 2)) >= 1);
}

TEST_CASE("serial and parallel classification sweeps agree") {
  const auto a = classify_clifford(10, default_refine_width(), false);
  const auto b = classify_clifford(10, default_refine_width(), true);
  REQUIRE(a.solutions.size() == b.solutions.size());
  for (std::size_t i = 0; i < a.solutions.size(); ++i) {
    CHECK(a.solutions[i].value_or_mid() == b.solutions[i].value_or_mid());
    CHECK(a.solutions[i].kind == b.solutions[i].kind);
  }
}
