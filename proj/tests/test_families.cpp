#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cbh/families.hpp"
#include "helpers.hpp"

#include <cmath>

using namespace cbh;

TEST_CASE("hypersphere invariants match the closed forms") {
  const auto d = geometric_data(SphereInSphere{2, Rational(1, 3)});
  CHECK(d.scal == Rational(6));
  REQUIRE(d.ric_eigenvalues.size() == 1);
  CHECK(d.ric_eigenvalues[0].first == Rational(3));
  CHECK(d.ric_eigenvalues[0].second == 2);
  CHECK(d.shape_norm_sq == Rational(4));
  // <A,Ric> = -m(m-1) sqrt(1-r^2)/r^3
  const double r = std::sqrt(1.0 / 3.0);
  CHECK(d.a_dot_ric() ==
        doctest::Approx(-2.0 * std::sqrt(1 - 1.0 / 3.0) / (r * r * r)).epsilon(1e-13));
  CHECK(d.f() == doctest::Approx(-std::sqrt(1 - 1.0 / 3.0) / r).epsilon(1e-13));
}

TEST_CASE("equator is totally geodesic") {
  const auto d = geometric_data(SphereInSphere{3, Rational(1)});
  CHECK(d.f() == 0);
  CHECK(d.shape_norm_sq == Rational(0));
  CHECK(d.scal == Rational(6));
}

TEST_CASE("equidistant invariants") {
  const auto d = geometric_data(HypEquidistant{5, Rational(1)});
  CHECK(d.scal == Rational(-10));
  CHECK(d.ric_eigenvalues[0].first == Rational(-2));
  CHECK(d.ric_eigenvalues[0].second == 5);
}

TEST_CASE("geometric data trace identities hold on random families") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto fam = testutil::random_family(rng);
    const auto d = geometric_data(fam);
    int total_mult = 0;
    Rational trace = 0;
    for (const auto& [eig, mult] : d.ric_eigenvalues) {
      total_mult += mult;
      trace += eig * mult;
    }
    CHECK(total_mult == d.m);
    CHECK(trace == d.scal);
    CHECK(d.radical_sq >= 0);
  }
}

TEST_CASE("tension and bitension match the displayed closed forms") {
  // hypersphere: tau = -m sqrt(1-r^2)/r, tau_2 = m^2 sqrt(1-r^2)(1-2r^2)/r^3
  const auto rep = residual(SphereInSphere{4, Rational(9, 16)});
  const double r = 0.75, s = std::sqrt(1 - r * r);
  CHECK(rep.tension_coeff == doctest::Approx(-4 * s / r).epsilon(1e-13));
  CHECK(rep.bitension_coeff ==
        doctest::Approx(16 * s * (1 - 2 * r * r) / (r * r * r)).epsilon(1e-13));
  // c-bitension: sqrt(1-r^2)(-6m r^2 + 2m^2 - 5m + 6) m / (3 r^3)
  CHECK(rep.c_bitension_coeff ==
        doctest::Approx(s * (-24 * r * r + 32 - 20 + 6) * 4 / (3 * r * r * r)).epsilon(1e-13));
}

TEST_CASE("hyperbolic closed forms") {
  // horosphere: tau = -m, tau_2 = tau_2^c = 2m^2, independent of a
  for (int m : {2, 5, 9}) {
    const auto rep = residual(Horosphere{m, Rational(3)});
    CHECK(rep.tension_coeff == doctest::Approx(-m));
    CHECK(rep.bitension_coeff == doctest::Approx(2.0 * m * m));
    CHECK(rep.c_bitension_coeff == doctest::Approx(2.0 * m * m));
    CHECK_FALSE(rep.is_c_biharmonic);
  }
  // equidistant display: m r (6 m r^2 - 2m^2 + 11m - 6) / (3 (1+r^2)^{3/2})
  {
    const int m = 6;
    const double r = 0.5;
    const auto rep = residual(HypEquidistant{m, Rational(1, 2)});
    const double expect =
        m * r * (6 * m * r * r - 2 * m * m + 11 * m - 6) / (3 * std::pow(1 + r * r, 1.5));
    CHECK(rep.c_bitension_coeff == doctest::Approx(expect).epsilon(1e-13));
  }
  // geodesic sphere display: m sqrt(1+r^2)(6 m r^2 + 2m^2 - 5m + 6) / (3 r^3)
  {
    const int m = 3;
    const double r = 2.0;
    const auto rep = residual(HypGeodesicSphere{m, Rational(2)});
    const double expect =
        m * std::sqrt(1 + r * r) * (6 * m * r * r + 2 * m * m - 5 * m + 6) / (3 * r * r * r);
    CHECK(rep.c_bitension_coeff == doctest::Approx(expect).epsilon(1e-13));
    CHECK_FALSE(rep.is_c_biharmonic);
  }
  // product display at (m,k,r) = (8,1,1/2)
  {
    const double r = 0.5, s = r * r;
    const auto rep = residual(HypProduct{8, 1, Rational(1, 2)});
    const double poly = 6 * 64 * s * s * s - 132 * s * s - 30 * s + 3;
    const double expect = poly / (3 * r * r * r * std::pow(1 + s, 1.5));
    CHECK(rep.c_bitension_coeff == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("totally geodesic families have all residual coefficients zero") {
  for (const auto& fam : {HypersurfaceFamily(SphereInSphere{5, Rational(1)}),
                          HypersurfaceFamily(HypEquidistant{4, Rational(0)}),
                          HypersurfaceFamily(EuclideanHyperplane{6})}) {
    const auto rep = residual(fam);
    CHECK(rep.tension_exact.is_zero());
    CHECK(rep.bitension_exact.is_zero());
    CHECK(rep.c_bitension_exact.is_zero());
    CHECK(rep.is_c_biharmonic);
  }
}

TEST_CASE("the four c-biharmonic hyperspheres and no others") {
  CHECK(residual(SphereInSphere{1, Rational(1, 2)}).is_c_biharmonic);
  CHECK(residual(SphereInSphere{2, Rational(1, 3)}).is_c_biharmonic);
  CHECK(residual(SphereInSphere{3, Rational(1, 2)}).is_c_biharmonic);
  CHECK(residual(SphereInSphere{4, Rational(3, 4)}).is_c_biharmonic);
  CHECK_FALSE(residual(SphereInSphere{2, Rational(1, 2)}).is_c_biharmonic);
  CHECK_FALSE(residual(SphereInSphere{5, Rational(9, 10)}).is_c_biharmonic);
}

TEST_CASE("cmc reduction equals the family closed form exactly") {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto fam = testutil::random_family(rng);
    const auto rep = residual(fam);
    const auto cmc = cmc_residual(geometric_data(fam));
    CHECK(rep.c_bitension_exact == cmc.exact);
  }
}

TEST_CASE("cmc reduction in floating mode agrees to 1e-12 relative") {
  std::mt19937 rng(12);
  for (int i = 0; i < 500; ++i) {
    const auto fam = testutil::random_family(rng);
    const auto rep = residual_fp(fam);
    const double cmc = cmc_residual_fp(geometric_data_fp(fam));
    const double scale = std::max({std::abs(cmc), std::abs(rep.c_bitension_coeff), 1.0});
    CHECK(std::abs(rep.c_bitension_coeff - cmc) <= 1e-12 * scale);
  }
}

TEST_CASE("cmc residual spot values") {
  CHECK(cmc_residual(geometric_data(SphereInSphere{4, Rational(3, 4)})).exact.is_zero());
  CHECK(cmc_residual(geometric_data(EuclideanHyperplane{7})).exact.is_zero());
  const auto horo = cmc_residual(geometric_data(Horosphere{2, Rational(1)}));
  CHECK(horo.value == doctest::Approx(8.0));  // matches the family residual 2m^2
}

TEST_CASE("product with k = 0 evaluates identically to the equidistant family") {
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Rational r = testutil::random_rational(rng, Rational(1, 20), Rational(4));
    std::uniform_int_distribution<int> m_dist(2, 10);
    const int m = m_dist(rng);
    const auto a = residual(HypProduct{m, 0, r});
    const auto b = residual(HypEquidistant{m, r});
    CHECK(a.tension_exact == b.tension_exact);
    CHECK(a.bitension_exact == b.bitension_exact);
    CHECK(a.c_bitension_exact == b.c_bitension_exact);
    const auto da = geometric_data(HypProduct{m, 0, r});
    const auto db = geometric_data(HypEquidistant{m, r});
    CHECK(da.shape_norm_sq == db.shape_norm_sq);
    CHECK(da.scal == db.scal);
    CHECK(SqrtVal::from_parts(da.f_cof, da.radical_sq) ==
          SqrtVal::from_parts(db.f_cof, db.radical_sq));
  }
}

TEST_CASE("euclidean spheres and cylinders are never c-biharmonic") {
  std::mt19937 rng(14);
  for (int i = 0; i < 60; ++i) {
    const Rational r = testutil::random_rational(rng, Rational(1, 20), Rational(5));
    std::uniform_int_distribution<int> m_dist(2, 10);
    const int m = m_dist(rng);
    CHECK_FALSE(residual(EuclideanSphere{m, r}).is_c_biharmonic);
    std::uniform_int_distribution<int> k_dist(1, m - 1);
    CHECK_FALSE(residual(EuclideanCylinder{m, k_dist(rng), r}).is_c_biharmonic);
  }
}

TEST_CASE("domain validation names the violated constraint") {
  CHECK_THROWS_WITH_AS(residual(SphereInSphere{2, Rational(3, 2)}),
                       "hypersphere: violated constraint 0 < r^2 <= 1", std::domain_error);
  CHECK_THROWS_AS(residual(CliffordTorus{0, 2, Rational(1, 2)}), std::domain_error);
  CHECK_THROWS_AS(residual(CliffordTorus{1, 2, Rational(1)}), std::domain_error);
  CHECK_THROWS_AS(residual(HypEquidistant{2, Rational(-1)}), std::domain_error);
  CHECK_THROWS_AS(residual(Horosphere{2, Rational(0)}), std::domain_error);
  CHECK_THROWS_AS(residual(HypProduct{3, 3, Rational(1)}), std::domain_error);
  CHECK_THROWS_AS(residual(EuclideanCylinder{3, 0, Rational(1)}), std::domain_error);
}

TEST_CASE("radius validity bound") {
  CHECK(radius_validity(4, Rational(1), Rational(1)));  // r^2 = 3/4 case scaled: any r with c=1, m=4
  CHECK(radius_validity(3, Rational(1), Rational(1, 7)));  // (m-1)(m-3) = 0
  CHECK_FALSE(radius_validity(5, Rational(1), Rational(1)));  // 16/15 > 1
  CHECK(radius_validity(5, 2.0, 1.0));
  CHECK_THROWS_AS(radius_validity(4, Rational(1), Rational(0)), std::domain_error);
}

TEST_CASE("sphere volumes") {
  CHECK(sphere_volume(1) == doctest::Approx(2 * M_PI).epsilon(1e-14));
  CHECK(sphere_volume(2) == doctest::Approx(4 * M_PI).epsilon(1e-14));
  CHECK(sphere_volume(3) == doctest::Approx(2 * M_PI * M_PI).epsilon(1e-14));
  CHECK(sphere_volume(4) == doctest::Approx(8 * M_PI * M_PI / 3).epsilon(1e-14));
}

TEST_CASE("energy curves") {
  // h(0) = 0 and h_c(0) = (1/3) m vol(S^m) (m-1)(m-3)
  for (int m = 1; m <= 10; ++m) {
    const auto p = energy_curve(m, 0.0);
    CHECK(p.h == 0);
    CHECK(p.h_c ==
          doctest::Approx(sphere_volume(m) * m * (m - 1) * (m - 3) / 3.0).epsilon(1e-13));
  }
  // critical points t*^2 = (-2m^2+11m-6)/(6m) for m <= 4, none for m >= 5
  CHECK(energy_curve_critical_t2(1) == Rational(1, 2));
  CHECK(energy_curve_critical_t2(2) == Rational(2, 3));
  CHECK(energy_curve_critical_t2(3) == Rational(1, 2));
  CHECK(energy_curve_critical_t2(4) == Rational(1, 4));
  for (int m = 5; m <= 12; ++m) CHECK_FALSE(energy_curve_critical_t2(m).has_value());
  // 1 - t*^2 equals the c-biharmonic hypersphere radius
  for (int m = 1; m <= 4; ++m)
    CHECK(Rational(1) - *energy_curve_critical_t2(m) == hypersphere_cbih_r2(m));
}

TEST_CASE("energy curve ordering at the equator") {
  for (const double t : {0.1, -0.1, 0.3, -0.3, 0.5, -0.5}) {
    for (int m = 1; m <= 4; ++m)
      CHECK(energy_curve(m, t).h_c > energy_curve(m, 0.0).h_c);
    for (int m = 5; m <= 10; ++m)
      CHECK(energy_curve(m, t).h_c < energy_curve(m, 0.0).h_c);
  }
}

TEST_CASE("exact critical point of the rational curve shape") {
  for (int m = 1; m <= 4; ++m) {
    const Rational t2 = *energy_curve_critical_t2(m);
    // derivative of (1-T)(T+K) in T vanishes at T = t*^2
    const Rational K = Rational(2 * Int(m - 1) * (m - 3), 3 * Int(m));
    CHECK(1 - 2 * t2 - K == 0);
    // and the curve value there beats the endpoints value at 0
    CHECK(energy_curve_shape_c(m, t2) > energy_curve_shape_c(m, Rational(0)));
  }
}
