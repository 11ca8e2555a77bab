#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cbh/spectral.hpp"

using namespace cbh;

namespace {

Int expected_equator_index(int m) { return m <= 4 ? Int(0) : Int(m + 2); }

Int expected_equator_nullity(int m) {
  if (m == 2 || m == 4) return Int(m + 1) * (m + 4) / 2;
  return Int(m + 1) * (m + 2) / 2;
}

}  // namespace

TEST_CASE("laplace spectrum and multiplicities") {
  CHECK(laplace_eigenvalue(4, Rational(3, 4), 1) == Rational(16, 3));
  CHECK(laplace_eigenvalue(1, Rational(1, 2), 3) == Rational(18));  // j^2/r^2
  CHECK(divfree_laplace_eigenvalue(4, Rational(3, 4), 1) == Rational(8));
  for (int m = 1; m <= 12; ++m) {
    CHECK(sph_multiplicity(m, 0) == 1);
    if (m >= 2) CHECK(sph_multiplicity(m, 1) == m + 1);
    CHECK(divfree_multiplicity(m, 1) == killing_dimension(m));
    // eigenvalues strictly increasing in the level
    for (int j = 0; j < 6; ++j)
      CHECK(laplace_eigenvalue(m, Rational(1, 3), j) < laplace_eigenvalue(m, Rational(1, 3), j + 1));
    for (int k = 1; k < 6; ++k)
      CHECK(divfree_laplace_eigenvalue(m, Rational(1, 3), k) <
            divfree_laplace_eigenvalue(m, Rational(1, 3), k + 1));
  }
  CHECK(sph_multiplicity(1, 1) == 2);
  CHECK(sph_multiplicity(1, 5) == 2);
  CHECK(divfree_multiplicity(1, 1) == 1);
  CHECK(divfree_multiplicity(1, 2) == 0);
  // on S^2 the divergence-free multiplicities coincide with the function ones
  for (int k = 1; k <= 8; ++k) CHECK(divfree_multiplicity(2, k) == sph_multiplicity(2, k));
}

TEST_CASE("equator normal eigenvalues") {
  CHECK(equator_normal_eigenvalue(5, Rational(0)) == Rational(-5, 3));
  for (int m = 1; m <= 10; ++m)
    CHECK(equator_normal_eigenvalue(m, Rational(m)) == 0);  // lambda_1 = m
  CHECK(equator_normal_eigenvalue(4, Rational(0)) == Rational(8));
}

TEST_CASE("equator tangent eigenvalues") {
  CHECK(equator_tangent_eigenvalue(5, Rational(5)) == Rational(-7));
  for (int m = 1; m <= 10; ++m)
    CHECK(equator_tangent_eigenvalue(m, Rational(2 * m - 2)) == 0);  // Killing
  CHECK(equator_tangent_eigenvalue(4, Rational(4)) == 0);
}

TEST_CASE("coupled blocks at the c-biharmonic parameters") {
  // m = 4, r^2 = 3/4: the j = 1 block vanishes identically
  {
    const auto blk = hypersphere_block(4, Rational(3, 4), 1);
    CHECK(blk.a == 0);
    CHECK(blk.b == 0);
    CHECK(blk.d_sq == 0);
    CHECK(blk.zero_count == 2);
    CHECK(blk.negative_count == 0);
  }
  // m = 2, r^2 = 1/3: one zero eigenvalue at j = 1
  {
    const auto blk = hypersphere_block(2, Rational(1, 3), 1);
    CHECK(blk.trace > 0);
    CHECK(blk.det == 0);
    CHECK(blk.zero_count == 1);
    CHECK(blk.negative_count == 0);
  }
  // m = 3, r^2 = 1/2: a = 24, b = 16, d^2 = 384
  {
    const auto blk = hypersphere_block(3, Rational(1, 2), 1);
    CHECK(blk.a == 24);
    CHECK(blk.b == 16);
    CHECK(blk.d_sq == 384);
    CHECK(blk.det == 0);
    CHECK(blk.zero_count == 1);
  }
  // blocks beyond j = 1 are positive in all four cases
  for (const auto& [m, r2] : std::vector<std::pair<int, Rational>>{
           {1, Rational(1, 2)}, {2, Rational(1, 3)}, {3, Rational(1, 2)}, {4, Rational(3, 4)}})
    for (int j = 2; j <= 6; ++j) {
      const auto blk = hypersphere_block(m, r2, j);
      CHECK(blk.negative_count == 0);
      CHECK(blk.zero_count == 0);
    }
}

TEST_CASE("normal direction coefficient S0") {
  CHECK(hypersphere_s0_coefficient(4, Rational(3, 4)) == Rational(-64, 3));
  CHECK(hypersphere_s0_coefficient(2, Rational(1, 3)) == Rational(-32));
  CHECK(hypersphere_s0_coefficient(1, Rational(1, 2)) == Rational(-4));
  CHECK(hypersphere_s0_coefficient(3, Rational(1, 2)) == Rational(-36));
}

TEST_CASE("divergence-free stream closed forms") {
  for (int k = 1; k <= 5; ++k) {
    const Rational mu2 = divfree_laplace_eigenvalue(2, Rational(1, 3), k);
    CHECK(hypersphere_divfree_eigenvalue(2, Rational(1, 3), mu2) == mu2 * (mu2 - 6));
    const Rational mu4 = divfree_laplace_eigenvalue(4, Rational(3, 4), k);
    CHECK(hypersphere_divfree_eigenvalue(4, Rational(3, 4), mu4) ==
          (mu4 - 8) * (3 * mu4 - 8) / 3);
  }
  // Killing fields are null directions at the critical radii
  CHECK(hypersphere_divfree_eigenvalue(2, Rational(1, 3),
                                       divfree_laplace_eigenvalue(2, Rational(1, 3), 1)) == 0);
  CHECK(hypersphere_divfree_eigenvalue(4, Rational(3, 4),
                                       divfree_laplace_eigenvalue(4, Rational(3, 4), 1)) == 0);
}

TEST_CASE("equator index and nullity for m = 1..12") {
  for (int m = 1; m <= 12; ++m) {
    const auto rep = index_nullity_equator(m);
    CHECK(rep.index == expected_equator_index(m));
    CHECK(rep.nullity == expected_equator_nullity(m));
    CHECK(rep.variational);
    CHECK_FALSE(rep.truncation.streams.empty());
    CHECK(rep.truncation.method == "fujiwara-root-bound");
  }
}

TEST_CASE("small hypersphere index and nullity") {
  const std::vector<std::tuple<int, Rational, Int, Int>> cases = {
      {1, Rational(1, 2), 1, 3},
      {2, Rational(1, 3), 1, 6},
      {3, Rational(1, 2), 1, 10},
      {4, Rational(3, 4), 1, 20}};
  for (const auto& [m, r2, index, nullity] : cases) {
    const auto rep = index_nullity_hypersphere(m, r2);
    CHECK(rep.index == index);
    CHECK(rep.nullity == nullity);
    CHECK(rep.variational);
  }
}

TEST_CASE("the (4, 3/4) breakdown shows the expected structure") {
  const auto rep = index_nullity_hypersphere(4, Rational(3, 4));
  // S0 produces the index
  REQUIRE(rep.breakdown[0].kind == StreamEntry::Kind::NormalFunction);
  CHECK(*rep.breakdown[0].value == Rational(-64, 3));
  CHECK(rep.breakdown[0].negative == 1);
  // j = 1 double-zero block contributes 2 (m+1) = 10
  const auto& blk = rep.breakdown[1];
  REQUIRE(blk.kind == StreamEntry::Kind::CoupledBlock);
  CHECK(blk.level == 1);
  CHECK(blk.block->a == 0);
  CHECK(blk.block->b == 0);
  CHECK(blk.block->d_sq == 0);
  CHECK(blk.zero == 10);
  // Killing fields contribute m(m+1)/2 = 10
  Int killing_zero = 0;
  for (const auto& e : rep.breakdown)
    if (e.kind == StreamEntry::Kind::DivergenceFree && e.level == 1) killing_zero = e.zero;
  CHECK(killing_zero == 10);
}

TEST_CASE("equator reports equal hypersphere reports at r^2 = 1, level by level") {
  for (int m = 1; m <= 8; ++m) {
    const auto eq = index_nullity_equator(m);
    const auto hyp = index_nullity_hypersphere(m, Rational(1));
    CHECK(eq.index == hyp.index);
    CHECK(eq.nullity == hyp.nullity);
    for (int j = 1; j <= 5; ++j) {
      const auto blk = hypersphere_block(m, Rational(1), j);
      const Rational lam = laplace_eigenvalue(m, Rational(1), j);
      CHECK(blk.a == equator_normal_eigenvalue(m, lam));
      CHECK(blk.b == equator_tangent_eigenvalue(m, lam));
      CHECK(blk.d_sq == 0);
    }
    for (int k = 1; k <= 5; ++k) {
      const Rational mu = divfree_laplace_eigenvalue(m, Rational(1), k);
      CHECK(hypersphere_divfree_eigenvalue(m, Rational(1), mu) ==
            equator_tangent_eigenvalue(m, mu));
    }
  }
}

TEST_CASE("for m in {1,3} at r^2 = 1/2 the conformal and plain Hessians coincide") {
  for (int m : {1, 3}) {
    const Rational r2(1, 2);
    CHECK(hypersphere_s0_coefficient(m, r2, true) == hypersphere_s0_coefficient(m, r2, false));
    for (int j = 1; j <= 4; ++j) {
      const auto with = hypersphere_block(m, r2, j, true);
      const auto without = hypersphere_block(m, r2, j, false);
      CHECK(with.a == without.a);
      CHECK(with.b == without.b);
      CHECK(with.d_sq == without.d_sq);
    }
    const Rational mu = divfree_laplace_eigenvalue(m, r2, 1);
    CHECK(hypersphere_divfree_eigenvalue(m, r2, mu, true) ==
          hypersphere_divfree_eigenvalue(m, r2, mu, false));
  }
}

TEST_CASE("exploratory parameters are flagged non-variational") {
  const auto rep = index_nullity_hypersphere(4, Rational(1, 2));
  CHECK_FALSE(rep.variational);
  // totals still well-defined
  CHECK(rep.index >= 0);
}

TEST_CASE("truncation certificates are sound: levels beyond stay positive") {
  for (const auto& [m, r2] : std::vector<std::pair<int, Rational>>{
           {2, Rational(1, 3)}, {4, Rational(3, 4)}, {6, Rational(2, 5)}}) {
    const auto rep = index_nullity_hypersphere(m, r2);
    int j_star = 0, k_star = 0;
    for (const auto& s : rep.truncation.streams) {
      if (s.kind == StreamEntry::Kind::CoupledBlock) j_star = s.first_certified_level;
      if (s.kind == StreamEntry::Kind::DivergenceFree) k_star = s.first_certified_level;
    }
    for (int j = j_star; j <= j_star + 10; ++j) {
      const auto blk = hypersphere_block(m, r2, j);
      CHECK(blk.negative_count == 0);
      CHECK(blk.zero_count == 0);
    }
    for (int k = k_star; k <= k_star + 10; ++k)
      CHECK(hypersphere_divfree_eigenvalue(m, r2, divfree_laplace_eigenvalue(m, r2, k)) > 0);
  }
}

TEST_CASE("eigen stream records") {
  const auto ns = normal_stream(4, Rational(3, 4), 1);
  CHECK(ns.eigenvalue == Rational(16, 3));
  CHECK(ns.multiplicity == 5);
  const auto ds = divfree_stream(4, Rational(3, 4), 1);
  CHECK(ds.eigenvalue == Rational(8));
  CHECK(ds.multiplicity == 10);
  CHECK_THROWS_AS(gradient_stream(4, Rational(3, 4), 0), std::domain_error);
}
