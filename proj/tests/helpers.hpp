#pragma once

// Shared random generators for family sweeps in tests.

#include "cbh/families.hpp"

#include <random>

namespace cbh::testutil {

// Random rational strictly inside (lo, hi) with denominator <= max_den.
inline Rational random_rational(std::mt19937& rng, const Rational& lo, const Rational& hi,
                                int max_den = 97) {
  std::uniform_int_distribution<int> den_dist(2, max_den);
  for (;;) {
    const int den = den_dist(rng);
    std::uniform_int_distribution<long long> num_dist(1, 4 * den);
    const Rational span = hi - lo;
    const Rational q = lo + span * Rational(num_dist(rng), 4 * den + 1);
    if (q > lo && q < hi) return q;
  }
}

inline HypersurfaceFamily random_family(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 8);
  std::uniform_int_distribution<int> m_dist(2, 9);
  const int m = m_dist(rng);
  const Rational unit = random_rational(rng, Rational(1, 100), Rational(99, 100));
  const Rational radius = random_rational(rng, Rational(1, 10), Rational(5));
  switch (pick(rng)) {
    case 0: return SphereInSphere{m, unit};
    case 1: {
      std::uniform_int_distribution<int> part(1, m - 1);
      const int m1 = part(rng);
      return CliffordTorus{m1, m - m1, unit};
    }
    case 2: return HypEquidistant{m, radius};
    case 3: return Horosphere{m, radius};
    case 4: return HypGeodesicSphere{m, radius};
    case 5: {
      std::uniform_int_distribution<int> kd(0, m - 1);
      return HypProduct{m, kd(rng), radius};
    }
    case 6: return EuclideanHyperplane{m};
    case 7: return EuclideanSphere{m, radius};
    default: {
      std::uniform_int_distribution<int> kd(1, m - 1);
      return EuclideanCylinder{m, kd(rng), radius};
    }
  }
}

}  // namespace cbh::testutil
