// Benchmark comparing the OpenMP sweeps against the serial reference.

#include "cbh/classify.hpp"
#include "cbh/families.hpp"
#include "cbh/warped.hpp"

#include <chrono>
#include <cstdio>
#include <random>

using namespace cbh;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-32s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms);
}

HypersurfaceFamily random_family(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 8);
  std::uniform_int_distribution<int> m_dist(2, 9);
  std::uniform_int_distribution<int> num(1, 79);
  const int m = m_dist(rng);
  const Rational unit(num(rng), 80);
  const Rational radius(num(rng), 16);
  switch (pick(rng)) {
    case 0: return SphereInSphere{m, unit};
    case 1: return CliffordTorus{1 + (m % (m - 1)), m - 1 - (m % (m - 1)), unit};
    case 2: return HypEquidistant{m, radius};
    case 3: return Horosphere{m, radius};
    case 4: return HypGeodesicSphere{m, radius};
    case 5: return HypProduct{m, m / 2, radius};
    case 6: return EuclideanHyperplane{m};
    case 7: return EuclideanSphere{m, radius};
    default: return EuclideanCylinder{m, 1 + (m % (m - 1)), radius};
  }
}

}  // namespace

int main() {
  {
    const double s = time_ms([] { classify_clifford(40, default_refine_width(), false); });
    const double p = time_ms([] { classify_clifford(40, default_refine_width(), true); });
    report("clifford classification m<=40", s, p);
  }
  {
    const double s = time_ms([] { classify_hyp_product(40, default_refine_width(), false); });
    const double p = time_ms([] { classify_hyp_product(40, default_refine_width(), true); });
    report("product classification m<=40", s, p);
  }
  {
    std::mt19937 rng(1);
    std::vector<HypersurfaceFamily> fams;
    for (int i = 0; i < 20000; ++i) fams.push_back(random_family(rng));
    const auto sweep = [&](bool parallel) {
      std::vector<Rational> out(fams.size());
      parallel_for(
          fams.size(),
          [&](std::size_t i) { out[i] = cmc_residual(geometric_data(fams[i])).cofactor; },
          parallel);
    };
    const double s = time_ms([&] { sweep(false); });
    const double p = time_ms([&] { sweep(true); });
    report("residual sweep (20000 draws)", s, p);
  }
  {
    QuadratureSpec serial;
    serial.panels = 1024;
    serial.parallel = false;
    QuadratureSpec parallel = serial;
    parallel.parallel = true;
    const auto suite = [&](const QuadratureSpec& spec) {
      for (const auto& cfg : invariance_presets(3))
        conformal_invariance_check(cfg, preset_conformal_factor(cfg), spec);
    };
    const double s = time_ms([&] { suite(serial); });
    const double p = time_ms([&] { suite(parallel); });
    report("invariance suite (1024 panels)", s, p);
  }
  return 0;
}
