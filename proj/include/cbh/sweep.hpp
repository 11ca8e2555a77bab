#pragma once

// Parallel sweep driver. Every sweep in this project is a loop of pure,
// independent cell evaluations writing to disjoint slots, so the OpenMP and
// serial paths must produce identical results; tests compare them and the
// bench tool times them. CBH_SERIAL=1 forces the serial path globally.

#include <cstdlib>

namespace cbh {

inline bool parallel_enabled() {
  const char* env = std::getenv("CBH_SERIAL");
  return !(env && env[0] == '1');
}

template <class F>
void parallel_for(std::size_t n, F&& body, bool parallel) {
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
}

template <class F>
void parallel_for(std::size_t n, F&& body) {
  parallel_for(n, body, parallel_enabled());
}

}  // namespace cbh
