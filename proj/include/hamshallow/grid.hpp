#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace hamshallow::grid {

enum class Exec { serial, parallel };

// Number of points used by the sup-norm oracles when the caller does not
// pass one. Reads HAMSHALLOW_GRID_POINTS once; defaults to 10000.
std::size_t default_points();

// max_i |f(i)| over i in [0, n). Serial reference kept alongside the
// OpenMP kernel; max-reduction is associative so both return the same
// value bit for bit.
template <class F>
double max_abs_serial(std::size_t n, F&& f) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(f(i)));
  return m;
}

template <class F>
double max_abs(std::size_t n, F&& f, Exec exec = Exec::parallel) {
  if (exec == Exec::serial) return max_abs_serial(n, f);
  double m = 0.0;
#pragma omp parallel for reduction(max : m) schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    m = std::max(m, std::abs(f(static_cast<std::size_t>(i))));
  return m;
}

// i-th node of the uniform grid on [-1, 1] (endpoints included).
inline double unit_interval_node(std::size_t i, std::size_t n) {
  if (n == 1) return -1.0;
  return -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
}

// i-th node of the uniform grid on [0, 2*pi).
inline double circle_node(std::size_t i, std::size_t n) {
  return 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n);
}

}  // namespace hamshallow::grid
