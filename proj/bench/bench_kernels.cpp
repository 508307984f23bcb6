// Compares the serial reference kernels against the OpenMP ones and prints
// timings plus agreement checks. Not part of the test suite.

#include <chrono>
#include <cstdio>
#include <random>

#include "hamshallow/hamiltonian.hpp"
#include "hamshallow/polyops.hpp"

using namespace hamshallow;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <class F>
double timed(const char* label, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const double dt = seconds_since(t0);
  std::printf("  %-28s %8.3f s\n", label, dt);
  return dt;
}

}  // namespace

int main() {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  std::printf("sup-norm oracle, degree-200 series, 2e6 grid points\n");
  std::vector<double> coeffs(201);
  for (double& c : coeffs) c = u(rng) / 200.0;
  const ChebyshevSeries series(coeffs);
  const auto f = [](double x) { return std::exp(-x * x); };
  double serial_result = 0.0, parallel_result = 0.0;
  const double t_serial = timed("serial", [&] {
    serial_result = sup_norm_error(f, series, 2000000, grid::Exec::serial);
  });
  const double t_parallel = timed("openmp", [&] {
    parallel_result = sup_norm_error(f, series, 2000000, grid::Exec::parallel);
  });
  std::printf("  speedup %.2fx, results %s\n\n", t_serial / t_parallel,
              serial_result == parallel_result ? "identical" : "DIFFER");

  std::printf("dense Pauli-sum assembly, N=10, J=24\n");
  std::vector<PauliTerm> terms;
  const char* alphabet = "IXYZ";
  while (terms.size() < 24) {
    std::string pauli;
    for (int q = 0; q < 10; ++q) pauli.push_back(alphabet[rng() % 4]);
    bool dup = false;
    for (const auto& t : terms) dup = dup || t.pauli == pauli;
    if (!dup) terms.push_back({u(rng), pauli});
  }
  const PauliHamiltonian h = PauliHamiltonian::from_terms(terms);
  Matrix ms, mp;
  const double d_serial =
      timed("serial", [&] { ms = dense_matrix(h, true, grid::Exec::serial); });
  const double d_parallel =
      timed("openmp", [&] { mp = dense_matrix(h, true, grid::Exec::parallel); });
  std::printf("  speedup %.2fx, results %s\n", d_serial / d_parallel,
              max_abs_diff(ms, mp) == 0.0 ? "identical" : "DIFFER");
  return 0;
}
