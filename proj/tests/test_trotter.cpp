#include <doctest.h>

#include <cmath>

#include "hamshallow/errors.hpp"
#include "hamshallow/trotter.hpp"

using namespace hamshallow;

namespace {

PauliHamiltonian noncommuting_2q() {
  return parse_hamiltonian(
      R"({"terms":[{"pauli":"XI","coeff":0.4},{"pauli":"ZZ","coeff":0.35},
                   {"pauli":"IY","coeff":0.25}]})");
}

// Least-squares slope of log(err) against log(r).
double loglog_slope(const PauliHamiltonian& h, double t, int v,
                    const std::vector<int>& rs) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int r : rs) {
    const double x = std::log(static_cast<double>(r));
    const double y = std::log(measured_trotter_error(h, t, v, r));
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double n = static_cast<double>(rs.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_SUITE("trotter") {

TEST_CASE("commuting Hamiltonians are Trotter-exact") {
  const PauliHamiltonian zz = parse_hamiltonian(
      R"({"terms":[{"pauli":"ZI","coeff":0.6},{"pauli":"IZ","coeff":0.3},
                   {"pauli":"ZZ","coeff":0.1}]})");
  for (int v : {1, 2, 3})
    for (int r : {1, 3}) CHECK(measured_trotter_error(zz, 1.0, v, r) <= 1e-12);
  const PauliHamiltonian single =
      parse_hamiltonian(R"({"terms":[{"pauli":"XY","coeff":0.8}]})");
  CHECK(measured_trotter_error(single, 0.7, 1, 1) <= 1e-13);
}

TEST_CASE("suzuki coefficient u_2") {
  CHECK(suzuki_coefficient(2) == doctest::Approx(0.4144907717943757).epsilon(1e-12));
  // sub-step times sum to t by construction
  CHECK(4.0 * suzuki_coefficient(2) + (1.0 - 4.0 * suzuki_coefficient(2)) ==
        doctest::Approx(1.0));
}

TEST_CASE("S2 error shrinks ~8x when t halves twice") {
  const PauliHamiltonian h = parse_hamiltonian(
      R"({"terms":[{"pauli":"X","coeff":0.5},{"pauli":"Z","coeff":0.5}]})");
  const double e1 = measured_trotter_error(h, 0.5, 1, 1);
  const double e2 = measured_trotter_error(h, 0.25, 1, 1);
  const double e3 = measured_trotter_error(h, 0.125, 1, 1);
  CHECK(e1 / e2 == doctest::Approx(8.0).epsilon(0.25));
  CHECK(e2 / e3 == doctest::Approx(8.0).epsilon(0.25));
}

TEST_CASE("order scaling in the step count") {
  const PauliHamiltonian h = noncommuting_2q();
  const double slope1 = loglog_slope(h, 1.0, 1, {1, 2, 4, 8, 16});
  CHECK(slope1 == doctest::Approx(-2.0).epsilon(0.25));
  const double slope2 = loglog_slope(h, 1.0, 2, {1, 2, 4, 8, 16});
  CHECK(slope2 == doctest::Approx(-4.0).epsilon(0.125));
}

TEST_CASE("time-reversal symmetry") {
  const PauliHamiltonian h = noncommuting_2q();
  for (int v : {1, 2, 3}) {
    const Matrix fwd = suzuki_matrix(h, 0.9, v, 3);
    const Matrix bwd = suzuki_matrix(h, -0.9, v, 3);
    CHECK(max_abs_diff(fwd * bwd, Matrix::Identity(4, 4)) <= 1e-10);
    CHECK(unitarity_defect(fwd) <= 1e-10);
  }
}

TEST_CASE("trotter_steps rule with declared unit constant") {
  CHECK(trotter_steps(16, 1e-2, 2) == 13);
  CHECK(trotter_steps(1, 1.0, 1) == 1);
  CHECK(trotter_steps(1, 1.0, 3) == 1);
  CHECK(trotter_steps(16, 1e-2, 1) == 160);
  CHECK_THROWS_AS(trotter_steps(0, 1e-2, 1), parameter_error);
  CHECK_THROWS_AS(trotter_steps(4, 1e-2, 4), parameter_error);
}

}  // TEST_SUITE
