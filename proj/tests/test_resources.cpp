#include <doctest.h>

#include <cmath>

#include "hamshallow/resources.hpp"

using namespace hamshallow;

namespace {

PauliHamiltonian j4k2_hamiltonian() {
  return parse_hamiltonian(
      R"({"terms":[{"pauli":"XX","coeff":0.25},{"pauli":"ZZ","coeff":0.25},
                   {"pauli":"XI","coeff":0.25},{"pauli":"IZ","coeff":0.25}]})");
}

}  // namespace

TEST_SUITE("resources") {

TEST_CASE("table row for the monomial family reproduces the worked numbers") {
  const PauliHamiltonian h = j4k2_hamiltonian();
  const FunctionSpec spec = FunctionSpec::make_atom(
      Atom{AtomFamily::monomial, AtomBasis::chebyshev_x, 100.0});
  const DepthReport r = depth_report(spec, h, 1e-3, 1);
  CHECK(r.db_estimate == 16);  // J (k + ceil(log2 J)) = 4 (2 + 2)
  CHECK(r.raw_degrees.cheb == 100);
  CHECK(r.approx_degrees.cheb == 39);
  CHECK(r.depth_raw == doctest::Approx(1600.0));
  CHECK(r.depth_approx == doctest::Approx(624.0));
}

TEST_CASE("laurent-only specs use only the D_ST branch") {
  const PauliHamiltonian h = j4k2_hamiltonian();
  const FunctionSpec spec = FunctionSpec::make_atom(
      Atom{AtomFamily::monomial, AtomBasis::laurent_cos, 50.0});
  const DepthReport r = depth_report(spec, h, 1e-2, 2);
  CHECK(r.raw_degrees.cheb == 0);
  CHECK(r.depth_raw ==
        doctest::Approx(std::pow(50.0, 1.5) * r.dst_estimate));
  CHECK(r.dst_estimate ==
        doctest::Approx(5.0 * 4 * 2 / std::pow(1e-2, 0.25)));
}

TEST_CASE("mixed spec populates both branches by the hand formula") {
  const PauliHamiltonian h = j4k2_hamiltonian();
  FunctionSpec spec = FunctionSpec::make_lincomb(
      {{0.4, Atom{AtomFamily::monomial, AtomBasis::chebyshev_x, 64.0}},
       {0.4, Atom{AtomFamily::monomial, AtomBasis::laurent_cos, 32.0}}});
  const int v = 2;
  const DepthReport r = depth_report(spec, h, 1e-2, v);
  const double expect_raw =
      64.0 * r.db_estimate + std::pow(32.0, 1.5) * r.dst_estimate;
  CHECK(r.depth_raw == doctest::Approx(expect_raw));
  const double expect_approx =
      r.approx_degrees.cheb * r.db_estimate +
      std::pow(static_cast<double>(r.approx_degrees.laurent), 1.5) * r.dst_estimate;
  CHECK(r.depth_approx == doctest::Approx(expect_approx));
  CHECK(r.depth_approx <= r.depth_raw);
}

TEST_CASE("quadratic-reduction ratio tracks sqrt(ln(1/delta)/n) within 2x") {
  const PauliHamiltonian h = j4k2_hamiltonian();
  const double delta = 1e-3;
  for (int n = 64; n <= 1024; n *= 2) {
    const FunctionSpec spec = FunctionSpec::make_atom(
        Atom{AtomFamily::monomial, AtomBasis::chebyshev_x, double(n)});
    const DepthReport r = depth_report(spec, h, delta, 1);
    const double ratio = r.depth_approx / r.depth_raw;
    const double target = std::sqrt(std::log(1.0 / delta) / n);
    CHECK(ratio <= 2.0 * target);
    CHECK(ratio >= 0.5 * target);
  }
}

TEST_CASE("d_st exposes the v trade-off") {
  const PauliHamiltonian h = j4k2_hamiltonian();
  const FunctionSpec spec = FunctionSpec::make_atom(
      Atom{AtomFamily::monomial, AtomBasis::laurent_cos, 100.0});
  const DepthReport r1 = depth_report(spec, h, 1e-2, 1);
  const DepthReport r2 = depth_report(spec, h, 1e-2, 2);
  CHECK(r2.dst_estimate > r1.dst_estimate);         // 5^{v-1} grows
  CHECK(r1.depth_raw / r1.dst_estimate >
        r2.depth_raw / r2.dst_estimate);            // exponent 1+1/v shrinks
  const std::string table = render_depth_table(r2);
  CHECK(table.find("estimate") != std::string::npos);
}

}  // TEST_SUITE
