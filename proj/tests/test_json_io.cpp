#include <doctest.h>

#include <cmath>

#include "hamshallow/json_io.hpp"

using namespace hamshallow;

TEST_SUITE("json_io") {

TEST_CASE("chebyshev series round-trips exactly") {
  const ChebyshevSeries s({1.0 / 3.0, 0.0, -0.123456789012345678, 2e-17});
  const json j = to_json(s);
  const ChebyshevSeries back = chebyshev_from_json(j);
  CHECK(back.coeffs() == s.coeffs());
  // serialize -> parse -> serialize is a fixed point
  CHECK(to_json(back).dump() == j.dump());
  CHECK(j.at("kind") == "chebyshev");
  CHECK(j.at("degree") == s.degree());
}

TEST_CASE("laurent poly round-trips exactly") {
  const LaurentPoly p = LaurentPoly::from_terms(
      {{0, {0.1, 0.0}}, {2, {1.0 / 7.0, -0.25}}, {-2, {1.0 / 7.0, 0.25}}});
  const json j = to_json(p);
  const LaurentPoly back = laurent_from_json(j);
  CHECK(back.coeffs() == p.coeffs());
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("function specs and atoms round-trip") {
  FunctionSpec spec = FunctionSpec::make_lincomb(
      {{0.5, Atom{AtomFamily::exp, AtomBasis::chebyshev_x, 2.0}},
       {-0.3, Atom{AtomFamily::monomial, AtomBasis::laurent_sin, 7.0}}});
  const json j = to_json(spec);
  const FunctionSpec back = function_spec_from_json(j);
  CHECK(to_json(back).dump() == j.dump());
  CHECK(back.children.size() == 2);
  CHECK(back.children[1].coef == -0.3);
  CHECK(back.children[1].atom.basis == AtomBasis::laurent_sin);

  FunctionSpec prod = FunctionSpec::make_product(
      {Atom{AtomFamily::monomial, AtomBasis::chebyshev_x, 20.0},
       Atom{AtomFamily::gauss, AtomBasis::chebyshev_x, 3.0}});
  CHECK(to_json(function_spec_from_json(to_json(prod))).dump() ==
        to_json(prod).dump());
}

TEST_CASE("phase programs round-trip") {
  PhaseProgram p;
  p.kind = PhaseKind::qsp_real;
  p.phases = {0.25, -1.0 / 3.0, 0.25};
  p.conjugate_phases = {-0.25 + M_PI, 1.0 / 3.0 + M_PI, -0.25};
  p.scale = 0.999;
  p.residual = 3.25e-12;
  p.parity = Parity::even;
  const json j = to_json(p);
  const PhaseProgram back = phase_program_from_json(j);
  CHECK(back.phases == p.phases);
  CHECK(back.conjugate_phases == p.conjugate_phases);
  CHECK(back.scale == p.scale);
  CHECK(back.residual == p.residual);
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("reports and Hamiltonians serialize") {
  ApproxReport r;
  r.target_name = "x^n";
  r.parameters = {{"n", 100.0}, {"delta", 1e-3}};
  r.truncation_degree = 0;
  r.approx_degree = 38;
  r.guaranteed_bound = 9.96e-4;
  r.measured_sup_error = 4.5e-4;
  const ApproxReport back = approx_report_from_json(to_json(r));
  CHECK(to_json(back).dump() == to_json(r).dump());

  const PauliHamiltonian h = parse_hamiltonian(
      R"({"terms":[{"pauli":"XZ","coeff":0.125},{"pauli":"YI","coeff":-0.625}]})");
  const json hj = to_json(h);
  const PauliHamiltonian hback = parse_hamiltonian(hj.dump());
  CHECK(to_json(hback).dump() == hj.dump());
}

}  // TEST_SUITE
