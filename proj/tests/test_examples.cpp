#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hamshallow/json_io.hpp"
#include "hamshallow/simulator.hpp"

// Every shipped example spec must verify against the shipped Hamiltonian
// through its natural pipeline; HAMSHALLOW_SPECS_DIR is injected by the
// build.

using namespace hamshallow;

namespace {

json load(const std::string& name) {
  std::ifstream in(std::string(HAMSHALLOW_SPECS_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return json::parse(ss.str());
}

bool all_cheb(const FunctionSpec& spec) {
  bool cheb = spec.op != SpecOp::atom || spec.atom.basis == AtomBasis::chebyshev_x;
  for (const auto& c : spec.children)
    cheb = cheb && c.atom.basis == AtomBasis::chebyshev_x;
  return cheb;
}

bool all_laurent(const FunctionSpec& spec) {
  bool laurent = spec.op != SpecOp::atom || spec.atom.basis != AtomBasis::chebyshev_x;
  for (const auto& c : spec.children)
    laurent = laurent && c.atom.basis != AtomBasis::chebyshev_x;
  return laurent;
}

}  // namespace

TEST_SUITE("shipped_examples") {

TEST_CASE("every shipped spec verifies against the shipped Hamiltonian") {
  const PauliHamiltonian h = parse_hamiltonian(load("hamiltonian_2q.json").dump());
  const double delta = 1e-2;
  for (const char* name :
       {"power.json", "exp.json", "gauss.json", "erf.json", "cos_power.json",
        "sin_power.json", "exp_cos.json", "gauss_sin.json", "erf_cos.json",
        "lincomb_mixed.json", "product_mixed.json"}) {
    CAPTURE(name);
    const FunctionSpec spec = function_spec_from_json(load(name));
    VerificationReport report;
    if (all_cheb(spec))
      report = verify_qsp(spec, h, delta, 1e-8);
    else if (all_laurent(spec))
      report = verify_gqsp(spec, h, delta, UMode::exact);
    else
      report = verify_mixed(spec, h, delta);
    CHECK(report.pass);
    CHECK(report.measured_block_error <= report.certified_budget);
  }
}

}  // TEST_SUITE
