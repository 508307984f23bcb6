#include "hamshallow/json_io.hpp"

#include "hamshallow/errors.hpp"

namespace hamshallow {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.contains(key))
    throw usage_error(std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json to_json(const ChebyshevSeries& s) {
  return json{{"kind", "chebyshev"}, {"degree", s.degree()}, {"coeffs", s.coeffs()}};
}

ChebyshevSeries chebyshev_from_json(const json& j) {
  if (j.value("kind", "") != "chebyshev")
    throw usage_error("expected a chebyshev polynomial document");
  return ChebyshevSeries(require(j, "coeffs").get<std::vector<double>>());
}

json to_json(const LaurentPoly& p) {
  json coeffs = json::array();
  for (const cdouble& c : p.coeffs()) coeffs.push_back({c.real(), c.imag()});
  return json{{"kind", "laurent"}, {"degree", p.degree()}, {"coeffs", coeffs}};
}

LaurentPoly laurent_from_json(const json& j) {
  if (j.value("kind", "") != "laurent")
    throw usage_error("expected a laurent polynomial document");
  std::vector<cdouble> coeffs;
  for (const auto& pair : require(j, "coeffs")) {
    if (!pair.is_array() || pair.size() != 2)
      throw usage_error("laurent coefficients must be [re, im] pairs");
    coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  if (coeffs.size() % 2 == 0)
    throw usage_error("laurent coefficient list must have odd length 2d+1");
  return LaurentPoly(std::move(coeffs));
}

json to_json(const ApproxReport& r) {
  return json{{"target_name", r.target_name},
              {"parameters", r.parameters},
              {"truncation_degree", r.truncation_degree},
              {"approx_degree", r.approx_degree},
              {"guaranteed_bound", r.guaranteed_bound},
              {"measured_sup_error", r.measured_sup_error}};
}

ApproxReport approx_report_from_json(const json& j) {
  ApproxReport r;
  r.target_name = require(j, "target_name").get<std::string>();
  r.parameters = require(j, "parameters").get<std::map<std::string, double>>();
  r.truncation_degree = require(j, "truncation_degree").get<int>();
  r.approx_degree = require(j, "approx_degree").get<int>();
  r.guaranteed_bound = require(j, "guaranteed_bound").get<double>();
  r.measured_sup_error = require(j, "measured_sup_error").get<double>();
  return r;
}

json to_json(const Atom& a) {
  return json{{"op", "atom"},
              {"family", family_name(a.family)},
              {"basis", basis_name(a.basis)},
              {"param", a.param}};
}

Atom atom_from_json(const json& j) {
  Atom a;
  if (j.value("op", "atom") != "atom")
    throw usage_error(
        "nested composite specs are not supported; expand the expression "
        "into one level of atoms manually");
  const std::string family = require(j, "family").get<std::string>();
  if (family == "monomial") a.family = AtomFamily::monomial;
  else if (family == "exp") a.family = AtomFamily::exp;
  else if (family == "gauss") a.family = AtomFamily::gauss;
  else if (family == "erf") a.family = AtomFamily::erf;
  else throw usage_error("unknown atom family \"" + family + "\"");
  const std::string basis = j.value("basis", "chebyshev-x");
  if (basis == "chebyshev-x") a.basis = AtomBasis::chebyshev_x;
  else if (basis == "laurent-cos") a.basis = AtomBasis::laurent_cos;
  else if (basis == "laurent-sin") a.basis = AtomBasis::laurent_sin;
  else throw usage_error("unknown atom basis \"" + basis + "\"");
  a.param = require(j, "param").get<double>();
  return a;
}

json to_json(const FunctionSpec& s) {
  switch (s.op) {
    case SpecOp::atom:
      return to_json(s.atom);
    case SpecOp::lincomb: {
      json children = json::array();
      for (const auto& c : s.children)
        children.push_back({{"coef", c.coef}, {"atom", to_json(c.atom)}});
      return json{{"op", "lincomb"}, {"children", children}};
    }
    default: {
      json children = json::array();
      for (const auto& c : s.children)
        children.push_back({{"atom", to_json(c.atom)}});
      return json{{"op", "product"}, {"children", children}};
    }
  }
}

FunctionSpec function_spec_from_json(const json& j) {
  const std::string op = j.value("op", "atom");
  if (op == "atom") return FunctionSpec::make_atom(atom_from_json(j));
  std::vector<FunctionSpec::Child> children;
  for (const auto& c : require(j, "children")) {
    FunctionSpec::Child child;
    child.coef = c.value("coef", 1.0);
    child.atom = atom_from_json(require(c, "atom"));
    children.push_back(child);
  }
  if (op == "lincomb") return FunctionSpec::make_lincomb(std::move(children));
  if (op == "product") {
    FunctionSpec s;
    s.op = SpecOp::product;
    for (auto& c : children) c.coef = 1.0;
    s.children = std::move(children);
    return s;
  }
  throw usage_error("unknown spec op \"" + op + "\"");
}

json to_json(const MixedApprox& m) {
  json j;
  j["combine"] = m.combine == CombineMode::sum ? "sum" : "product";
  j["cheb_part"] = m.cheb_part ? to_json(*m.cheb_part) : json(nullptr);
  j["laurent_part"] = m.laurent_part ? to_json(*m.laurent_part) : json(nullptr);
  json log = json::array();
  for (const auto& e : m.budget_log)
    log.push_back({{"atom", e.atom},
                   {"allocated_delta", e.allocated_delta},
                   {"achieved_degree", e.achieved_degree}});
  j["budget_log"] = log;
  j["warnings"] = m.warnings;
  return j;
}

json to_json(const PhaseProgram& p) {
  json j;
  j["kind"] = p.kind == PhaseKind::qsp_real ? "qsp-real" : "gqsp-laurent";
  j["phases"] = p.phases;
  j["scale"] = p.scale;
  j["residual"] = p.residual;
  if (p.kind == PhaseKind::qsp_real) {
    j["conjugate_phases"] = p.conjugate_phases;
    j["parity"] = p.parity == Parity::even ? "even" : "odd";
  }
  return j;
}

PhaseProgram phase_program_from_json(const json& j) {
  PhaseProgram p;
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "qsp-real") p.kind = PhaseKind::qsp_real;
  else if (kind == "gqsp-laurent") p.kind = PhaseKind::gqsp_laurent;
  else throw usage_error("unknown phase program kind \"" + kind + "\"");
  p.phases = require(j, "phases").get<std::vector<double>>();
  p.scale = require(j, "scale").get<double>();
  p.residual = require(j, "residual").get<double>();
  if (p.kind == PhaseKind::qsp_real) {
    p.conjugate_phases = require(j, "conjugate_phases").get<std::vector<double>>();
    p.parity = require(j, "parity").get<std::string>() == "even" ? Parity::even
                                                                 : Parity::odd;
  }
  return p;
}

json to_json(const DepthReport& r) {
  return json{{"function", r.function_summary},
              {"raw_degrees", {r.raw_degrees.cheb, r.raw_degrees.laurent}},
              {"approx_degrees", {r.approx_degrees.cheb, r.approx_degrees.laurent}},
              {"D_B_estimate", r.db_estimate},
              {"D_ST_estimate", r.dst_estimate},
              {"depth_raw", r.depth_raw},
              {"depth_approx", r.depth_approx},
              {"v", r.v},
              {"delta", r.delta},
              {"note", "scaling estimate; all big-O constants set to 1"}};
}

json to_json(const VerificationReport& r) {
  return json{{"spec", r.spec_summary},
              {"hamiltonian", r.hamiltonian_summary},
              {"delta", r.delta},
              {"pipeline", r.pipeline},
              {"measured_block_error", r.measured_block_error},
              {"certified_budget", r.certified_budget},
              {"pass", r.pass}};
}

json to_json(const PauliHamiltonian& h) {
  json terms = json::array();
  for (const PauliTerm& t : h.terms())
    terms.push_back({{"pauli", t.pauli}, {"coeff", t.coeff}});
  return json{{"qubits", h.qubits()}, {"terms", terms}};
}

}  // namespace hamshallow
