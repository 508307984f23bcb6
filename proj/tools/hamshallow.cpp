// Command-line surface for the approximation / synthesis / verification
// pipeline. Exit codes: 0 success (and verification pass), 1 validation
// error, 2 solver failure, 3 verification fail.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hamshallow/errors.hpp"
#include "hamshallow/json_io.hpp"
#include "hamshallow/resources.hpp"
#include "hamshallow/simulator.hpp"

namespace hs = hamshallow;
using hs::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hs::usage_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw hs::usage_error("cannot write file: " + out_path);
  out << text << "\n";
}

// Mini-grammar "family:key=value[,basis=...]", e.g. "monomial:n=2",
// "exp:beta=1,basis=laurent-cos", plus sugar names cospow/sinpow/expcos/...
hs::Atom parse_atom_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw hs::usage_error("atom spec needs the form family:param=value");
  std::string family = text.substr(0, colon);
  hs::Atom atom;

  const auto sugar = [&](const std::string& base, hs::AtomBasis basis) {
    family = base;
    atom.basis = basis;
  };
  if (family == "cospow") sugar("monomial", hs::AtomBasis::laurent_cos);
  else if (family == "sinpow") sugar("monomial", hs::AtomBasis::laurent_sin);
  else if (family == "expcos") sugar("exp", hs::AtomBasis::laurent_cos);
  else if (family == "expsin") sugar("exp", hs::AtomBasis::laurent_sin);
  else if (family == "gausscos") sugar("gauss", hs::AtomBasis::laurent_cos);
  else if (family == "gausssin") sugar("gauss", hs::AtomBasis::laurent_sin);
  else if (family == "erfcos") sugar("erf", hs::AtomBasis::laurent_cos);
  else if (family == "erfsin") sugar("erf", hs::AtomBasis::laurent_sin);

  if (family == "monomial") atom.family = hs::AtomFamily::monomial;
  else if (family == "exp") atom.family = hs::AtomFamily::exp;
  else if (family == "gauss") atom.family = hs::AtomFamily::gauss;
  else if (family == "erf") atom.family = hs::AtomFamily::erf;
  else throw hs::usage_error("unknown atom family \"" + family + "\"");

  bool have_param = false;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw hs::usage_error("atom option \"" + item + "\" needs key=value");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "basis") {
      if (value == "chebyshev-x") atom.basis = hs::AtomBasis::chebyshev_x;
      else if (value == "laurent-cos") atom.basis = hs::AtomBasis::laurent_cos;
      else if (value == "laurent-sin") atom.basis = hs::AtomBasis::laurent_sin;
      else throw hs::usage_error("unknown basis \"" + value + "\"");
    } else if (key == "n" || key == "beta" || key == "gamma" || key == "lambda") {
      atom.param = std::stod(value);
      have_param = true;
    } else {
      throw hs::usage_error("unknown atom option \"" + key + "\"");
    }
  }
  if (!have_param) throw hs::usage_error("atom spec is missing its parameter");
  return atom;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> values;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    // doubling ladder a..b
    const double lo = std::stod(text.substr(0, dots));
    const double hi = std::stod(text.substr(dots + 2));
    for (double v = lo; v <= hi * (1.0 + 1e-12); v *= 2.0) values.push_back(v);
    return values;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
  if (values.empty()) throw hs::usage_error("empty grid \"" + text + "\"");
  return values;
}

int run_approx(const std::string& function, double delta, const std::string& out) {
  const hs::Atom atom = parse_atom_spec(function);
  const hs::AtomApprox a = hs::approximate_atom(atom, delta);
  json j;
  j["approximation"] = a.series ? hs::to_json(*a.series) : hs::to_json(*a.poly);
  j["report"] = hs::to_json(a.report);
  write_output(j.dump(2), out);
  return 0;
}

int run_compose(const std::string& spec_path, double delta, const std::string& out) {
  const hs::FunctionSpec spec =
      hs::function_spec_from_json(json::parse(read_file(spec_path)));
  auto [mix, report] = hs::approximate(spec, delta);
  json j;
  j["mixed"] = hs::to_json(mix);
  j["report"] = hs::to_json(report);
  write_output(j.dump(2), out);
  return 0;
}

int run_phases(const std::string& target_path, double tol, const std::string& out) {
  json doc = json::parse(read_file(target_path));
  if (doc.contains("approximation")) doc = doc["approximation"];  // approx output
  const std::string kind = doc.value("kind", "");
  json j;
  if (kind == "chebyshev") {
    const hs::ChebyshevSeries target = hs::chebyshev_from_json(doc);
    j = hs::to_json(hs::find_qsp_phases(target, tol));
  } else if (kind == "laurent") {
    hs::LaurentPoly target = hs::laurent_from_json(doc);
    bool factored_i = false;
    if (!hs::laurent_has_real_coeffs(target, 1e-14 * std::max(1.0, target.l1_norm()))) {
      // Purely imaginary coefficient sets carry a global factor of i that
      // the synthesis machinery factors out.
      auto [re, im] = hs::laurent_split_real_imag(target);
      if (!re.is_zero())
        throw hs::usage_error(
            "laurent target must have real or purely imaginary coefficients; "
            "run the simulate pipeline for general targets");
      target = im;
      factored_i = true;
    }
    const double sup = hs::sup_abs(target, 8192);
    const double s = sup > 0.0 ? std::min(1.0, (1.0 - 1e-3) / sup) : 1.0;
    const hs::LaurentPoly scaled = hs::laurent_scale(target, hs::cdouble(s, 0.0));
    const hs::LaurentPoly comp = hs::complementary_poly(scaled);
    hs::PhaseProgram program = hs::find_gqsp_angles(scaled, comp);
    program.scale = s;
    j = hs::to_json(program);
    if (factored_i) j["global_phase_im"] = 1;
  } else {
    throw hs::usage_error("target document must be a chebyshev or laurent poly");
  }
  write_output(j.dump(2), out);
  return 0;
}

int run_simulate(const std::string& spec_path, const std::string& h_path,
                 double delta, std::string pipeline, const std::string& trotter,
                 const std::string& out) {
  const hs::FunctionSpec spec =
      hs::function_spec_from_json(json::parse(read_file(spec_path)));
  const hs::PauliHamiltonian h = hs::parse_hamiltonian(read_file(h_path));

  if (pipeline == "auto") {
    bool all_cheb = true, all_laurent = true;
    const auto tally = [&](const hs::Atom& a) {
      (a.basis == hs::AtomBasis::chebyshev_x ? all_laurent : all_cheb) = false;
    };
    if (spec.op == hs::SpecOp::atom) tally(spec.atom);
    for (const auto& c : spec.children) tally(c.atom);
    pipeline = all_cheb ? "qsp" : (all_laurent ? "gqsp" : "mixed");
  }

  hs::VerificationReport report;
  if (pipeline == "qsp") {
    report = hs::verify_qsp(spec, h, delta, 1e-8);
  } else if (pipeline == "gqsp") {
    if (trotter.empty()) {
      report = hs::verify_gqsp(spec, h, delta, hs::UMode::exact);
    } else {
      // accepted forms: "auto", "v", "v,r", "v,auto"
      hs::TrotterChoice choice;
      if (trotter != "auto") {
        const auto comma = trotter.find(',');
        try {
          choice.v = std::stoi(trotter.substr(0, comma));
          const std::string steps =
              comma == std::string::npos ? "" : trotter.substr(comma + 1);
          if (!steps.empty() && steps != "auto") choice.r = std::stol(steps);
        } catch (const std::exception&) {
          throw hs::usage_error("--trotter expects auto, v, v,r or v,auto");
        }
      }
      report = hs::verify_gqsp(spec, h, delta, hs::UMode::trotter, choice);
    }
  } else if (pipeline == "mixed") {
    report = hs::verify_mixed(spec, h, delta);
  } else {
    throw hs::usage_error("unknown pipeline \"" + pipeline + "\"");
  }
  write_output(hs::to_json(report).dump(2), out);
  return report.pass ? 0 : 3;
}

int run_depth(const std::string& spec_path, const std::string& h_path,
              double delta, int order, bool as_json, const std::string& out) {
  const hs::FunctionSpec spec =
      hs::function_spec_from_json(json::parse(read_file(spec_path)));
  const hs::PauliHamiltonian h = hs::parse_hamiltonian(read_file(h_path));
  const hs::DepthReport report = hs::depth_report(spec, h, delta, order);
  write_output(as_json ? hs::to_json(report).dump(2) : hs::render_depth_table(report),
               out);
  return 0;
}

int run_sweep(const std::string& family, const std::string& param_grid,
              const std::string& delta_grid, const std::string& out) {
  const std::vector<double> params = parse_grid(param_grid);
  const std::vector<double> deltas = parse_grid(delta_grid);

  struct Cell {
    double param, delta;
    hs::ApproxReport report;
    double raw_degree;
  };
  std::vector<Cell> cells;
  for (double p : params)
    for (double d : deltas) cells.push_back({p, d, {}, 0.0});

  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(cells.size()); ++i) {
    try {
      Cell& cell = cells[i];
      hs::Atom atom = parse_atom_spec(family + ":" +
                                      (family == "monomial" || family == "cospow" ||
                                               family == "sinpow"
                                           ? "n"
                                           : family.rfind("exp", 0) == 0
                                                 ? "beta"
                                                 : family.rfind("gauss", 0) == 0
                                                       ? "gamma"
                                                       : "lambda") +
                                      "=" + fmt17(cell.param));
      const hs::AtomApprox a = hs::approximate_atom(atom, cell.delta);
      cell.report = a.report;
      cell.raw_degree = atom.family == hs::AtomFamily::monomial
                            ? cell.param
                            : a.report.truncation_degree;
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::ostringstream csv;
  csv << "family,param,delta,raw_degree,approx_degree,bound,measured_error\n";
  for (const Cell& cell : cells)
    csv << family << "," << fmt17(cell.param) << "," << fmt17(cell.delta) << ","
        << fmt17(cell.raw_degree) << "," << cell.report.approx_degree << ","
        << fmt17(cell.report.guaranteed_bound) << ","
        << fmt17(cell.report.measured_sup_error) << "\n";
  if (out.empty())
    std::cout << csv.str();
  else {
    std::ofstream f(out);
    if (!f) throw hs::usage_error("cannot write file: " + out);
    f << csv.str();
  }
  return 0;
}

void emit_error(const std::string& type, const std::string& message) {
  json j;
  j["error"] = {{"type", type}, {"message", message}};
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduced-degree polynomial approximation and QSP/GQSP synthesis"};
  app.require_subcommand(1);

  std::string function, spec_path, h_path, target_path, out, family;
  std::string pipeline = "auto", trotter, param_grid, delta_grid;
  double delta = 1e-2, tol = 1e-8;
  int order = 1;
  bool as_json = false;

  auto* approx = app.add_subcommand("approx", "approximate one atom function");
  approx->add_option("--function", function, "atom spec, e.g. monomial:n=100")
      ->required();
  approx->add_option("--delta", delta, "target sup-norm error")->required();
  approx->add_option("--out", out, "output file (default stdout)");

  auto* compose = app.add_subcommand("compose", "approximate a composite spec");
  compose->add_option("--spec", spec_path, "FunctionSpec JSON file")->required();
  compose->add_option("--delta", delta)->required();
  compose->add_option("--out", out);

  auto* phases = app.add_subcommand("phases", "solve QSP/GQSP phase factors");
  phases->add_option("--target", target_path, "series/poly JSON file")->required();
  phases->add_option("--tol", tol, "reconstruction tolerance");
  phases->add_option("--out", out);

  auto* simulate = app.add_subcommand("simulate", "desk-scale block verification");
  simulate->add_option("--spec", spec_path)->required();
  simulate->add_option("--hamiltonian", h_path)->required();
  simulate->add_option("--delta", delta)->required();
  simulate->add_option("--pipeline", pipeline, "qsp|gqsp|mixed|auto");
  simulate->add_option("--trotter", trotter, "v,r or auto (gqsp only)");
  simulate->add_option("--out", out);

  auto* depth = app.add_subcommand("depth", "circuit-depth scaling estimates");
  depth->add_option("--spec", spec_path)->required();
  depth->add_option("--hamiltonian", h_path)->required();
  depth->add_option("--delta", delta)->required();
  depth->add_option("--order", order, "Suzuki-Trotter order parameter v");
  depth->add_flag("--json", as_json, "emit JSON instead of the text table");
  depth->add_option("--out", out);

  auto* sweep = app.add_subcommand("sweep", "parameter sweeps as CSV");
  sweep->add_option("--family", family,
                    "monomial|exp|gauss|erf|cospow|sinpow|expcos|expsin|"
                    "gausscos|gausssin|erfcos|erfsin")
      ->required();
  sweep->add_option("--param-grid", param_grid, "comma list or a..b doubling")
      ->required();
  sweep->add_option("--delta-grid", delta_grid, "comma list")->required();
  sweep->add_option("--out", out, "CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(approx)) return run_approx(function, delta, out);
    if (app.got_subcommand(compose)) return run_compose(spec_path, delta, out);
    if (app.got_subcommand(phases)) return run_phases(target_path, tol, out);
    if (app.got_subcommand(simulate))
      return run_simulate(spec_path, h_path, delta, pipeline, trotter, out);
    if (app.got_subcommand(depth))
      return run_depth(spec_path, h_path, delta, order, as_json, out);
    if (app.got_subcommand(sweep))
      return run_sweep(family, param_grid, delta_grid, out);
  } catch (const hs::solver_error& e) {
    emit_error("solver", std::string(e.what()) +
                             " (best residual " + fmt17(e.best_residual) + ")");
    return 2;
  } catch (const json::exception& e) {
    emit_error("validation", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {  // parameter_error, usage_error
    emit_error("validation", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    emit_error("validation", e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 1;
  }
  return 0;
}
