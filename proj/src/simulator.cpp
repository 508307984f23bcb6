#include "hamshallow/simulator.hpp"

#include <cmath>

#include "hamshallow/errors.hpp"

namespace hamshallow {

namespace {

constexpr double kHeadroom = 1e-3;

void check_basis(const FunctionSpec& spec, bool want_cheb) {
  const auto ok = [&](const Atom& a) {
    return (a.basis == AtomBasis::chebyshev_x) == want_cheb;
  };
  bool good = spec.op == SpecOp::atom ? ok(spec.atom) : true;
  for (const auto& c : spec.children) good = good && ok(c.atom);
  if (!good)
    throw usage_error(want_cheb ? "verify_qsp needs a Chebyshev-basis spec"
                                : "verify_gqsp needs a Laurent-basis spec");
}

struct SideSynthesis {
  Matrix block;          // sum of unscaled per-program blocks
  double scale_min = 1.0;
  double residual_sum = 0.0;
  int programs = 0;
};

// Parity-split QSP synthesis of a real Chebyshev series; programs' blocks
// are unwound by their scales and summed.
SideSynthesis qsp_side(const ChebyshevSeries& series, const BlockEncoding& be,
                       double tol) {
  const Eigen::Index sys = Eigen::Index(1) << be.qubits;
  SideSynthesis out;
  out.block = Matrix::Zero(sys, sys);
  const auto [even, odd] = cheb_split_parity(series);
  for (const ChebyshevSeries* part : {&even, &odd}) {
    if (part->is_zero()) continue;
    const PhaseProgram program = find_qsp_phases(*part, tol);
    const Matrix circuit = real_qsp_circuit(program, be);
    out.block += top_left_block(circuit, sys) / program.scale;
    out.scale_min = std::min(out.scale_min, program.scale);
    out.residual_sum += program.residual / program.scale;
    ++out.programs;
  }
  return out;
}

// GQSP synthesis of a real-on-circle Laurent polynomial: split into
// real/imaginary coefficient parts and by parity, synthesize each
// real-coefficient definite-parity component, and recombine blocks.
SideSynthesis gqsp_side(const LaurentPoly& poly, const Matrix& u) {
  const Eigen::Index sys = u.rows();
  SideSynthesis out;
  out.block = Matrix::Zero(sys, sys);
  const auto [re_part, im_part] = laurent_split_real_imag(poly);
  const std::pair<const LaurentPoly*, cdouble> sides[2] = {
      {&re_part, cdouble(1.0, 0.0)}, {&im_part, cdouble(0.0, 1.0)}};
  for (const auto& [side, weight] : sides) {
    if (side->is_zero()) continue;
    const auto [even, odd] = laurent_split_parity(*side);
    for (const LaurentPoly* part : {&even, &odd}) {
      if (part->is_zero()) continue;
      const double sup = sup_abs(*part, 8192);
      const double s = sup > 0.0 ? std::min(1.0, (1.0 - kHeadroom) / sup) : 1.0;
      const LaurentPoly scaled = laurent_scale(*part, cdouble(s, 0.0));
      const LaurentPoly comp = complementary_poly(scaled);
      PhaseProgram program = find_gqsp_angles(scaled, comp);
      program.scale = s;
      const Matrix circuit = gqsp_circuit(program, u);
      out.block += weight * top_left_block(circuit, sys) / s;
      out.scale_min = std::min(out.scale_min, s);
      out.residual_sum += program.residual / s;
      ++out.programs;
    }
  }
  return out;
}

VerificationReport base_report(const FunctionSpec& spec, const PauliHamiltonian& h,
                               double delta) {
  VerificationReport r;
  r.spec_summary = spec_name(spec);
  r.hamiltonian_summary = h.summary();
  r.delta = delta;
  return r;
}

}  // namespace

Matrix exact_function_matrix(const FunctionSpec& spec, const PauliHamiltonian& h) {
  if (h.qubits() > 10)
    throw parameter_error("exact_function_matrix is capped at N <= 10");
  validate(spec);
  return hermitian_function(dense_matrix(h, true), [&](double lambda) {
    return cdouble(exact_value(spec, lambda, lambda), 0.0);
  });
}

VerificationReport verify_qsp(const FunctionSpec& spec, const PauliHamiltonian& h,
                              double delta, double tol) {
  check_basis(spec, true);
  auto [mix, rep] = approximate(spec, delta);
  if (!mix.cheb_part)
    throw usage_error("verify_qsp: approximation has no Chebyshev part");

  const BlockEncoding be = block_encoding(h);
  const SideSynthesis side = qsp_side(*mix.cheb_part, be, tol);

  VerificationReport report = base_report(spec, h, delta);
  report.pipeline = "qsp";
  report.measured_block_error =
      max_abs_diff(side.block, exact_function_matrix(spec, h));
  report.certified_budget = delta / side.scale_min + 2.0 * tol + 1e-8;
  report.pass = report.measured_block_error <= report.certified_budget;
  return report;
}

VerificationReport verify_gqsp(const FunctionSpec& spec, const PauliHamiltonian& h,
                               double delta, UMode u_mode, TrotterChoice trotter) {
  check_basis(spec, false);
  auto [mix, rep] = approximate(spec, delta);
  if (!mix.laurent_part)
    throw usage_error("verify_gqsp: approximation has no Laurent part");

  const Matrix u_exact = evolution_unitary(h, 1.0);
  const SideSynthesis exact_side = gqsp_side(*mix.laurent_part, u_exact);

  VerificationReport report = base_report(spec, h, delta);
  const Matrix exact_fn = exact_function_matrix(spec, h);

  if (u_mode == UMode::exact) {
    report.pipeline = "gqsp-exact-U";
    report.measured_block_error = max_abs_diff(exact_side.block, exact_fn);
    report.certified_budget =
        delta / exact_side.scale_min + exact_side.residual_sum + 1e-8;
  } else {
    long r = trotter.r;
    if (r == 0) r = trotter_steps(mix.laurent_part->degree(), delta, trotter.v);
    // S_2v approximates e^{-i t H}; GQSP's signal is U = e^{+i H/alpha}.
    const Matrix u_trot = suzuki_matrix(h, -1.0, trotter.v, static_cast<int>(r));
    const SideSynthesis trot_side = gqsp_side(*mix.laurent_part, u_trot);
    const double allowance = max_abs_diff(trot_side.block, exact_side.block);
    report.pipeline = "gqsp-trotter";
    report.measured_block_error = max_abs_diff(trot_side.block, exact_fn);
    report.certified_budget = delta / trot_side.scale_min +
                              trot_side.residual_sum + allowance + 1e-8;
  }
  report.pass = report.measured_block_error <= report.certified_budget;
  return report;
}

VerificationReport verify_mixed(const FunctionSpec& spec, const PauliHamiltonian& h,
                                double delta) {
  auto [mix, rep] = approximate(spec, delta);
  const Eigen::Index sys = Eigen::Index(1) << h.qubits();
  const double tol = 1e-8;

  double scale_min = 1.0;
  double residual_sum = 0.0;
  Matrix cheb_block, laurent_block;
  if (mix.cheb_part && !mix.cheb_part->is_zero()) {
    const BlockEncoding be = block_encoding(h);
    const SideSynthesis side = qsp_side(*mix.cheb_part, be, tol);
    cheb_block = side.block;
    scale_min = std::min(scale_min, side.scale_min);
    residual_sum += side.residual_sum + side.programs * tol;
  }
  if (mix.laurent_part && !mix.laurent_part->is_zero()) {
    const SideSynthesis side = gqsp_side(*mix.laurent_part, evolution_unitary(h, 1.0));
    laurent_block = side.block;
    scale_min = std::min(scale_min, side.scale_min);
    residual_sum += side.residual_sum;
  }

  Matrix combined;
  if (mix.combine == CombineMode::sum) {
    combined = Matrix::Zero(sys, sys);
    if (cheb_block.size() > 0) combined += cheb_block;
    if (laurent_block.size() > 0) combined += laurent_block;
  } else {
    combined = Matrix::Identity(sys, sys);
    if (cheb_block.size() > 0) combined = combined * cheb_block;
    if (laurent_block.size() > 0) combined = combined * laurent_block;
  }

  VerificationReport report = base_report(spec, h, delta);
  report.pipeline = "mixed";
  report.measured_block_error =
      max_abs_diff(combined, exact_function_matrix(spec, h));
  report.certified_budget = delta / scale_min + residual_sum + 1e-7;
  report.pass = report.measured_block_error <= report.certified_budget;
  return report;
}

}  // namespace hamshallow
