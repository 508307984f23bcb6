#pragma once

#include <vector>

#include "hamshallow/chebapprox.hpp"
#include "hamshallow/hamiltonian.hpp"

namespace hamshallow {

enum class PhaseKind { qsp_real, gqsp_laurent };

// A solved phase/angle sequence together with the scale factor applied to
// the target before synthesis and the certified reconstruction residual.
struct PhaseProgram {
  PhaseKind kind = PhaseKind::qsp_real;
  std::vector<double> phases;            // QSP phi_0..phi_d / GQSP theta_0..theta_d
  std::vector<double> conjugate_phases;  // QSP only: -phi_j + pi (1 - [j = d])
  double scale = 1.0;
  double residual = 0.0;
  Parity parity = Parity::even;  // QSP only
};

using Matrix2 = Eigen::Matrix2cd;

// e^{i phi_0 sigma_z} prod_j [W(x) e^{i phi_j sigma_z}] with
// W(x) = e^{i arccos(x) sigma_x}; the top-left entry is the realized P(x).
Matrix2 qsp_unitary(const std::vector<double>& phases, double x);

// Solves for symmetric phase factors whose realized Re P matches the target
// rescaled into strict sup-norm headroom; the scale and certified residual
// travel in the program.
PhaseProgram find_qsp_phases(const ChebyshevSeries& target, double tol);

// Re-checks a phase vector against a (scaled) target on a Chebyshev-node
// grid; this is the independent certificate behind PhaseProgram::residual.
double qsp_reconstruction_residual(const std::vector<double>& phases,
                                   const ChebyshevSeries& scaled_target,
                                   int nodes = 2000);

// Dense circuit unitary on 1 + M + N qubits realizing Re P of the program
// through interleaved zero-controlled phase gadgets and block-encoding
// applications; the global (-i)^d factor is cancelled so the top-left
// 2^N block is the real polynomial block itself.
Matrix real_qsp_circuit(const PhaseProgram& program, const BlockEncoding& be);

// Complementary polynomial with |L|^2 + |K|^2 = 1 on the circle, by
// spectral factorization of 1 - |L|^2 (roots of the associated ordinary
// polynomial split by the unit circle). K's leading coefficient is
// normalized real positive.
LaurentPoly complementary_poly(const LaurentPoly& L);

// Angle recursion peeling one signal layer at a time from the ends of the
// coefficient vectors. Requires (L, K) complementary and supported on
// indices of a single parity (split parity-mixed targets upstream).
PhaseProgram find_gqsp_angles(const LaurentPoly& L, const LaurentPoly& K);

// Top-left entry of R(theta_0) prod_j [A R(theta_j)] with the scalar signal
// z = e^{i theta}; reconstructs the realized Laurent polynomial.
cdouble gqsp_scalar_top_left(const std::vector<double>& thetas, double theta);

double gqsp_reconstruction_residual(const std::vector<double>& thetas,
                                    const LaurentPoly& target, int grid_points = 4096);

// max over a theta grid of ||L|^2 + |K|^2 - 1|.
double completeness_defect(const LaurentPoly& L, const LaurentPoly& K,
                           int grid_points = 4096);

// Full unitary on 1 + N qubits: R(theta_0) prod_j [A R(theta_j)] with
// A = |0><0| (x) U + |1><1| (x) U^dag; top-left 2^N block realizes L(U).
Matrix gqsp_circuit(const PhaseProgram& program, const Matrix& u);

}  // namespace hamshallow
