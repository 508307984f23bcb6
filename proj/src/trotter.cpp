#include "hamshallow/trotter.hpp"

#include <cmath>

#include "hamshallow/errors.hpp"

namespace hamshallow {

namespace {

constexpr int kMaxQubits = 10;

void check_size(const PauliHamiltonian& h) {
  if (h.qubits() > kMaxQubits)
    throw parameter_error("Trotter matrices are capped at N <= 10");
}

// exp(-i a P) = cos(a) I - i sin(a) P for any Pauli string (P^2 = I).
Matrix pauli_exponential(const Matrix& pauli, double a) {
  const Eigen::Index dim = pauli.rows();
  return std::cos(a) * Matrix::Identity(dim, dim) -
         cdouble(0.0, std::sin(a)) * pauli;
}

Matrix s2_from_paulis(const PauliHamiltonian& h,
                      const std::vector<Matrix>& paulis, double t) {
  const Eigen::Index dim = paulis.empty() ? 1 : paulis.front().rows();
  Matrix forward = Matrix::Identity(dim, dim);
  // eta = -i t / 2 on each normalized term, applied 0..J-1 then J-1..0.
  for (int l = 0; l < h.term_count(); ++l) {
    const double a = 0.5 * t * h.terms()[l].coeff / h.alpha();
    forward = pauli_exponential(paulis[l], a) * forward;
  }
  Matrix full = forward;
  for (int l = h.term_count() - 1; l >= 0; --l) {
    const double a = 0.5 * t * h.terms()[l].coeff / h.alpha();
    full = pauli_exponential(paulis[l], a) * full;
  }
  return full;
}

Matrix suzuki_recursive(const PauliHamiltonian& h,
                        const std::vector<Matrix>& paulis, double t, int v) {
  if (v == 1) return s2_from_paulis(h, paulis, t);
  const double u = suzuki_coefficient(v);
  const Matrix outer = suzuki_recursive(h, paulis, u * t, v - 1);
  const Matrix inner = suzuki_recursive(h, paulis, (1.0 - 4.0 * u) * t, v - 1);
  const Matrix outer2 = outer * outer;
  return outer2 * inner * outer2;
}

std::vector<Matrix> term_paulis(const PauliHamiltonian& h) {
  std::vector<Matrix> paulis;
  paulis.reserve(h.term_count());
  for (const PauliTerm& term : h.terms())
    paulis.push_back(pauli_string_matrix(term.pauli));
  return paulis;
}

}  // namespace

double suzuki_coefficient(int v) {
  if (v < 2) throw parameter_error("suzuki_coefficient needs v >= 2");
  return 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * v - 1.0)));
}

Matrix s2_matrix(const PauliHamiltonian& h, double t) {
  check_size(h);
  return s2_from_paulis(h, term_paulis(h), t);
}

Matrix suzuki_matrix(const PauliHamiltonian& h, double t, int v, int r) {
  check_size(h);
  if (v < 1 || v > 3) throw parameter_error("suzuki_matrix supports v in {1,2,3}");
  if (r < 1) throw parameter_error("suzuki_matrix needs r >= 1");
  const auto paulis = term_paulis(h);
  const Matrix step = suzuki_recursive(h, paulis, t / r, v);
  Matrix out = Matrix::Identity(step.rows(), step.cols());
  for (int i = 0; i < r; ++i) out = step * out;
  return out;
}

long trotter_steps(long d2, double delta, int v) {
  if (d2 < 1) throw parameter_error("trotter_steps needs d2 >= 1");
  if (!(delta > 0.0)) throw parameter_error("trotter_steps needs delta > 0");
  if (v < 1 || v > 3) throw parameter_error("trotter_steps supports v in {1,2,3}");
  const double r = std::pow(static_cast<double>(d2), 1.0 / v) /
                   std::pow(delta, 1.0 / (2.0 * v));
  return static_cast<long>(std::ceil(r));
}

double measured_trotter_error(const PauliHamiltonian& h, double t, int v, int r) {
  return max_abs_diff(suzuki_matrix(h, t, v, r), evolution_unitary(h, -t));
}

}  // namespace hamshallow
