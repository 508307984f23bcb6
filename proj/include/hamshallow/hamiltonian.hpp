#pragma once

#include <string>
#include <vector>

#include "hamshallow/grid.hpp"
#include "hamshallow/linalg.hpp"

namespace hamshallow {

struct PauliTerm {
  double coeff = 0.0;
  std::string pauli;  // length-N string over {I,X,Y,Z}, qubit 0 leftmost
};

// Weighted Pauli-string Hamiltonian H = sum_l kappa_l P_l, normalized by
// alpha = sum |kappa_l| so that the spectrum of H/alpha lies in [-1,1].
// Terms are merged, zero terms dropped, and the list kept in lexicographic
// string order for deterministic downstream products.
class PauliHamiltonian {
 public:
  static PauliHamiltonian from_terms(std::vector<PauliTerm> terms,
                                     int declared_qubits = 0);

  int qubits() const { return qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  double alpha() const { return alpha_; }
  int term_count() const { return static_cast<int>(terms_.size()); }  // J
  int locality() const { return locality_; }                          // k

  std::string summary() const;

 private:
  PauliHamiltonian() = default;

  int qubits_ = 0;
  std::vector<PauliTerm> terms_;
  double alpha_ = 0.0;
  int locality_ = 0;
};

// Parses {"qubits": N?, "terms": [{"pauli": "...", "coeff": c}, ...]}.
PauliHamiltonian parse_hamiltonian(const std::string& json_text);

// Dense 2^N x 2^N realization of one Pauli string.
Matrix pauli_string_matrix(const std::string& pauli);

Matrix dense_matrix(const PauliHamiltonian& h, bool normalized,
                    grid::Exec exec = grid::Exec::parallel);

// exp(i t H/alpha) via eigendecomposition.
Matrix evolution_unitary(const PauliHamiltonian& h, double t);

struct BlockEncoding {
  Matrix unitary;          // 2^{N+M} x 2^{N+M}
  int ancillas = 0;        // M = ceil(log2 J)
  int qubits = 0;          // N
  long depth_estimate = 0; // D_B = J (k + ceil(log2 J)), an estimate
};

// Prepare/select LCU at the matrix level: the top-left 2^N block of the
// returned unitary equals H/alpha.
BlockEncoding block_encoding(const PauliHamiltonian& h);

// (<0...0| (x) I) U (|0...0> (x) I): leading block_dim x block_dim corner.
Matrix top_left_block(const Matrix& u, Eigen::Index block_dim);

}  // namespace hamshallow
