#include "hamshallow/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "hamshallow/errors.hpp"

namespace hamshallow {

namespace {

constexpr int kMaxQubits = 12;       // dense H cap
constexpr int kMaxTotalQubits = 14;  // N + M cap for block-encodings

void check_pauli_chars(const std::string& s) {
  for (char c : s)
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
      throw usage_error("invalid Pauli character '" + std::string(1, c) + "'");
}

int weight(const std::string& s) {
  return static_cast<int>(std::count_if(
      s.begin(), s.end(), [](char c) { return c != 'I'; }));
}

}  // namespace

PauliHamiltonian PauliHamiltonian::from_terms(std::vector<PauliTerm> terms,
                                              int declared_qubits) {
  if (terms.empty()) throw usage_error("Hamiltonian needs at least one term");
  const int n = static_cast<int>(terms.front().pauli.size());
  if (n < 1) throw usage_error("Pauli strings must be non-empty");
  if (declared_qubits != 0 && declared_qubits != n)
    throw usage_error("declared qubit count disagrees with string length");
  if (n > kMaxQubits)
    throw parameter_error("qubit count exceeds the desk-scale cap of 12");

  std::map<std::string, double> merged;
  for (auto& t : terms) {
    check_pauli_chars(t.pauli);
    if (static_cast<int>(t.pauli.size()) != n)
      throw usage_error("inconsistent Pauli string lengths");
    merged[t.pauli] += t.coeff;
  }

  PauliHamiltonian h;
  h.qubits_ = n;
  for (auto& [pauli, coeff] : merged) {
    if (coeff == 0.0) continue;
    h.terms_.push_back({coeff, pauli});
    h.alpha_ += std::abs(coeff);
    h.locality_ = std::max(h.locality_, weight(pauli));
  }
  if (h.terms_.empty())
    throw usage_error("all terms cancelled; alpha must be positive");
  return h;
}

std::string PauliHamiltonian::summary() const {
  std::ostringstream os;
  os << "N=" << qubits_ << " J=" << term_count() << " k=" << locality_
     << " alpha=" << alpha_;
  return os.str();
}

PauliHamiltonian parse_hamiltonian(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("Hamiltonian JSON parse failure: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
    throw usage_error("Hamiltonian document needs a \"terms\" array");
  std::vector<PauliTerm> terms;
  for (const auto& t : doc["terms"]) {
    if (!t.contains("pauli") || !t.contains("coeff"))
      throw usage_error("each term needs \"pauli\" and \"coeff\"");
    terms.push_back({t["coeff"].get<double>(), t["pauli"].get<std::string>()});
  }
  const int declared = doc.value("qubits", 0);
  return PauliHamiltonian::from_terms(std::move(terms), declared);
}

Matrix pauli_string_matrix(const std::string& pauli) {
  const int n = static_cast<int>(pauli.size());
  const Eigen::Index dim = Eigen::Index(1) << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index row = col;
    cdouble phase(1.0, 0.0);
    for (int q = 0; q < n; ++q) {
      const Eigen::Index bit_mask = Eigen::Index(1) << (n - 1 - q);
      const bool bit = (col & bit_mask) != 0;
      switch (pauli[q]) {
        case 'X': row ^= bit_mask; break;
        case 'Y':
          row ^= bit_mask;
          phase *= bit ? cdouble(0.0, -1.0) : cdouble(0.0, 1.0);
          break;
        case 'Z':
          if (bit) phase = -phase;
          break;
        default: break;
      }
    }
    m(row, col) = phase;
  }
  return m;
}

Matrix dense_matrix(const PauliHamiltonian& h, bool normalized, grid::Exec exec) {
  const int n = h.qubits();
  const Eigen::Index dim = Eigen::Index(1) << n;
  Matrix m = Matrix::Zero(dim, dim);
  const double scale = normalized ? 1.0 / h.alpha() : 1.0;

  const auto fill_column = [&](Eigen::Index col) {
    for (const PauliTerm& term : h.terms()) {
      Eigen::Index row = col;
      cdouble phase(term.coeff * scale, 0.0);
      for (int q = 0; q < n; ++q) {
        const Eigen::Index bit_mask = Eigen::Index(1) << (n - 1 - q);
        const bool bit = (col & bit_mask) != 0;
        switch (term.pauli[q]) {
          case 'X': row ^= bit_mask; break;
          case 'Y':
            row ^= bit_mask;
            phase *= bit ? cdouble(0.0, -1.0) : cdouble(0.0, 1.0);
            break;
          case 'Z':
            if (bit) phase = -phase;
            break;
          default: break;
        }
      }
      m(row, col) += phase;
    }
  };

  if (exec == grid::Exec::serial) {
    for (Eigen::Index col = 0; col < dim; ++col) fill_column(col);
  } else {
#pragma omp parallel for schedule(static)
    for (long long col = 0; col < static_cast<long long>(dim); ++col)
      fill_column(static_cast<Eigen::Index>(col));
  }
  return m;
}

Matrix evolution_unitary(const PauliHamiltonian& h, double t) {
  return hermitian_function(dense_matrix(h, true),
                            [t](double lambda) { return std::polar(1.0, t * lambda); });
}

BlockEncoding block_encoding(const PauliHamiltonian& h) {
  const int n = h.qubits();
  const int j_terms = h.term_count();
  int m = 0;
  while ((1 << m) < j_terms) ++m;
  if (n + m > kMaxTotalQubits)
    throw parameter_error("block encoding exceeds the N+M <= 14 cap");

  const Eigen::Index anc_dim = Eigen::Index(1) << m;
  const Eigen::Index sys_dim = Eigen::Index(1) << n;

  // PREP |0^M> = sum_l sqrt(|kappa_l|/alpha) |l>, completed to a unitary by
  // a Householder reflection; any completion works since only column 0
  // enters the block.
  Matrix prep = Matrix::Identity(anc_dim, anc_dim);
  if (m > 0) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(anc_dim);
    for (int l = 0; l < j_terms; ++l)
      v(l) = std::sqrt(std::abs(h.terms()[l].coeff) / h.alpha());
    Eigen::VectorXd w = v;
    w(0) -= 1.0;
    const double norm2 = w.squaredNorm();
    if (norm2 > 1e-28) {
      Eigen::MatrixXd q =
          Eigen::MatrixXd::Identity(anc_dim, anc_dim) - (2.0 / norm2) * w * w.transpose();
      prep = q.cast<cdouble>();
    }
  }

  // SELECT = sum_l |l><l| (x) sign(kappa_l) P_l, identity on l >= J.
  Matrix select = Matrix::Zero(anc_dim * sys_dim, anc_dim * sys_dim);
  for (Eigen::Index l = 0; l < anc_dim; ++l) {
    Matrix op;
    if (l < j_terms) {
      const PauliTerm& term = h.terms()[l];
      op = pauli_string_matrix(term.pauli);
      if (term.coeff < 0.0) op = -op;
    } else {
      op = Matrix::Identity(sys_dim, sys_dim);
    }
    select.block(l * sys_dim, l * sys_dim, sys_dim, sys_dim) = op;
  }

  const Matrix prep_sys = kron(prep, Matrix::Identity(sys_dim, sys_dim));
  BlockEncoding be;
  be.unitary = prep_sys.adjoint() * select * prep_sys;
  be.ancillas = m;
  be.qubits = n;
  be.depth_estimate = static_cast<long>(j_terms) * (h.locality() + m);
  return be;
}

Matrix top_left_block(const Matrix& u, Eigen::Index block_dim) {
  return u.topLeftCorner(block_dim, block_dim);
}

}  // namespace hamshallow
