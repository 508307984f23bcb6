#include "hamshallow/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace hamshallow {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Matrix& u) {
  Matrix gram = u.adjoint() * u;
  return max_abs_diff(gram, Matrix::Identity(u.rows(), u.cols()));
}

Matrix hermitian_function(const Matrix& h, const std::function<cdouble(double)>& f) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& lambda = es.eigenvalues();
  Vector mapped(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) mapped(i) = f(lambda(i));
  return es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace hamshallow
