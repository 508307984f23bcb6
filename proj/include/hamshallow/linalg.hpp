#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace hamshallow {

using cdouble = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

Matrix kron(const Matrix& a, const Matrix& b);

// max-abs entry of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);

// ||U^dag U - I||_max.
double unitarity_defect(const Matrix& u);

// V f(diag(lambda)) V^dag for Hermitian h. The scalar map receives the
// real eigenvalues.
Matrix hermitian_function(const Matrix& h, const std::function<cdouble(double)>& f);

}  // namespace hamshallow
