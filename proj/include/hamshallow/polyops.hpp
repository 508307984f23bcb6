#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "hamshallow/grid.hpp"

namespace hamshallow {

using cdouble = std::complex<double>;

enum class Parity { even, odd, mixed };

// Finite Chebyshev-T series sum_j coeffs[j] T_j(x) on [-1,1]. Trailing
// exact zeros are trimmed at construction, so degree() is the index of the
// last nonzero coefficient; the zero series has degree 0 and coeffs {0}.
class ChebyshevSeries {
 public:
  ChebyshevSeries() : coeffs_{0.0} {}
  explicit ChebyshevSeries(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coeff(int j) const {
    return (j >= 0 && j < static_cast<int>(coeffs_.size())) ? coeffs_[j] : 0.0;
  }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

  // even iff every odd-index coefficient is exactly zero, odd iff every
  // even-index one is; the zero series counts as even.
  Parity parity() const;

  double l1_norm() const;

 private:
  std::vector<double> coeffs_;
};

// Laurent polynomial sum_k coeffs[k] z^k, k = -degree..degree, evaluated on
// the unit circle z = e^{i theta}. Degree is the largest |k| carrying a
// nonzero coefficient (support may be asymmetric, e.g. L(z) = z).
class LaurentPoly {
 public:
  LaurentPoly() : coeffs_{cdouble(0.0, 0.0)} {}
  // coeffs must have odd size 2d+1, ordered k = -d..d.
  explicit LaurentPoly(std::vector<cdouble> coeffs);

  static LaurentPoly from_terms(const std::vector<std::pair<int, cdouble>>& terms);

  int degree() const { return (static_cast<int>(coeffs_.size()) - 1) / 2; }
  const std::vector<cdouble>& coeffs() const { return coeffs_; }
  cdouble coeff(int k) const {
    const int idx = k + degree();
    return (idx >= 0 && idx < static_cast<int>(coeffs_.size())) ? coeffs_[idx]
                                                                : cdouble(0.0);
  }
  bool is_zero() const;

  // True iff coeff(-k) == conj(coeff(k)) for all k (exact comparison); such
  // polynomials take real values on the circle.
  bool real_on_circle() const;

  double l1_norm() const;

 private:
  std::vector<cdouble> coeffs_;
};

// Clenshaw evaluation of the series at x in [-1,1]. Throws
// std::domain_error outside the interval.
double cheb_eval(const ChebyshevSeries& series, double x);

// sum_k coeffs[k] e^{i k theta}; 2*pi-periodic in theta.
cdouble laurent_eval(const LaurentPoly& poly, double theta);

// Product linearization T_m T_n = (T_{m+n} + T_{|m-n|}) / 2.
ChebyshevSeries cheb_mul(const ChebyshevSeries& a, const ChebyshevSeries& b);

// Coefficient convolution; pointwise product on the circle.
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

ChebyshevSeries cheb_add(const ChebyshevSeries& a, const ChebyshevSeries& b);
ChebyshevSeries cheb_scale(const ChebyshevSeries& a, double s);
LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_scale(const LaurentPoly& a, cdouble s);

// Max-abs deviation from f_exact over a uniform grid: on [-1,1] for the
// Chebyshev form, on theta in [0, 2*pi) for the Laurent form. A lower bound
// on the true sup norm; grid_points must be >= 1000.
double sup_norm_error(const std::function<double(double)>& f_exact,
                      const ChebyshevSeries& approx, std::size_t grid_points,
                      grid::Exec exec = grid::Exec::parallel);
double sup_norm_error(const std::function<double(double)>& f_exact,
                      const LaurentPoly& approx, std::size_t grid_points,
                      grid::Exec exec = grid::Exec::parallel);

// Grid maxima of |series| / |poly| themselves (used for headroom rescaling).
double sup_abs(const ChebyshevSeries& series, std::size_t grid_points);
double sup_abs(const LaurentPoly& poly, std::size_t grid_points);

// Splits by coefficient-index parity: first has only even indices, second
// only odd ones; their sum is the input.
std::pair<ChebyshevSeries, ChebyshevSeries> cheb_split_parity(const ChebyshevSeries& s);
std::pair<LaurentPoly, LaurentPoly> laurent_split_parity(const LaurentPoly& p);

// L = re + i*im with both parts having real coefficients.
std::pair<LaurentPoly, LaurentPoly> laurent_split_real_imag(const LaurentPoly& p);

// True iff every coefficient has |imag| <= tol.
bool laurent_has_real_coeffs(const LaurentPoly& p, double tol = 0.0);

}  // namespace hamshallow
