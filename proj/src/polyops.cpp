#include "hamshallow/polyops.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "hamshallow/errors.hpp"

namespace hamshallow {

namespace {

std::vector<double> trim_trailing_zeros(std::vector<double> v) {
  while (v.size() > 1 && v.back() == 0.0) v.pop_back();
  if (v.empty()) v.push_back(0.0);
  return v;
}

}  // namespace

ChebyshevSeries::ChebyshevSeries(std::vector<double> coeffs)
    : coeffs_(trim_trailing_zeros(std::move(coeffs))) {}

Parity ChebyshevSeries::parity() const {
  bool odd_all_zero = true;
  bool even_all_zero = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0.0) continue;
    if (j % 2 == 0)
      even_all_zero = false;
    else
      odd_all_zero = false;
  }
  if (odd_all_zero) return Parity::even;
  if (even_all_zero) return Parity::odd;
  return Parity::mixed;
}

double ChebyshevSeries::l1_norm() const {
  double s = 0.0;
  for (double c : coeffs_) s += std::abs(c);
  return s;
}

LaurentPoly::LaurentPoly(std::vector<cdouble> coeffs) {
  if (coeffs.empty() || coeffs.size() % 2 == 0)
    throw usage_error("LaurentPoly coefficient vector must have odd size 2d+1");
  const int d = (static_cast<int>(coeffs.size()) - 1) / 2;
  int eff = 0;
  for (int k = -d; k <= d; ++k)
    if (coeffs[k + d] != cdouble(0.0, 0.0)) eff = std::max(eff, std::abs(k));
  coeffs_.assign(coeffs.begin() + (d - eff), coeffs.begin() + (d + eff + 1));
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, cdouble>>& terms) {
  int d = 0;
  for (const auto& [k, c] : terms) d = std::max(d, std::abs(k));
  std::vector<cdouble> coeffs(2 * d + 1, cdouble(0.0));
  for (const auto& [k, c] : terms) coeffs[k + d] += c;
  return LaurentPoly(std::move(coeffs));
}

bool LaurentPoly::is_zero() const {
  for (const cdouble& c : coeffs_)
    if (c != cdouble(0.0)) return false;
  return true;
}

bool LaurentPoly::real_on_circle() const {
  const int d = degree();
  for (int k = 0; k <= d; ++k)
    if (coeff(-k) != std::conj(coeff(k))) return false;
  return true;
}

double LaurentPoly::l1_norm() const {
  double s = 0.0;
  for (const cdouble& c : coeffs_) s += std::abs(c);
  return s;
}

double cheb_eval(const ChebyshevSeries& series, double x) {
  if (!(x >= -1.0 && x <= 1.0))
    throw std::domain_error("cheb_eval: x outside [-1,1]");
  const auto& c = series.coeffs();
  const int d = series.degree();
  double b1 = 0.0, b2 = 0.0;
  for (int j = d; j >= 1; --j) {
    const double t = c[j] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = t;
  }
  return c[0] + x * b1 - b2;
}

cdouble laurent_eval(const LaurentPoly& poly, double theta) {
  const auto& c = poly.coeffs();
  const int d = poly.degree();
  const cdouble z = std::polar(1.0, theta);
  // Horner in z on the shifted ordinary polynomial, then undo the z^d shift.
  cdouble s(0.0);
  for (int m = 2 * d; m >= 0; --m) s = s * z + c[m];
  return s * std::polar(1.0, -static_cast<double>(d) * theta);
}

ChebyshevSeries cheb_mul(const ChebyshevSeries& a, const ChebyshevSeries& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<double> out(ca.size() + cb.size() - 1, 0.0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0.0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      const double p = 0.5 * ca[i] * cb[j];
      out[i + j] += p;
      out[static_cast<std::size_t>(
          std::abs(static_cast<int>(i) - static_cast<int>(j)))] += p;
    }
  }
  return ChebyshevSeries(std::move(out));
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
  const int da = a.degree(), db = b.degree();
  const int d = da + db;
  std::vector<cdouble> out(2 * d + 1, cdouble(0.0));
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (int i = 0; i < static_cast<int>(ca.size()); ++i) {
    if (ca[i] == cdouble(0.0)) continue;
    for (int j = 0; j < static_cast<int>(cb.size()); ++j)
      out[i + j] += ca[i] * cb[j];
  }
  return LaurentPoly(std::move(out));
}

ChebyshevSeries cheb_add(const ChebyshevSeries& a, const ChebyshevSeries& b) {
  std::vector<double> out(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = a.coeff(static_cast<int>(j)) + b.coeff(static_cast<int>(j));
  return ChebyshevSeries(std::move(out));
}

ChebyshevSeries cheb_scale(const ChebyshevSeries& a, double s) {
  std::vector<double> out = a.coeffs();
  for (double& c : out) c *= s;
  return ChebyshevSeries(std::move(out));
}

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) {
  const int d = std::max(a.degree(), b.degree());
  std::vector<cdouble> out(2 * d + 1, cdouble(0.0));
  for (int k = -d; k <= d; ++k) out[k + d] = a.coeff(k) + b.coeff(k);
  return LaurentPoly(std::move(out));
}

LaurentPoly laurent_scale(const LaurentPoly& a, cdouble s) {
  std::vector<cdouble> out = a.coeffs();
  for (cdouble& c : out) c *= s;
  return LaurentPoly(std::move(out));
}

namespace {

void check_grid_points(std::size_t grid_points) {
  if (grid_points < 1000)
    throw parameter_error("sup_norm_error: grid_points must be >= 1000");
}

}  // namespace

double sup_norm_error(const std::function<double(double)>& f_exact,
                      const ChebyshevSeries& approx, std::size_t grid_points,
                      grid::Exec exec) {
  check_grid_points(grid_points);
  return grid::max_abs(
      grid_points,
      [&](std::size_t i) {
        const double x = grid::unit_interval_node(i, grid_points);
        return f_exact(x) - cheb_eval(approx, x);
      },
      exec);
}

double sup_norm_error(const std::function<double(double)>& f_exact,
                      const LaurentPoly& approx, std::size_t grid_points,
                      grid::Exec exec) {
  check_grid_points(grid_points);
  return grid::max_abs(
      grid_points,
      [&](std::size_t i) {
        const double theta = grid::circle_node(i, grid_points);
        return std::abs(cdouble(f_exact(theta), 0.0) - laurent_eval(approx, theta));
      },
      exec);
}

double sup_abs(const ChebyshevSeries& series, std::size_t grid_points) {
  return grid::max_abs(grid_points, [&](std::size_t i) {
    return cheb_eval(series, grid::unit_interval_node(i, grid_points));
  });
}

double sup_abs(const LaurentPoly& poly, std::size_t grid_points) {
  return grid::max_abs(grid_points, [&](std::size_t i) {
    return std::abs(laurent_eval(poly, grid::circle_node(i, grid_points)));
  });
}

std::pair<ChebyshevSeries, ChebyshevSeries> cheb_split_parity(const ChebyshevSeries& s) {
  std::vector<double> even(s.coeffs().size(), 0.0), odd(s.coeffs().size(), 0.0);
  for (std::size_t j = 0; j < s.coeffs().size(); ++j)
    (j % 2 == 0 ? even[j] : odd[j]) = s.coeffs()[j];
  return {ChebyshevSeries(std::move(even)), ChebyshevSeries(std::move(odd))};
}

std::pair<LaurentPoly, LaurentPoly> laurent_split_parity(const LaurentPoly& p) {
  const int d = p.degree();
  std::vector<cdouble> even(2 * d + 1, cdouble(0.0)), odd(2 * d + 1, cdouble(0.0));
  for (int k = -d; k <= d; ++k)
    (std::abs(k) % 2 == 0 ? even[k + d] : odd[k + d]) = p.coeff(k);
  return {LaurentPoly(std::move(even)), LaurentPoly(std::move(odd))};
}

std::pair<LaurentPoly, LaurentPoly> laurent_split_real_imag(const LaurentPoly& p) {
  const int d = p.degree();
  std::vector<cdouble> re(2 * d + 1, cdouble(0.0)), im(2 * d + 1, cdouble(0.0));
  for (int k = -d; k <= d; ++k) {
    re[k + d] = cdouble(p.coeff(k).real(), 0.0);
    im[k + d] = cdouble(p.coeff(k).imag(), 0.0);
  }
  return {LaurentPoly(std::move(re)), LaurentPoly(std::move(im))};
}

bool laurent_has_real_coeffs(const LaurentPoly& p, double tol) {
  for (const cdouble& c : p.coeffs())
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

}  // namespace hamshallow
