#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hamshallow/polyops.hpp"

namespace hamshallow {

struct ApproxReport {
  std::string target_name;
  std::map<std::string, double> parameters;
  int truncation_degree = 0;  // Maclaurin truncation; 0 when not applicable
  int approx_degree = 0;      // degree of the emitted series / poly
  double guaranteed_bound = 0.0;
  double measured_sup_error = 0.0;
};

// Exact Chebyshev expansion of x^n: degree n, nonnegative coefficients
// summing to 1, parity n mod 2.
ChebyshevSeries monomial_coeffs(int n);

// min(n, ceil(sqrt(2 n ln(2/delta)))); truncating beyond n is vacuous.
int monomial_degree(int n, double delta);

// Tail bound 2 exp(-d^2 / (2n)) for the degree-d truncation of x^n.
double error_bound_monomial(int n, int d);

// Truncated expansion of x^n certified to the tail bound.
std::pair<ChebyshevSeries, ApproxReport> monomial_approx(int n, double delta);

// Truncated Maclaurin series of e^{-beta(1+x)} with each monomial replaced
// by its reduced-degree expansion. delta in (0, 1/2].
std::pair<ChebyshevSeries, ApproxReport> exp_approx(double beta, double delta);

// e^{-(gamma x)^2} via the substitution beta -> gamma^2/2, x -> T_2(x);
// even series of degree <= 2d.
std::pair<ChebyshevSeries, ApproxReport> gauss_approx(double gamma, double delta);

// erf(lambda x) by integrating the Gaussian approximant; odd series of
// degree <= 2d+1.
std::pair<ChebyshevSeries, ApproxReport> erf_approx(double lambda, double delta);

namespace detail {

// Rows 0..t of the monomial expansion table; row k holds the exact
// Chebyshev coefficients of x^k.
std::vector<std::vector<double>> monomial_table(int t);

// Signed Maclaurin weights e^{-beta} (-beta)^k / k!, k = 0..t, computed in
// log space to avoid overflow for large truncations.
std::vector<double> exp_weights(double beta, int t);

struct ExpPlan {
  int t;         // Maclaurin truncation degree
  int d;         // per-monomial reduction degree, capped at t
  double bound;  // rigorous total bound for the assembled series
};

// Ceiling rules t = ceil(max(beta e^2, ln(2/delta))),
// d = ceil(sqrt(2 t ln(4/delta))) for e^{-beta(1+x)}.
ExpPlan exp_plan(double beta, double delta);

// Ascending-magnitude compensated sum.
double stable_sum(std::vector<double> terms);

}  // namespace detail

}  // namespace hamshallow
