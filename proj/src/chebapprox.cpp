#include "hamshallow/chebapprox.hpp"

#include <algorithm>
#include <cmath>

#include "hamshallow/errors.hpp"

namespace hamshallow {

namespace detail {

std::vector<std::vector<double>> monomial_table(int t) {
  std::vector<std::vector<double>> table;
  table.reserve(t + 1);
  table.push_back({1.0});
  for (int n = 1; n <= t; ++n) {
    const auto& prev = table.back();
    std::vector<double> next(n + 1, 0.0);
    // x T_j = (T_{j+1} + T_{|j-1|}) / 2, the random-walk step on indices.
    for (int j = 0; j < n; ++j) {
      const double half = 0.5 * prev[j];
      if (half == 0.0) continue;
      next[j + 1] += half;
      next[std::abs(j - 1)] += half;
    }
    table.push_back(std::move(next));
  }
  return table;
}

std::vector<double> exp_weights(double beta, int t) {
  std::vector<double> w(t + 1);
  for (int k = 0; k <= t; ++k) {
    const double log_mag =
        (k == 0 ? 0.0 : k * std::log(beta)) - std::lgamma(k + 1.0) - beta;
    w[k] = (k % 2 == 0 ? 1.0 : -1.0) * std::exp(log_mag);
  }
  return w;
}

ExpPlan exp_plan(double beta, double delta) {
  const int t = static_cast<int>(
      std::ceil(std::max(beta * std::exp(2.0), std::log(2.0 / delta))));
  const int d_formula = static_cast<int>(
      std::ceil(std::sqrt(2.0 * t * std::log(4.0 / delta))));
  const int d = std::min(d_formula, t);
  // Monomial tails vanish once d >= t; the Maclaurin tail e^{-beta-t} remains.
  const double mono_term =
      d >= t ? 0.0 : 2.0 * std::exp(-static_cast<double>(d) * d / (2.0 * t));
  const double bound = std::min(delta, mono_term + std::exp(-beta - t));
  return {t, d, bound};
}

double stable_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b); });
  double sum = 0.0, comp = 0.0;
  for (double v : terms) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace detail

namespace {

void check_delta_half(double delta) {
  if (!(delta > 0.0 && delta <= 0.5))
    throw parameter_error("delta must lie in (0, 1/2]");
}

double measure(const ChebyshevSeries& s, const std::function<double(double)>& f) {
  return sup_norm_error(f, s, grid::default_points());
}

// Assembled series coefficient j is sum_k weight[k] * scale_j(k) * c_{k,j};
// the per-(j,k) contributions are summed in ascending magnitude.
ChebyshevSeries assemble(const std::vector<std::vector<double>>& table,
                         const std::vector<double>& weights, int d,
                         int out_size,
                         const std::function<void(std::vector<std::vector<double>>&,
                                                  int, int, double)>& emit) {
  std::vector<std::vector<double>> contrib(out_size);
  const int t = static_cast<int>(table.size()) - 1;
  for (int k = 0; k <= t; ++k) {
    const int jmax = std::min(k, d);
    for (int j = 0; j <= jmax; ++j) {
      const double c = table[k][j];
      if (c == 0.0) continue;
      emit(contrib, j, k, weights[k] * c);
    }
  }
  std::vector<double> coeffs(out_size, 0.0);
  for (int j = 0; j < out_size; ++j)
    coeffs[j] = detail::stable_sum(std::move(contrib[j]));
  return ChebyshevSeries(std::move(coeffs));
}

}  // namespace

ChebyshevSeries monomial_coeffs(int n) {
  if (n < 0) throw parameter_error("monomial_coeffs: n must be >= 0");
  return ChebyshevSeries(detail::monomial_table(n).back());
}

int monomial_degree(int n, double delta) {
  if (n < 1) throw parameter_error("monomial_degree: n must be >= 1");
  if (!(delta > 0.0)) throw parameter_error("monomial_degree: delta must be > 0");
  const double raw = std::sqrt(2.0 * n * std::log(2.0 / delta));
  if (!(raw > 0.0)) return 0;
  return std::min(n, static_cast<int>(std::ceil(raw)));
}

double error_bound_monomial(int n, int d) {
  if (n < 1 || d < 0) throw parameter_error("error_bound_monomial: need n >= 1, d >= 0");
  return 2.0 * std::exp(-static_cast<double>(d) * d / (2.0 * n));
}

std::pair<ChebyshevSeries, ApproxReport> monomial_approx(int n, double delta) {
  const int d = monomial_degree(n, delta);
  const auto full = monomial_coeffs(n).coeffs();
  std::vector<double> trunc(full.begin(),
                            full.begin() + std::min<std::size_t>(d + 1, full.size()));
  ChebyshevSeries series(std::move(trunc));

  ApproxReport report;
  report.target_name = "x^n";
  report.parameters = {{"n", static_cast<double>(n)}, {"delta", delta}};
  report.truncation_degree = 0;
  report.approx_degree = series.degree();
  report.guaranteed_bound = error_bound_monomial(n, d);
  report.measured_sup_error =
      measure(series, [n](double x) { return std::pow(x, n); });
  return {std::move(series), report};
}

std::pair<ChebyshevSeries, ApproxReport> exp_approx(double beta, double delta) {
  if (!(beta > 0.0)) throw parameter_error("exp_approx: beta must be > 0");
  check_delta_half(delta);
  const auto plan = detail::exp_plan(beta, delta);
  const auto table = detail::monomial_table(plan.t);
  const auto weights = detail::exp_weights(beta, plan.t);

  ChebyshevSeries series = assemble(
      table, weights, plan.d, std::min(plan.d, plan.t) + 1,
      [](std::vector<std::vector<double>>& contrib, int j, int, double v) {
        contrib[j].push_back(v);
      });

  ApproxReport report;
  report.target_name = "exp(-beta(1+x))";
  report.parameters = {{"beta", beta}, {"delta", delta}};
  report.truncation_degree = plan.t;
  report.approx_degree = series.degree();
  report.guaranteed_bound = plan.bound;
  report.measured_sup_error = measure(
      series, [beta](double x) { return std::exp(-beta * (1.0 + x)); });
  return {std::move(series), report};
}

std::pair<ChebyshevSeries, ApproxReport> gauss_approx(double gamma, double delta) {
  if (!(gamma >= 0.0)) throw parameter_error("gauss_approx: gamma must be >= 0");
  check_delta_half(delta);
  if (gamma == 0.0) {
    ApproxReport report;
    report.target_name = "exp(-(gamma x)^2)";
    report.parameters = {{"gamma", 0.0}, {"delta", delta}};
    report.guaranteed_bound = 0.0;
    return {ChebyshevSeries({1.0}), report};
  }
  const double beta = 0.5 * gamma * gamma;
  const auto plan = detail::exp_plan(beta, delta);
  const auto table = detail::monomial_table(plan.t);
  const auto weights = detail::exp_weights(beta, plan.t);

  // T_j(T_2(x)) = T_{2j}(x): emit at doubled index.
  ChebyshevSeries series = assemble(
      table, weights, plan.d, 2 * std::min(plan.d, plan.t) + 1,
      [](std::vector<std::vector<double>>& contrib, int j, int, double v) {
        contrib[2 * j].push_back(v);
      });

  ApproxReport report;
  report.target_name = "exp(-(gamma x)^2)";
  report.parameters = {{"gamma", gamma}, {"delta", delta}};
  report.truncation_degree = plan.t;
  report.approx_degree = series.degree();
  report.guaranteed_bound = plan.bound;
  report.measured_sup_error = measure(series, [gamma](double x) {
    const double g = gamma * x;
    return std::exp(-g * g);
  });
  return {std::move(series), report};
}

std::pair<ChebyshevSeries, ApproxReport> erf_approx(double lambda, double delta) {
  if (!(lambda > 0.0)) throw parameter_error("erf_approx: lambda must be > 0");
  check_delta_half(delta);
  // The integral picks up the prefactor 2*lambda/sqrt(pi), so the inner
  // Gaussian approximation runs at a budget shrunk by that factor.
  const double prefactor = 2.0 * lambda / std::sqrt(M_PI);
  const double delta_inner = delta / std::max(1.0, prefactor);
  const double beta = 0.5 * lambda * lambda;
  const auto plan = detail::exp_plan(beta, delta_inner);
  const auto table = detail::monomial_table(plan.t);
  auto weights = detail::exp_weights(beta, plan.t);
  for (double& w : weights) w *= prefactor;

  ChebyshevSeries series = assemble(
      table, weights, plan.d, 2 * std::min(plan.d, plan.t) + 2,
      [](std::vector<std::vector<double>>& contrib, int j, int, double v) {
        // int_0^x T_{2j}(u) du = T_{2j+1}/(2(2j+1)) - T_{|2j-1|}/(2(2j-1));
        // at j = 0 both halves land on T_1 with total weight 1.
        contrib[2 * j + 1].push_back(v / (2.0 * (2 * j + 1)));
        contrib[std::abs(2 * j - 1)].push_back(-v / (2.0 * (2 * j - 1)));
      });

  ApproxReport report;
  report.target_name = "erf(lambda x)";
  report.parameters = {
      {"lambda", lambda}, {"delta", delta}, {"delta_inner", delta_inner}};
  report.truncation_degree = plan.t;
  report.approx_degree = series.degree();
  report.guaranteed_bound = std::min(delta, prefactor * plan.bound);
  report.measured_sup_error =
      measure(series, [lambda](double x) { return std::erf(lambda * x); });
  return {std::move(series), report};
}

}  // namespace hamshallow
