#include "hamshallow/laurentapprox.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hamshallow/errors.hpp"

namespace hamshallow {

namespace {

// All families here produce Hermitian coefficient vectors
// (coeff(-k) = conj(coeff(k))), so contributions are accumulated for
// k >= 0 only and mirrored by conjugation. Per-index sums run in
// ascending magnitude with compensation, mirroring chebapprox.
class HermitianBuilder {
 public:
  explicit HermitianBuilder(int degree) : bins_(degree + 1) {}

  void add(int k, cdouble v) { bins_[k].push_back(v); }

  LaurentPoly poly() const {
    const int d = static_cast<int>(bins_.size()) - 1;
    std::vector<cdouble> coeffs(2 * d + 1, cdouble(0.0));
    for (int k = 0; k <= d; ++k) {
      std::vector<double> re, im;
      re.reserve(bins_[k].size());
      im.reserve(bins_[k].size());
      for (const cdouble& c : bins_[k]) {
        re.push_back(c.real());
        im.push_back(c.imag());
      }
      const cdouble v(detail::stable_sum(std::move(re)),
                      detail::stable_sum(std::move(im)));
      coeffs[d + k] = v;
      coeffs[d - k] = std::conj(v);
    }
    return LaurentPoly(std::move(coeffs));
  }

 private:
  std::vector<std::vector<cdouble>> bins_;
};

// i^j for the sine substitution e^{i(pi/2-y)} = i z^-1.
cdouble ipow(int j) {
  switch (((j % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Emits the k >= 0 Laurent coefficients of weight * T_j(cos y) or
// weight * T_j(sin y): (z^j + z^-j)/2, with (-i)^j / i^j phases for sine.
void emit_tj_of_trig(HermitianBuilder& b, int j, double weight, TrigVariant v) {
  if (j == 0) {
    b.add(0, cdouble(weight, 0.0));
    return;
  }
  if (v == TrigVariant::cosine)
    b.add(j, cdouble(0.5 * weight, 0.0));
  else
    b.add(j, 0.5 * weight * ipow(-j));
}

double measure(const LaurentPoly& p, const std::function<double(double)>& f) {
  return sup_norm_error(f, p, grid::default_points());
}

double trig(double theta, TrigVariant v) {
  return v == TrigVariant::cosine ? std::cos(theta) : std::sin(theta);
}

}  // namespace

const char* trig_variant_name(TrigVariant variant) {
  return variant == TrigVariant::cosine ? "cos" : "sin";
}

std::pair<LaurentPoly, ApproxReport> trig_power_approx(int n, double delta,
                                                       TrigVariant variant) {
  if (n < 1) throw parameter_error("trig_power_approx: n must be >= 1");
  const int d = monomial_degree(n, delta);
  const auto row = monomial_coeffs(n).coeffs();

  HermitianBuilder builder(d);
  for (int j = 0; j <= std::min<int>(d, n); ++j)
    if (row[j] != 0.0) emit_tj_of_trig(builder, j, row[j], variant);
  LaurentPoly poly = builder.poly();

  ApproxReport report;
  report.target_name =
      std::string(trig_variant_name(variant)) + "^n(y)";
  report.parameters = {{"n", static_cast<double>(n)}, {"delta", delta}};
  if (variant == TrigVariant::sine && n % 2 == 1)
    report.parameters["global_phase_im"] = 1.0;
  report.truncation_degree = 0;
  report.approx_degree = poly.degree();
  report.guaranteed_bound = error_bound_monomial(n, d);
  report.measured_sup_error = measure(poly, [n, variant](double theta) {
    return std::pow(trig(theta, variant), n);
  });
  return {std::move(poly), report};
}

std::pair<LaurentPoly, ApproxReport> exp_trig_approx(double beta, double delta,
                                                     TrigVariant variant) {
  if (!(beta > 0.0)) throw parameter_error("exp_trig_approx: beta must be > 0");
  if (!(delta > 0.0 && delta <= 0.5))
    throw parameter_error("exp_trig_approx: delta must lie in (0, 1/2]");
  const auto plan = detail::exp_plan(beta, delta);
  const auto table = detail::monomial_table(plan.t);
  const auto weights = detail::exp_weights(beta, plan.t);

  HermitianBuilder builder(std::min(plan.d, plan.t));
  for (int k = 0; k <= plan.t; ++k)
    for (int j = 0; j <= std::min(k, plan.d); ++j)
      if (table[k][j] != 0.0)
        emit_tj_of_trig(builder, j, weights[k] * table[k][j], variant);
  LaurentPoly poly = builder.poly();

  ApproxReport report;
  report.target_name =
      std::string("exp(-beta(1+") + trig_variant_name(variant) + " y))";
  report.parameters = {{"beta", beta}, {"delta", delta}};
  report.truncation_degree = plan.t;
  report.approx_degree = poly.degree();
  report.guaranteed_bound = plan.bound;
  report.measured_sup_error = measure(poly, [beta, variant](double theta) {
    return std::exp(-beta * (1.0 + trig(theta, variant)));
  });
  return {std::move(poly), report};
}

std::pair<LaurentPoly, ApproxReport> gauss_trig_approx(double gamma, double delta,
                                                       TrigVariant variant) {
  if (!(gamma >= 0.0)) throw parameter_error("gauss_trig_approx: gamma must be >= 0");
  if (!(delta > 0.0 && delta <= 0.5))
    throw parameter_error("gauss_trig_approx: delta must lie in (0, 1/2]");
  ApproxReport report;
  report.target_name = std::string("exp(-(gamma ") +
                       trig_variant_name(variant) + " y)^2)";
  report.parameters = {{"gamma", gamma}, {"delta", delta}};
  if (gamma == 0.0) {
    report.guaranteed_bound = 0.0;
    return {LaurentPoly::from_terms({{0, cdouble(1.0, 0.0)}}), report};
  }
  const double beta = 0.5 * gamma * gamma;
  const auto plan = detail::exp_plan(beta, delta);
  const auto table = detail::monomial_table(plan.t);
  const auto weights = detail::exp_weights(beta, plan.t);

  // T_j(T_2(cos y)) lands on z^{+-2j}; T_2(sin y) = cos(2(pi/2 - y)) flips
  // the sign of the odd-j terms.
  HermitianBuilder builder(2 * std::min(plan.d, plan.t));
  for (int k = 0; k <= plan.t; ++k)
    for (int j = 0; j <= std::min(k, plan.d); ++j) {
      const double c = table[k][j];
      if (c == 0.0) continue;
      double w = weights[k] * c;
      if (variant == TrigVariant::sine && j % 2 == 1) w = -w;
      builder.add(2 * j, cdouble(j == 0 ? w : 0.5 * w, 0.0));
    }
  LaurentPoly poly = builder.poly();

  report.truncation_degree = plan.t;
  report.approx_degree = poly.degree();
  report.guaranteed_bound = plan.bound;
  report.measured_sup_error = measure(poly, [gamma, variant](double theta) {
    const double g = gamma * trig(theta, variant);
    return std::exp(-g * g);
  });
  return {std::move(poly), report};
}

std::pair<LaurentPoly, ApproxReport> erf_trig_approx(double lambda, double delta,
                                                     TrigVariant variant) {
  if (!(lambda > 0.0)) throw parameter_error("erf_trig_approx: lambda must be > 0");
  if (!(delta > 0.0 && delta <= 0.5))
    throw parameter_error("erf_trig_approx: delta must lie in (0, 1/2]");
  const double prefactor = 2.0 * lambda / std::sqrt(M_PI);
  const double delta_inner = delta / std::max(1.0, prefactor);
  const double beta = 0.5 * lambda * lambda;
  const auto plan = detail::exp_plan(beta, delta_inner);
  const auto table = detail::monomial_table(plan.t);
  auto weights = detail::exp_weights(beta, plan.t);
  for (double& w : weights) w *= prefactor;

  const int dmax = std::min(plan.d, plan.t);
  HermitianBuilder builder(2 * dmax + 1);
  for (int k = 0; k <= plan.t; ++k)
    for (int j = 0; j <= std::min(k, plan.d); ++j) {
      const double c = table[k][j];
      if (c == 0.0) continue;
      const double w = weights[k] * c;
      if (variant == TrigVariant::cosine) {
        // (c/2)[(z^{2j+1}+z^{-2j-1})/(2(2j+1)) - (z^{|2j-1|}+z^{-|2j-1|})/(2(2j-1))]
        builder.add(2 * j + 1, cdouble(0.5 * w / (2.0 * (2 * j + 1)), 0.0));
        builder.add(std::abs(2 * j - 1), cdouble(-0.5 * w / (2.0 * (2 * j - 1)), 0.0));
      } else if (j == 0) {
        // (c/2)(-i)(z - z^{-1})
        builder.add(1, cdouble(0.0, -0.5 * w));
      } else {
        // (c/2i)(-1)^j [(z^{2j+1}-z^{-2j-1})/(2(2j+1)) + (z^{2j-1}-z^{-2j+1})/(2(2j-1))]
        const double f = (j % 2 == 0 ? 1.0 : -1.0) * 0.5 * w;
        builder.add(2 * j + 1, cdouble(0.0, -f / (2.0 * (2 * j + 1))));
        builder.add(2 * j - 1, cdouble(0.0, -f / (2.0 * (2 * j - 1))));
      }
    }
  LaurentPoly poly = builder.poly();

  ApproxReport report;
  report.target_name =
      std::string("erf(lambda ") + trig_variant_name(variant) + " y)";
  report.parameters = {
      {"lambda", lambda}, {"delta", delta}, {"delta_inner", delta_inner}};
  if (variant == TrigVariant::sine) report.parameters["global_phase_im"] = 1.0;
  report.truncation_degree = plan.t;
  report.approx_degree = poly.degree();
  report.guaranteed_bound = std::min(delta, prefactor * plan.bound);
  report.measured_sup_error = measure(poly, [lambda, variant](double theta) {
    return std::erf(lambda * trig(theta, variant));
  });
  return {std::move(poly), report};
}

}  // namespace hamshallow
