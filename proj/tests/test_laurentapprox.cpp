#include <doctest.h>

#include <cmath>
#include <random>

#include "hamshallow/errors.hpp"
#include "hamshallow/laurentapprox.hpp"

using namespace hamshallow;

namespace {

// Every sine-variant approximant must equal the cosine variant composed
// with theta -> pi/2 - theta; this is the construction principle behind
// the sine formulas and the independent check on their sign bookkeeping.
void check_shift_identity(const LaurentPoly& cos_poly, const LaurentPoly& sin_poly,
                          double tol = 1e-10) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  for (int i = 0; i < 1000; ++i) {
    const double theta = u(rng);
    const cdouble a = laurent_eval(sin_poly, theta);
    const cdouble b = laurent_eval(cos_poly, M_PI / 2.0 - theta);
    CHECK(std::abs(a - b) <= tol);
  }
}

void check_index_parity(const LaurentPoly& p, int parity) {
  for (int k = -p.degree(); k <= p.degree(); ++k)
    if (std::abs(k) % 2 != parity) CHECK(p.coeff(k) == cdouble(0.0, 0.0));
}

}  // namespace

TEST_SUITE("laurentapprox") {

TEST_CASE("trig_power closed forms") {
  auto [cos2, rc] = trig_power_approx(2, 1e-6, TrigVariant::cosine);
  CHECK(cos2.coeff(0) == cdouble(0.5, 0.0));
  CHECK(cos2.coeff(2) == cdouble(0.25, 0.0));
  CHECK(cos2.coeff(-2) == cdouble(0.25, 0.0));

  auto [sin2, rs] = trig_power_approx(2, 1e-6, TrigVariant::sine);
  CHECK(sin2.coeff(0) == cdouble(0.5, 0.0));
  CHECK(sin2.coeff(2) == cdouble(-0.25, 0.0));
  CHECK(sin2.coeff(-2) == cdouble(-0.25, 0.0));

  auto [cos1, r1] = trig_power_approx(1, 0.3, TrigVariant::cosine);
  CHECK(cos1.coeff(1) == cdouble(0.5, 0.0));
  CHECK(r1.measured_sup_error <= 1e-15);
}

TEST_CASE("trig_power respects the monomial degree rule and parity") {
  auto [p, r] = trig_power_approx(100, 1e-3, TrigVariant::cosine);
  CHECK(r.approx_degree <= monomial_degree(100, 1e-3));
  check_index_parity(p, 0);
  CHECK(p.real_on_circle());
  CHECK(r.measured_sup_error <= 1e-3);
}

TEST_CASE("sine power of odd n has purely imaginary coefficients") {
  auto [p, r] = trig_power_approx(5, 1e-4, TrigVariant::sine);
  for (const cdouble& c : p.coeffs()) CHECK(c.real() == 0.0);
  CHECK(p.real_on_circle());
  CHECK(r.parameters.count("global_phase_im") == 1);
  CHECK(r.measured_sup_error <= 1e-4);
}

TEST_CASE("exp_trig endpoint and contract") {
  auto [p, r] = exp_trig_approx(1.0, 0.1, TrigVariant::cosine);
  // e^{-beta(1+cos pi)} = 1 at theta = pi.
  CHECK(std::abs(laurent_eval(p, M_PI) - cdouble(1.0, 0.0)) <= 0.1);
  CHECK(r.measured_sup_error <= 0.1);
  CHECK(p.real_on_circle());
}

TEST_CASE("gauss_trig structure") {
  auto [unit, runit] = gauss_trig_approx(0.0, 1e-2, TrigVariant::sine);
  CHECK(unit.degree() == 0);
  CHECK(unit.coeff(0) == cdouble(1.0, 0.0));

  auto [pc, rc] = gauss_trig_approx(2.0, 1e-2, TrigVariant::cosine);
  check_index_parity(pc, 0);
  CHECK(rc.measured_sup_error <= 1e-2);

  auto [ps, rs] = gauss_trig_approx(2.0, 1e-2, TrigVariant::sine);
  CHECK(rs.measured_sup_error <= 1e-2);
}

TEST_CASE("erf_trig structure and zeros") {
  auto [pc, rc] = erf_trig_approx(3.0, 1e-2, TrigVariant::cosine);
  check_index_parity(pc, 1);
  CHECK(rc.measured_sup_error <= 1e-2);
  // erf(lambda cos(pi/2)) = erf(0) = 0.
  CHECK(std::abs(laurent_eval(pc, M_PI / 2.0)) <= 1e-2);

  auto [ps, rs] = erf_trig_approx(3.0, 1e-2, TrigVariant::sine);
  check_index_parity(ps, 1);
  CHECK(rs.measured_sup_error <= 1e-2);
  CHECK(std::abs(laurent_eval(ps, 0.0)) <= 1e-2);
  for (const cdouble& c : ps.coeffs()) CHECK(c.real() == 0.0);
  CHECK(ps.real_on_circle());
}

TEST_CASE("shift identity ties every sine variant to its cosine twin") {
  for (int n : {2, 5, 10}) {
    auto cos_p = trig_power_approx(n, 1e-3, TrigVariant::cosine).first;
    auto sin_p = trig_power_approx(n, 1e-3, TrigVariant::sine).first;
    check_shift_identity(cos_p, sin_p);
  }
  for (double b : {0.5, 2.0}) {
    check_shift_identity(exp_trig_approx(b, 1e-2, TrigVariant::cosine).first,
                         exp_trig_approx(b, 1e-2, TrigVariant::sine).first);
    check_shift_identity(gauss_trig_approx(b, 1e-2, TrigVariant::cosine).first,
                         gauss_trig_approx(b, 1e-2, TrigVariant::sine).first);
    check_shift_identity(erf_trig_approx(b, 1e-2, TrigVariant::cosine).first,
                         erf_trig_approx(b, 1e-2, TrigVariant::sine).first);
  }
}

TEST_CASE("delta-contract sweep across all eight variants") {
  for (TrigVariant v : {TrigVariant::cosine, TrigVariant::sine}) {
    for (double delta : {1e-1, 1e-2, 1e-3}) {
      for (int n : {10, 50, 100})
        CHECK(trig_power_approx(n, delta, v).second.measured_sup_error <= delta);
      for (double p : {0.5, 1.0, 2.0, 5.0}) {
        CHECK(exp_trig_approx(p, delta, v).second.measured_sup_error <= delta);
        CHECK(gauss_trig_approx(p, delta, v).second.measured_sup_error <= delta);
        CHECK(erf_trig_approx(p, delta, v).second.measured_sup_error <= delta);
      }
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(trig_power_approx(0, 1e-2, TrigVariant::cosine), parameter_error);
  CHECK_THROWS_AS(exp_trig_approx(1.0, 0.6, TrigVariant::sine), parameter_error);
  CHECK_THROWS_AS(erf_trig_approx(-1.0, 1e-2, TrigVariant::cosine), parameter_error);
}

}  // TEST_SUITE
