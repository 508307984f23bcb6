#include <doctest.h>

#include <cmath>

#include "hamshallow/chebapprox.hpp"
#include "hamshallow/errors.hpp"

using namespace hamshallow;

TEST_SUITE("chebapprox") {

TEST_CASE("monomial_coeffs small cases are exact") {
  CHECK(monomial_coeffs(0).coeffs() == std::vector<double>{1.0});
  CHECK(monomial_coeffs(2).coeffs() == std::vector<double>{0.5, 0.0, 0.5});
  CHECK(monomial_coeffs(3).coeffs() == std::vector<double>{0.0, 0.75, 0.0, 0.25});
}

TEST_CASE("monomial_coeffs reproduces x^n on a grid for n <= 20") {
  for (int n = 0; n <= 20; ++n) {
    const ChebyshevSeries s = monomial_coeffs(n);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double x = -1.0 + 2.0 * i / 999.0;
      worst = std::max(worst, std::abs(cheb_eval(s, x) - std::pow(x, n)));
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("monomial coefficients are nonnegative and sum to 1 up to n = 200") {
  for (int n = 1; n <= 200; ++n) {
    const ChebyshevSeries series = monomial_coeffs(n);
    const auto& c = series.coeffs();
    double sum = 0.0;
    for (double v : c) {
      CHECK(v >= 0.0);
      sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("monomial parity matches n mod 2") {
  CHECK(monomial_coeffs(8).parity() == Parity::even);
  CHECK(monomial_coeffs(9).parity() == Parity::odd);
}

TEST_CASE("monomial_degree ceiling rule") {
  CHECK(monomial_degree(100, 1e-3) == 39);
  CHECK(monomial_degree(1, 0.5) == 1);
  const int d = monomial_degree(4, 2.0);
  CHECK(d >= 0);
  CHECK(d <= 1);
  auto [series, report] = monomial_approx(4, 2.0);
  CHECK(report.measured_sup_error <= error_bound_monomial(4, d));
  CHECK_THROWS_AS(monomial_degree(3, 0.0), parameter_error);
}

TEST_CASE("error_bound_monomial values") {
  CHECK(error_bound_monomial(4, 2) == doctest::Approx(2.0 * std::exp(-0.5)));
  CHECK(error_bound_monomial(17, 0) == doctest::Approx(2.0));
  CHECK(error_bound_monomial(100, 39) == doctest::Approx(9.96e-4).epsilon(1e-2));
}

TEST_CASE("monomial_approx certifies its bound") {
  SUBCASE("degenerate truncation") {
    auto [series, report] = monomial_approx(2, 3.0);
    CHECK(series.coeffs() == std::vector<double>{0.5});
    CHECK(report.guaranteed_bound == doctest::Approx(2.0));
    CHECK(report.measured_sup_error == doctest::Approx(0.5).epsilon(1e-6));
  }
  SUBCASE("n = 50") {
    auto [series, report] = monomial_approx(50, 1e-2);
    CHECK(monomial_degree(50, 1e-2) == 24);
    CHECK(report.measured_sup_error <= 1e-2);
    CHECK(report.measured_sup_error <= report.guaranteed_bound);
  }
  SUBCASE("exact for n = 1") {
    auto [series, report] = monomial_approx(1, 0.3);
    CHECK(series.coeffs() == std::vector<double>{0.0, 1.0});
    CHECK(report.measured_sup_error == 0.0);
  }
}

TEST_CASE("exp_approx ceilings and contract") {
  auto [series, report] = exp_approx(1.0, 0.1);
  CHECK(report.truncation_degree == 8);
  CHECK(detail::exp_plan(1.0, 0.1).d == 8);
  CHECK(report.measured_sup_error <= 0.1);
  CHECK(report.measured_sup_error <= report.guaranteed_bound);

  auto [s5, r5] = exp_approx(5.0, 0.5);
  CHECK(std::abs(cheb_eval(s5, -1.0) - 1.0) <= 0.5);

  CHECK_THROWS_AS(exp_approx(-1.0, 0.1), parameter_error);
  CHECK_THROWS_AS(exp_approx(1.0, 0.7), parameter_error);
}

TEST_CASE("gauss_approx ceilings, parity, contract") {
  auto [unit, runit] = gauss_approx(0.0, 1e-2);
  CHECK(unit.coeffs() == std::vector<double>{1.0});
  CHECK(runit.measured_sup_error == 0.0);

  auto [series, report] = gauss_approx(2.0, 1e-2);
  CHECK(report.truncation_degree == 15);
  CHECK(detail::exp_plan(2.0, 1e-2).d == 14);
  CHECK(series.parity() == Parity::even);
  CHECK(report.measured_sup_error <= 1e-2);
}

TEST_CASE("erf_approx structure and contract") {
  auto [tiny, rtiny] = erf_approx(1e-3, 1e-2);
  CHECK(cheb_eval(tiny, 0.0) == doctest::Approx(0.0));
  const double lead = 2.0 * 1e-3 / std::sqrt(M_PI) * std::exp(-0.5e-6);
  CHECK(tiny.coeff(1) == doctest::Approx(lead).epsilon(1e-6));

  auto [series, report] = erf_approx(3.0, 1e-2);
  CHECK(series.parity() == Parity::odd);
  CHECK(report.measured_sup_error <= 1e-2);
  for (int i = 0; i < 100; ++i) {
    const double x = -1.0 + 2.0 * i / 99.0;
    CHECK(cheb_eval(series, x) == doctest::Approx(-cheb_eval(series, -x)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(erf_approx(0.0, 1e-2), parameter_error);
}

TEST_CASE("delta-contract sweep for the exponential families") {
  for (double param : {0.5, 1.0, 2.0, 5.0}) {
    for (double delta : {1e-1, 1e-2, 1e-3}) {
      CHECK(exp_approx(param, delta).second.measured_sup_error <= delta);
      CHECK(gauss_approx(param, delta).second.measured_sup_error <= delta);
      CHECK(erf_approx(param, delta).second.measured_sup_error <= delta);
    }
  }
}

TEST_CASE("measured error never exceeds min(delta, chernoff bound)") {
  for (int n : {10, 50, 100}) {
    for (double delta : {1e-1, 1e-2, 1e-3}) {
      auto [series, report] = monomial_approx(n, delta);
      const int d = monomial_degree(n, delta);
      CHECK(report.measured_sup_error <=
            std::min(delta, error_bound_monomial(n, d)));
    }
  }
}

}  // TEST_SUITE
