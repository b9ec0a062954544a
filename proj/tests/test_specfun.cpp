#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "lacdhva/errors.hpp"
#include "lacdhva/specfun.hpp"
#include "oracles.hpp"

using namespace lacdhva;
using specfun::kummer_poly;

TEST_CASE("kummer_poly closed cases") {
  for (int b = 1; b <= 6; ++b)
    for (double xi : {0.0, 0.3, 7.5, 49.0}) CHECK(kummer_poly(0, b, xi) == 1.0);

  for (int m = 0; m <= 5; ++m)
    for (double xi : {0.0, 0.25, 3.0, 12.0})
      CHECK(kummer_poly(-1, m + 1, xi) == doctest::Approx(1.0 - xi / (m + 1)).epsilon(1e-15));

  // Hand expansion of the Pochhammer series; also L_2^(0)(x) = (x^2 - 4x + 2)/2.
  for (double xi : {0.0, 0.5, 1.0, 2.0 - std::sqrt(2.0) + 0.1, 4.0, 20.0}) {
    const double expected = 1.0 - 2.0 * xi + 0.5 * xi * xi;
    CHECK(kummer_poly(-2, 1, xi) == doctest::Approx(expected).epsilon(1e-14).scale(1.0));
    CHECK(oracle::laguerre(2, 0, xi) == doctest::Approx(expected).epsilon(1e-14).scale(1.0));
  }
}

TEST_CASE("kummer_poly domain errors") {
  CHECK_THROWS_AS((void)kummer_poly(1, 1, 0.5), DomainError);
  CHECK_THROWS_AS((void)kummer_poly(-1, 0, 0.5), DomainError);
  CHECK_THROWS_AS((void)kummer_poly(-1, 1, -0.5), DomainError);
  CHECK_THROWS_AS((void)kummer_poly(-1, 1, std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS((void)kummer_poly(-1.5, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS((void)kummer_poly(-1.0, 2.5, 0.5), DomainError);
  CHECK_THROWS_AS((void)kummer_poly(2.0, 1.0, 0.5), DomainError);
  CHECK(kummer_poly(-3.0, 2.0, 1.25) == kummer_poly(-3, 2, 1.25));
}

TEST_CASE("Horner evaluation matches term-by-term summation") {
  // Near a root the value itself vanishes, so the error is measured against
  // the sum of absolute terms, the natural rounding scale of the series.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> a_dist(1, 30);
  std::uniform_int_distribution<int> b_dist(1, 20);
  std::uniform_real_distribution<double> x_dist(0.0, 50.0);
  double worst = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const int n = a_dist(rng);
    const int b = b_dist(rng);
    const double x = x_dist(rng);
    double scale = 0.0;
    const double ref = oracle::kummer_terms(n, b, x, &scale);
    worst = std::max(worst, oracle::rel_diff(kummer_poly(-n, b, x), ref, scale));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("Laguerre connection C(n+alpha, n) F(-n, alpha+1, x) = L_n^alpha(x)") {
  double worst = 0.0;
  for (int n = 0; n <= 10; ++n) {
    for (int alpha = 0; alpha <= 10; ++alpha) {
      for (int j = 0; j <= 200; ++j) {
        const double x = 0.1 * j;
        const double c = oracle::binomial(n + alpha, n);
        double scale = 0.0;
        (void)oracle::kummer_terms(n, alpha + 1, x, &scale);
        worst = std::max(worst, oracle::rel_diff(c * kummer_poly(-n, alpha + 1, x), oracle::laguerre(n, alpha, x),
                                                 c * scale));
      }
    }
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("log_factorial") {
  double exact = 1.0;
  for (int n = 0; n <= 20; ++n) {
    if (n > 0) exact *= n;
    CHECK(specfun::log_factorial(n) == doctest::Approx(std::log(exact)).epsilon(1e-15));
  }
  CHECK(specfun::log_factorial(21) - specfun::log_factorial(20) == doctest::Approx(std::log(21.0)).epsilon(1e-12));
  CHECK(std::isfinite(specfun::log_factorial(100000)));
  CHECK_THROWS_AS((void)specfun::log_factorial(-1), DomainError);
}

TEST_CASE("integrate_radial") {
  CHECK(specfun::integrate_radial([](double) { return 1.0; }, 2.0, 16) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(specfun::integrate_radial([](double r) { return r; }, 1.0, 16) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  const double gauss = specfun::integrate_radial([](double r) { return std::exp(-r * r); }, 10.0, 256);
  CHECK(std::abs(gauss - 0.5) < 1e-12);

  CHECK_THROWS_AS((void)specfun::integrate_radial([](double) { return 1.0; }, 0.0, 16), PreconditionError);
  CHECK_THROWS_AS((void)specfun::integrate_radial([](double) { return 1.0; }, 1.0, 15), PreconditionError);
  CHECK_THROWS_AS((void)specfun::integrate_radial([](double r) { return r > 0.5 ? NAN : 1.0; }, 1.0, 64),
                  NumericError);
}

TEST_CASE("radial normalization") {
  SUBCASE("Gaussian ground state: c = 1/a") {
    for (double a : {1.0, 0.37, 4.89e-8}) CHECK(specfun::radial_norm(0, 0, a) == doctest::Approx(1.0 / a).epsilon(1e-12));
  }

  SUBCASE("|m| = 1 against an independent Simpson quadrature") {
    const double a = 1.0;
    const double c = specfun::radial_norm(0, 1, a);
    const double integral = oracle::simpson(
        [&](double r) {
          const double amp = c * r * std::exp(-r * r / (4 * a * a));
          return amp * amp * r;
        },
        0.0, a * specfun::radial_cutoff(0, 1), 20000);
    CHECK(std::abs(integral - 1.0) < 1e-10);
    CHECK(c == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  }

  SUBCASE("quadrature matches the factorial closed form") {
    for (int n = 0; n <= 10; ++n)
      for (int m = 0; m <= 10; ++m) {
        CHECK(specfun::radial_norm_dimensionless(n, m) ==
              doctest::Approx(specfun::radial_norm_closed_form(n, m)).epsilon(1e-12));
        CHECK(specfun::radial_norm_closed_form(n, m) ==
              doctest::Approx(1.0 / std::sqrt(oracle::norm_integral_closed(n, m))).epsilon(1e-13));
      }
    // Log-space closed form stays finite where factorials overflow.
    CHECK(std::isfinite(specfun::radial_norm_closed_form(200, 300)));
  }

  SUBCASE("rescaling a by 2 rescales the constant by 2^-(|m|+1)") {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 2; ++n) {
        const double c1 = specfun::radial_norm(n, m, 0.5);
        const double c2 = specfun::radial_norm(n, m, 1.0);
        CHECK(c2 / c1 == doctest::Approx(std::pow(2.0, -(m + 1))).epsilon(1e-12));
        for (const auto& [a, c] : {std::pair{0.5, c1}, std::pair{1.0, c2}}) {
          const double integral = oracle::simpson(
              [&, a = a, c = c](double r) {
                const double amp =
                    c * std::pow(r, m) * std::exp(-r * r / (4 * a * a)) * oracle::kummer_terms(n, m + 1, r * r / (2 * a * a));
                return amp * amp * r;
              },
              0.0, a * specfun::radial_cutoff(n, m), 20000);
          CHECK(std::abs(integral - 1.0) < 1e-10);
        }
      }
    }
  }

  CHECK_THROWS_AS((void)specfun::radial_norm(-1, 0, 1.0), DomainError);
  CHECK_THROWS_AS((void)specfun::radial_norm(0, -1, 1.0), DomainError);
  CHECK_THROWS_AS((void)specfun::radial_norm(0, 0, 0.0), DomainError);
}
