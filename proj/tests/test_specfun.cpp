#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "realpart/errors.hpp"
#include "realpart/specfun.hpp"

using namespace realpart;
using doctest::Approx;

TEST_CASE("log_gamma at simple points") {
  CHECK(specfun::log_gamma(1.0) == Approx(0.0).epsilon(1e-15));
  CHECK(specfun::log_gamma(0.5) == Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
  CHECK(specfun::log_gamma(5.0) == Approx(std::log(24.0)).epsilon(1e-14));
  CHECK_THROWS_AS(specfun::log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(specfun::log_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(specfun::log_gamma(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("beta function") {
  CHECK(specfun::beta_fn(1.5, 0.5) == Approx(std::numbers::pi / 2).epsilon(1e-14));
  CHECK(specfun::beta_fn(1.0, 0.5) == Approx(2.0).epsilon(1e-14));
  CHECK(specfun::beta_fn(3.0, 1.0) == Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(specfun::log_beta(3.0, 1.0) == Approx(-std::log(3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(specfun::beta_fn(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(specfun::beta_fn(1.0, -2.0), DomainError);
}

TEST_CASE("beta symmetry and recurrence on a grid") {
  for (double a = 0.25; a <= 50.0; a *= 1.7) {
    for (double b = 0.1; b <= 50.0; b *= 1.9) {
      CHECK(specfun::beta_fn(a, b) == Approx(specfun::beta_fn(b, a)).epsilon(1e-14));
      CHECK(specfun::beta_fn(a + 1.0, b) * (a + b) / a == Approx(specfun::beta_fn(a, b)).epsilon(1e-11));
    }
  }
}

TEST_CASE("double factorial") {
  CHECK(specfun::double_factorial(7) == 105.0);
  CHECK(specfun::double_factorial(0) == 1.0);
  CHECK(specfun::double_factorial(-1) == 1.0);
  CHECK(specfun::double_factorial(15) == 2027025.0);
  CHECK_THROWS_AS(specfun::double_factorial(-2), DomainError);
  for (int m = 1; m <= 10; ++m) {
    CHECK(specfun::factorial(2 * m) == specfun::double_factorial(2 * m) * specfun::double_factorial(2 * m - 1));
  }
}

TEST_CASE("double factorial switches to log space past the threshold") {
  for (int k : {5, 6, 21, 40}) {
    CHECK(specfun::double_factorial(k, 0) == Approx(specfun::double_factorial(k)).epsilon(1e-13));
    CHECK(specfun::log_double_factorial(k, 0) == Approx(std::log(specfun::double_factorial(k))).epsilon(1e-14));
  }
  CHECK(std::isfinite(specfun::log_double_factorial(1001)));
  CHECK(specfun::log_double_factorial(1001) + specfun::log_double_factorial(1000) ==
        Approx(specfun::log_factorial(1001)).epsilon(1e-13));
}

TEST_CASE("factorial and binomial") {
  CHECK(specfun::factorial(0) == 1.0);
  CHECK(specfun::factorial(10) == 3628800.0);
  for (int n = 0; n <= 20; ++n) CHECK(std::exp(specfun::log_gamma(n + 1.0)) == Approx(specfun::factorial(n)).epsilon(1e-12));
  CHECK(specfun::binomial(5, 2) == 10.0);
  CHECK(specfun::binomial(60, 30) == Approx(1.1826458156486e17).epsilon(1e-12));
  CHECK(specfun::binomial(7, 0) == 1.0);
  CHECK(specfun::double_factorial_ratio(3) == Approx(5.0 / 16.0).epsilon(1e-15));
}
