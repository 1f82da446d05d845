#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "realpart/constants.hpp"
#include "realpart/errors.hpp"
#include "realpart/specfun.hpp"

using namespace realpart;
using doctest::Approx;

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;
const ExponentP kInf = ExponentP::infinity();

TEST_CASE("exponent parsing") {
  CHECK(ExponentP::parse("inf").is_infinite());
  const ExponentP a = ExponentP::parse("3/2");
  REQUIRE(a.exact());
  CHECK(a.exact()->num == 3);
  CHECK(a.exact()->den == 2);
  CHECK(a.q() == Approx(3.0));
  const ExponentP b = ExponentP::parse("2.5");
  CHECK(b.exact()->num == 5);
  CHECK(b.exact()->den == 2);
  CHECK(ExponentP::parse("6/4").to_string() == "3/2");
  CHECK(ExponentP::parse("1").is_one());
  CHECK(ExponentP::from_double(4.0 / 3.0).exact()->den == 3);
  CHECK_THROWS_AS(ExponentP::parse("0.5"), DomainError);
  CHECK_THROWS_AS(ExponentP::parse("abc"), DomainError);
  CHECK_THROWS_AS(ExponentP::parse("1/0"), DomainError);
}

TEST_CASE("admissibility") {
  CHECK_THROWS_AS(check_admissible(0, kInf), AdmissibilityError);
  CHECK_THROWS_AS(check_admissible(-1, ExponentP::rational(2)), AdmissibilityError);
  CHECK_NOTHROW(check_admissible(0, ExponentP::rational(2)));
  CHECK_THROWS_AS(k_sharp({0, kInf, std::nullopt}), AdmissibilityError);
}

TEST_CASE("k_alpha examples") {
  for (double a : {0.0, 0.4, 1.1}) CHECK(k_alpha(1, kInf, a) == Approx(2.0 / kPi).epsilon(1e-12));
  CHECK(k_alpha(2, kInf, 0.0) == Approx(3.0 * std::sqrt(3.0) / (2.0 * kPi)).epsilon(1e-12));
  CHECK(k_alpha(1, ExponentP::rational(2), kPi / 4) == Approx(1.0 / (2.0 * std::sqrt(kPi))).epsilon(1e-12));
}

TEST_CASE("k_alpha at n = 0 with a singular weight") {
  // p = 3/2: q = 3, weight cos^{1}; p = 4: q = 4/3, weight cos^{-2/3}
  const double v = k_alpha(0, ExponentP::rational(3, 2), 0.3);
  CHECK(std::isfinite(v));
  const double w = k_alpha(0, ExponentP::rational(4), 0.3);
  CHECK(std::isfinite(w));
  CHECK(k_alpha(0, ExponentP::rational(4), -0.3) == Approx(w).epsilon(1e-10));
  // n = 0, p = 2: int cos^2 phi dphi = pi/2 for every alpha
  CHECK(k_alpha(0, ExponentP::rational(2), 0.9) == Approx(std::sqrt(kPi / 2) / kPi).epsilon(1e-12));
}

TEST_CASE("k_sharp examples") {
  const ConstantResult k2 = k_sharp({2, kInf, std::nullopt});
  CHECK(k2.value == Approx(0.8269933431326881).epsilon(1e-12));
  CHECK(k2.method_string() == "closed_form(M2)");
  CHECK(k_sharp({3, kInf, std::nullopt}).value == Approx(6.0 / kPi).epsilon(1e-14));
  const ConstantResult k6 = k_sharp({6, kInf, std::nullopt});
  CHECK(k6.method == Method::quadrature);
  CHECK(std::abs(k6.value - 155.63) < 0.01);
  REQUIRE(k6.alpha_star);
  CHECK(std::abs(*k6.alpha_star) < 1e-6);
}

TEST_CASE("k_sharp without the registry") {
  const SharpOptions quad{false, 256};
  CHECK(k_sharp({2, kInf, std::nullopt}, {}, quad).value == Approx(3 * std::sqrt(3.0) / (2 * kPi)).epsilon(1e-10));
  CHECK(k_sharp({4, kInf, std::nullopt}, {}, quad).value ==
        Approx(3 * (16 + 5 * std::sqrt(5.0)) / (4 * kPi)).epsilon(1e-10));
  const ConstantResult k8 = k_sharp({8, kInf, std::nullopt}, {}, quad);
  CHECK(std::abs(*k8.alpha_star - kHalfPi) < 1e-6);
  CHECK(k8.value == Approx(7470.2147864992).epsilon(1e-10));
}

TEST_CASE("k_sharp with a fixed alpha returns the profile value") {
  const ConstantResult r = k_sharp({4, kInf, 0.3});
  CHECK(r.value == Approx(k_alpha(4, kInf, 0.3)).epsilon(1e-14));
}

TEST_CASE("closed_form_lookup examples") {
  const auto a = closed_form_lookup(4, ExponentP::rational(1));
  REQUIRE(a);
  CHECK(a->id == "M3-p1");
  CHECK(a->value == Approx(24.0 / kPi).epsilon(1e-14));
  const auto b = closed_form_lookup(2, ExponentP::rational(2));
  REQUIRE(b);
  CHECK(b->id == "M3-p2");
  CHECK(b->value == Approx(std::sqrt(24.0 / (32.0 * kPi))).epsilon(1e-14));
  const auto c = closed_form_lookup(2, ExponentP::rational(4));
  REQUIRE(c);
  CHECK(c->id == "C-3.6");
  const double expected = 2.0 / kPi *
                          std::pow(std::sqrt(kPi) * 0.5 * std::tgamma(2.0 / 3 + 0.5) / std::tgamma(2.0 / 3 + 1.0), 0.75);
  CHECK(c->value == Approx(expected).epsilon(1e-13));
  CHECK(closed_form_lookup(6, kInf)->id == "E-6");
  CHECK(closed_form_lookup(8, kInf)->id == "E-8");
  CHECK_FALSE(closed_form_lookup(2, ExponentP::rational(7, 3)));
}

TEST_CASE("Beta-sum exponent index and value") {
  CHECK(beta_sum_index(1, ExponentP::rational(2)) == 1);
  CHECK(beta_sum_index(3, kInf) == 1);
  CHECK(beta_sum_index(1, ExponentP::rational(3, 2)) == 2);
  CHECK(beta_sum_index(2, ExponentP::rational(4)) == 1);
  CHECK_FALSE(beta_sum_index(2, ExponentP::rational(5)));
  for (int n = 1; n <= 10; ++n) {
    const double m3 = std::sqrt(specfun::factorial(2 * n) / (std::pow(2.0, 2 * n + 1) * kPi));
    CHECK(beta_sum_value(n, n) == Approx(m3).epsilon(1e-12));
  }
  for (int m = 0; m <= 8; ++m) {
    const double df = specfun::double_factorial(2 * m + 1);
    CHECK(beta_sum_value(2 * m + 1, m) == Approx(2.0 / kPi * df * df / (2 * m + 1)).epsilon(1e-12));
  }
}

TEST_CASE("bounds and asymptotics") {
  const BoundsPair b1 = bounds_even(1);
  CHECK(b1.lower == Approx(2.0 / kPi).epsilon(1e-14));
  CHECK(b1.upper == Approx(4.0 / kPi).epsilon(1e-14));
  CHECK(bounds_even(2).lower == Approx(18.0 / kPi).epsilon(1e-14));
  CHECK(bounds_even(2).upper == Approx(24.0 / kPi).epsilon(1e-14));
  CHECK(bounds_even(3).lower == Approx(143.2394488).epsilon(1e-9));
  CHECK(bounds_even(3).upper == Approx(171.8873385).epsilon(1e-9));
  CHECK_THROWS_AS(bounds_even(0), DomainError);
  CHECK(asymptotic_main_term(1) == Approx(2.0 / kPi).epsilon(1e-14));
  CHECK(asymptotic_main_term(4) == Approx(22050.0 / kPi).epsilon(1e-14));
  const BoundsPair big = bounds_even(400);
  CHECK(std::isfinite(big.log_lower));
  CHECK(big.log_upper - big.log_lower == Approx(std::log(800.0 / 799.0)).epsilon(1e-10));
}

TEST_CASE("Lambda_m and dK/dalpha") {
  for (double phi : {0.1, 0.7, 1.4}) CHECK(lambda_m(1, phi) == Approx(-2.0 * std::sin(phi / 3.0)).epsilon(1e-14));
  CHECK(std::abs(lambda_m(3, kHalfPi)) < 1e-13);
  CHECK(lambda_m(3, 0.1) < 0.0);
  CHECK(std::abs(dk_dalpha(3, 0.0)) < 1e-15);
  CHECK(dk_dalpha(3, kPi / 4) < 0.0);
  CHECK(dk_dalpha(4, kPi / 4) > 0.0);
  for (int m = 1; m <= 4; ++m) {
    for (double a : {0.3, 0.9}) {
      const double d = dk_dalpha(m, a);
      CHECK(d == Approx(k_alpha_derivative(2 * m, kInf, a)).epsilon(1e-8));
      CHECK(d == Approx(k_alpha_central_difference(2 * m, kInf, a, 1e-5)).epsilon(1e-6));
    }
  }
}

TEST_CASE("exterior bound") {
  CHECK(exterior_bound(1, 2.0) == Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(exterior_bound(3, 1.0) == Approx(6.0 / kPi).epsilon(1e-14));
  CHECK(exterior_bound(2, 1.0) == Approx(3.0 * std::sqrt(3.0) / (2.0 * kPi)).epsilon(1e-14));
  CHECK_THROWS_AS(exterior_bound(2, 0.0), DomainError);
}

TEST_CASE("large n goes through log space") {
  const ConstantResult r = k_sharp({201, kInf, std::nullopt});
  CHECK(r.formula_id == "M1");
  CHECK(std::isinf(r.value));
  const double df = specfun::log_double_factorial(201);
  CHECK(r.log_value == Approx(std::log(2.0 / kPi) + 2 * df - std::log(201.0)).epsilon(1e-12));
}
