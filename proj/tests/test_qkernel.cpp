#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "realpart/errors.hpp"
#include "realpart/qkernel.hpp"

using namespace realpart;
using doctest::Approx;

constexpr double kPi = std::numbers::pi;

TEST_CASE("q_numeric examples") {
  CHECK(q_numeric({0, 3, 1.0, 0.7}) == Approx(2.0).epsilon(1e-12));
  CHECK(q_numeric({1, 0, 2.0, 0.0}) == Approx(3.0 * kPi / 8.0).epsilon(1e-12));
  CHECK(q_numeric({2, 4, 2.0, 1.1}) == Approx(3.0 * kPi / 16.0).epsilon(1e-12));
}

TEST_CASE("q_closed examples") {
  CHECK(q_closed(1, 0, 2.0) == Approx(3.0 * kPi / 8.0).epsilon(1e-14));
  CHECK(q_closed(0, 5, 1.0) == Approx(2.0).epsilon(1e-14));
  CHECK(q_closed(3, 6, 1.0) == Approx(5.0 / 8.0).epsilon(1e-14));
}

TEST_CASE("q_closed rejects the unresolved regime") {
  CHECK(regime(2, 0, 2.0) == QRegime::unresolved);
  try {
    q_closed(2, 0, 2.0);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("gamma") != std::string::npos);
  }
  CHECK_THROWS_AS(validate(QSpec{-1, 0, 1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(validate(QSpec{0, 0, -1.0, 0.0}), DomainError);
}

TEST_CASE("regimes") {
  CHECK(regime(1, 3, 1.0) == QRegime::low);
  CHECK(regime(3, 3, 0.5) == QRegime::low);
  CHECK(regime(3, 1, 2.0) == QRegime::high);
  CHECK(regime(4, 0, 6.5) == QRegime::high);
  CHECK(regime(4, 0, 6.0) == QRegime::unresolved);
  CHECK(std::string(to_string(QRegime::high)) == "high");
}

TEST_CASE("g_reduced examples and agreement with the raw sum") {
  CHECK(g_reduced(1, 0, 0.0) == Approx(1.0).epsilon(1e-15));
  CHECK(g_reduced(2, 3, 0.3) == Approx(1.5).epsilon(1e-14));
  CHECK(g_reduced(2, 1, 0.0) == Approx(1.0).epsilon(1e-14));
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n)
      for (double th : {-2.0, 0.0, 0.4, 3.0}) CHECK(g_reduced(m, n, th) == Approx(g_raw(m, n, th)).epsilon(1e-12));
}

TEST_CASE("q_maximize examples") {
  const QMaximum a = q_maximize(2, 0, 2.0);
  CHECK(std::abs(a.beta_star) < 1e-6);
  CHECK(a.value == Approx(q_numeric({2, 0, 2.0, 0.0})).epsilon(1e-12));
  const QMaximum b = q_maximize(1, 3, 1.0);
  CHECK(b.beta_star == 0.0);
  CHECK(b.value == Approx(1.0).epsilon(1e-12));
  const QMaximum c = q_maximize(3, 1, 2.0);
  CHECK(c.value == Approx(q_closed(3, 1, 2.0)).epsilon(1e-9));
}

TEST_CASE("Q is even and pi-periodic in beta") {
  for (double b : {0.3, 1.2, 2.9}) {
    const QSpec s{3, 1, 1.5, b};
    const double v = q_numeric(s);
    CHECK(q_numeric({3, 1, 1.5, -b}) == Approx(v).epsilon(1e-10));
    CHECK(q_numeric({3, 1, 1.5, b + kPi}) == Approx(v).epsilon(1e-10));
  }
}

TEST_CASE("q_derivative matches a central difference") {
  const double h = 1e-5;
  for (double b : {0.2, 0.8, 1.3}) {
    const double d = q_derivative({4, 1, 2.5, b});
    const double fd = (q_numeric({4, 1, 2.5, b + h}) - q_numeric({4, 1, 2.5, b - h})) / (2 * h);
    CHECK(d == Approx(fd).epsilon(1e-6));
  }
  CHECK_THROWS_AS(q_derivative({1, 1, 0.5, 0.1}), DomainError);
}
