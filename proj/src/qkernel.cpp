#include "realpart/qkernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "realpart/errors.hpp"
#include "realpart/maximize.hpp"
#include "realpart/specfun.hpp"

namespace realpart {

namespace {

constexpr double kPi = std::numbers::pi;

// cos^k with integer k, avoiding pow for the common case
double int_pow(double x, int k) {
  double r = 1.0;
  while (k > 0) {
    if (k & 1) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}

double abs_pow(double x, double gamma) {
  const double ax = std::abs(x);
  if (gamma == 1.0) return ax;
  if (gamma == 2.0) return ax * ax;
  return std::pow(ax, gamma);
}

}  // namespace

const char* to_string(QRegime r) {
  switch (r) {
    case QRegime::low:
      return "low";
    case QRegime::high:
      return "high";
    case QRegime::unresolved:
      return "unresolved";
  }
  return "?";
}

void validate(const QSpec& spec) {
  if (spec.m < 0 || spec.n < 0) throw DomainError("QSpec: m and n must be >= 0");
  if (!(spec.gamma > -1.0) || !std::isfinite(spec.gamma)) throw DomainError("QSpec: gamma must be > -1");
  if (!std::isfinite(spec.beta)) throw DomainError("QSpec: beta must be finite");
}

QRegime regime(int m, int n, double gamma) {
  if (m <= n) return QRegime::low;
  return gamma > 2.0 * (m / (n + 1)) - 2.0 ? QRegime::high : QRegime::unresolved;
}

QuadratureResult q_numeric_detailed(const QSpec& spec, const QuadratureConfig& cfg) {
  validate(spec);
  const double slope = spec.n + 1.0;
  const int mu = 2 * spec.m;
  auto f = [&](double phi) { return abs_pow(std::cos(spec.beta - slope * phi), spec.gamma) * int_pow(std::cos(phi), mu); };
  const auto kinks = kink_points(spec.beta, spec.n, -kPi / 2, kPi / 2);
  return integrate_panels(f, -kPi / 2, kPi / 2, kinks, cfg);
}

double q_numeric(const QSpec& spec, const QuadratureConfig& cfg) { return q_numeric_detailed(spec, cfg).value; }

double q_derivative(const QSpec& spec, const QuadratureConfig& cfg) {
  validate(spec);
  if (spec.gamma < 1.0) throw DomainError("q_derivative: requires gamma >= 1");
  const double slope = spec.n + 1.0;
  const int mu = 2 * spec.m;
  // d/dbeta |c|^g = -g |c|^(g-1) sgn(c) sin(arg)
  auto f = [&](double phi) {
    const double arg = spec.beta - slope * phi;
    const double c = std::cos(arg);
    const double mag = spec.gamma == 1.0 ? 1.0 : std::pow(std::abs(c), spec.gamma - 1.0);
    return -spec.gamma * mag * std::copysign(1.0, c) * std::sin(arg) * int_pow(std::cos(phi), mu);
  };
  const auto kinks = kink_points(spec.beta, spec.n, -kPi / 2, kPi / 2);
  return integrate_panels(f, -kPi / 2, kPi / 2, kinks, cfg).value;
}

double q_closed(int m, int n, double gamma) {
  if (m < 0 || n < 0) throw DomainError("q_closed: m and n must be >= 0");
  const double base = specfun::double_factorial_ratio(m) * specfun::beta_fn((gamma + 1.0) / 2.0, 0.5);
  if (m <= n) {
    if (!(gamma > -1.0)) throw DomainError("q_closed: m <= n requires gamma > -1");
    return base;
  }
  const int jmax = m / (n + 1);
  const double bound = 2.0 * jmax - 2.0;
  if (!(gamma > bound)) {
    throw DomainError("q_closed: m >= n+1 requires gamma > 2*floor(m/(n+1)) - 2 = " + std::to_string(bound));
  }
  // pi / (2^(2m+gamma-1) (gamma+1)) * sum_j C(2m, m - j(n+1)) / B(gamma/2+j+1, gamma/2-j+1)
  double sum = 0.0;
  for (int j = 1; j <= jmax; ++j) {
    const double c = specfun::binomial(2 * m, m - j * (n + 1));
    sum += c * std::exp(-specfun::log_beta(gamma / 2 + j + 1, gamma / 2 - j + 1));
  }
  const double pref = kPi * std::exp2(-(2.0 * m + gamma - 1.0)) / (gamma + 1.0);
  return base + pref * sum;
}

double g_reduced(int m, int n, double theta) {
  if (m < 0 || n < 0) throw DomainError("g_reduced: m and n must be >= 0");
  const double np1 = n + 1.0;
  double r = specfun::double_factorial_ratio(m) * np1;
  if (m == 0) return r;
  const int smax = m / (n + 1);
  double sum = 0.0;
  for (int s = 1; s <= smax; ++s) sum += specfun::binomial(2 * m, m - s * (n + 1)) * std::cos(2.0 * s * theta);
  return r + np1 * std::exp2(-(2.0 * m - 1.0)) * sum;
}

double g_raw(int m, int n, double theta) {
  if (m < 0 || n < 0) throw DomainError("g_raw: m and n must be >= 0");
  double s = 0.0;
  for (int j = 0; j <= n; ++j) s += int_pow(std::cos((theta + j * kPi) / (n + 1.0)), 2 * m);
  return s;
}

QMaximum q_maximize(int m, int n, double gamma, const QuadratureConfig& cfg) {
  validate(QSpec{m, n, gamma, 0.0});
  auto f = [&](double beta) { return q_numeric(QSpec{m, n, gamma, beta}, cfg); };
  std::function<double(double)> df;
  if (gamma >= 1.0) df = [&](double beta) { return q_derivative(QSpec{m, n, gamma, beta}, cfg); };
  MaximizeOptions opts;
  opts.grid_points = 128;
  const auto r = grid_golden_maximize(f, 0.0, kPi / 2, opts, df);
  return {r.x, r.value};
}

}  // namespace realpart
