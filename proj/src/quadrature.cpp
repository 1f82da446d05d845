#include "realpart/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "realpart/errors.hpp"

namespace realpart {

namespace {

// QUADPACK qk21 abscissae (positive half) and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077712419889630, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss 10-point weights for the odd-indexed Kronrod nodes.
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kMergeGap = 1e-14;

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

Panel gauss_kronrod21(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[10];
  double gauss = 0.0;
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) {
    throw DomainError("integrand is not finite on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_panels < 8) {
    throw DomainError("QuadratureConfig requires abs_tol > 0, rel_tol > 0, max_panels >= 8");
  }
}

double QuadratureConfig::target(double value) const { return std::max(abs_tol, rel_tol * std::abs(value)); }

std::vector<double> cosine_zeros(double phase, double slope, double a, double b) {
  std::vector<double> out;
  if (!(a < b) || slope == 0.0) return out;
  // phase + slope * x = pi/2 + k pi
  const double pi = std::numbers::pi;
  const double u0 = phase + slope * a;
  const double u1 = phase + slope * b;
  const double lo = std::min(u0, u1);
  const double hi = std::max(u0, u1);
  const auto kmin = static_cast<long long>(std::ceil((lo - pi / 2) / pi)) - 1;
  const auto kmax = static_cast<long long>(std::floor((hi - pi / 2) / pi)) + 1;
  for (long long k = kmin; k <= kmax; ++k) {
    const double x = (pi / 2 + static_cast<double>(k) * pi - phase) / slope;
    if (x > a && x < b) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> kink_points(double beta, int n, double a, double b) {
  return cosine_zeros(beta, -static_cast<double>(n + 1), a, b);
}

std::vector<double> normalize_breakpoints(std::span<const double> breakpoints, double a, double b) {
  std::vector<double> pts(breakpoints.begin(), breakpoints.end());
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  double last = a;
  for (double x : pts) {
    if (!(x - a > kMergeGap) || !(b - x > kMergeGap)) continue;
    if (x - last <= kMergeGap) continue;
    out.push_back(x);
    last = x;
  }
  return out;
}

GaussLegendreRule gauss_legendre_rule(int order) {
  if (order < 1) throw DomainError("gauss_legendre_rule: order must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (order == 1) p0 = 1.0;
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

QuadratureResult integrate_panels(const Integrand& f, double a, double b, std::span<const double> breakpoints,
                                  const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(a < b)) throw DomainError("integrate_panels: requires a < b");

  const std::vector<double> inner = normalize_breakpoints(breakpoints, a, b);
  std::vector<double> edges;
  edges.reserve(inner.size() + 2);
  edges.push_back(a);
  edges.insert(edges.end(), inner.begin(), inner.end());
  edges.push_back(b);

  // Initial panels; the ones touching a kink are halved once.
  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i];
    const double hi = edges[i + 1];
    const bool at_kink = (i > 0) || (i + 2 < edges.size());
    if (at_kink && static_cast<int>(edges.size()) - 1 + static_cast<int>(panels.size()) < cfg.max_panels) {
      const double mid = 0.5 * (lo + hi);
      panels.push_back(gauss_kronrod21(f, lo, mid));
      panels.push_back(gauss_kronrod21(f, mid, hi));
    } else {
      panels.push_back(gauss_kronrod21(f, lo, hi));
    }
  }

  auto totals = [&panels]() {
    double v = 0.0;
    double e = 0.0;
    for (const auto& p : panels) {
      v += p.value;
      e += p.error;
    }
    return std::pair{v, e};
  };

  auto [value, error] = totals();
  while (error > cfg.target(value)) {
    if (static_cast<int>(panels.size()) >= cfg.max_panels) {
      std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
      std::tie(value, error) = totals();
      throw ConvergenceError("integrate_panels: tolerance not reached within " + std::to_string(cfg.max_panels) +
                                 " panels (estimate " + std::to_string(error) + ")",
                             value, error, static_cast<int>(panels.size()));
    }
    const auto worst = std::max_element(panels.begin(), panels.end(),
                                        [](const Panel& l, const Panel& r) { return l.error < r.error; });
    const double lo = worst->a;
    const double hi = worst->b;
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) {
      // panel width at machine resolution; nothing left to refine
      std::tie(value, error) = totals();
      throw ConvergenceError("integrate_panels: panel width underflow near x = " + std::to_string(lo), value, error,
                             static_cast<int>(panels.size()));
    }
    *worst = gauss_kronrod21(f, lo, mid);
    panels.push_back(gauss_kronrod21(f, mid, hi));
    std::tie(value, error) = totals();
  }

  // fixed left-to-right summation order
  std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  std::tie(value, error) = totals();
  return {value, error, static_cast<int>(panels.size())};
}

}  // namespace realpart
