#pragma once

#include <functional>
#include <span>
#include <vector>

namespace realpart {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  int max_panels = 4096;

  /// Throws DomainError unless abs_tol > 0, rel_tol > 0 and max_panels >= 8.
  void validate() const;
  double target(double value) const;
};

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int panels = 0;
};

using Integrand = std::function<double(double)>;

/// Zeros of cos(phase + slope * x) strictly inside (a, b), increasing.
std::vector<double> cosine_zeros(double phase, double slope, double a, double b);

/// Points of (a, b) where cos(beta - (n + 1) phi) vanishes, i.e. where
/// |cos(beta - (n + 1) phi)|^gamma loses smoothness.
std::vector<double> kink_points(double beta, int n, double a, double b);

/// Adaptive Gauss-Kronrod (21-point, embedded 10-point Gauss) integration
/// of f over [a, b]. Panels never straddle a breakpoint; panels touching an
/// interior breakpoint are bisected once up front. The worst panel is
/// bisected until the summed error estimate meets cfg, otherwise a
/// ConvergenceError carrying the best value is thrown. The integrand is
/// never evaluated at a panel endpoint.
QuadratureResult integrate_panels(const Integrand& f, double a, double b, std::span<const double> breakpoints,
                                  const QuadratureConfig& cfg = {});

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton on P_order).
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre_rule(int order);

/// Breakpoints sorted, clipped to (a, b) and merged when closer than 1e-14.
std::vector<double> normalize_breakpoints(std::span<const double> breakpoints, double a, double b);

}  // namespace realpart
