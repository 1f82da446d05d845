#pragma once

#include "realpart/quadrature.hpp"

namespace realpart {

/// Parameters of the kernel integral
///   Q(beta) = int_{-pi/2}^{pi/2} |cos(beta - (n+1) phi)|^gamma cos^{2m}(phi) dphi.
struct QSpec {
  int m = 0;
  int n = 0;
  double gamma = 1.0;
  double beta = 0.0;
};

enum class QRegime {
  low,         ///< m <= n: Q does not depend on beta
  high,        ///< m >= n+1 and gamma > 2 floor(m/(n+1)) - 2: max at beta = 0
  unresolved,  ///< m >= n+1 with gamma at or below the bound
};

const char* to_string(QRegime r);

/// Throws DomainError unless m, n >= 0 and gamma > -1.
void validate(const QSpec& spec);
QRegime regime(int m, int n, double gamma);

/// Quadrature value of Q, panels split at the kinks of |cos(beta - (n+1) phi)|.
double q_numeric(const QSpec& spec, const QuadratureConfig& cfg = {});
QuadratureResult q_numeric_detailed(const QSpec& spec, const QuadratureConfig& cfg = {});

/// dQ/dbeta by quadrature; gamma >= 1 only.
double q_derivative(const QSpec& spec, const QuadratureConfig& cfg = {});

/// Closed form of max_beta Q (= Q(0)) in the low and high regimes. Throws
/// DomainError naming the violated hypothesis otherwise.
double q_closed(int m, int n, double gamma);

/// sum_{j=0}^{n} cos^{2m}((theta + j pi)/(n+1)) through its reduced cosine
/// series.
double g_reduced(int m, int n, double theta);

/// The same sum evaluated term by term.
double g_raw(int m, int n, double theta);

struct QMaximum {
  double beta_star = 0.0;
  double value = 0.0;
};

/// Maximizes Q over beta in [0, pi/2] (pi-periodic and even in beta). Flat
/// objectives report beta_star = 0.
QMaximum q_maximize(int m, int n, double gamma, const QuadratureConfig& cfg = {});

}  // namespace realpart
