#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "realpart/exponent.hpp"
#include "realpart/quadrature.hpp"

namespace realpart {

// K_{n,p}(alpha) is the best constant in
//   |Re{e^{i alpha} f^(n)(z)}| <= K_{n,p}(alpha) (Im z)^{-n-1/p} ||Re f||_p
// for analytic f in the upper half-plane, and K_{n,p} = max_alpha K_{n,p}(alpha)
// is the constant for |f^(n)(z)|. For finite conjugate exponent q,
//   K_{n,p}(alpha) = (n!/pi) { int_{-pi/2}^{pi/2} |cos(alpha - (n+1) phi + n pi/2)|^q
//                                cos^{(n+1)q-2}(phi) dphi }^{1/q}.

struct ConstantQuery {
  int n = 1;
  ExponentP p = ExponentP::infinity();
  std::optional<double> alpha;
};

enum class Method { quadrature, closed_form };

struct ConstantResult {
  double value = 0.0;        ///< +inf when only log_value is representable
  double log_value = 0.0;
  Method method = Method::quadrature;
  std::string formula_id;    ///< registry id for closed forms
  std::optional<double> alpha_star;
  double err_estimate = 0.0;

  std::string method_string() const;  ///< "quadrature" or "closed_form(<id>)"
};

/// Throws AdmissibilityError for n < 0 and for (n = 0, p = inf), whose
/// integrand cos^{-1} is not integrable.
void check_admissible(int n, const ExponentP& p);

struct KAlphaValue {
  double value = 0.0;
  double log_value = 0.0;
  double err_estimate = 0.0;
  double integral = 0.0;  ///< the braced integral before the 1/q power
};

/// K_{n,p}(alpha) by quadrature. Requires finite q (p > 1).
KAlphaValue k_alpha_detailed(int n, const ExponentP& p, double alpha, const QuadratureConfig& cfg = {});
double k_alpha(int n, const ExponentP& p, double alpha, const QuadratureConfig& cfg = {});

/// dK_{n,p}/dalpha by differentiating under the integral sign.
double k_alpha_derivative(int n, const ExponentP& p, double alpha, const QuadratureConfig& cfg = {});

/// (K(alpha+h) - K(alpha-h)) / (2h), with the difference taken inside a
/// single integrand so that large K values do not cancel.
double k_alpha_central_difference(int n, const ExponentP& p, double alpha, double h,
                                  const QuadratureConfig& cfg = {});

struct SharpOptions {
  bool allow_closed_form = true;
  int grid_points = 256;
};

/// K_{n,p} = max over alpha in [0, pi/2]. p = 1 is always answered by the
/// closed form n!/pi. With allow_closed_form, registry entries other than
/// E-6/E-8 short-circuit the maximization. If query.alpha is set, K(alpha)
/// is returned instead.
ConstantResult k_sharp(const ConstantQuery& query, const QuadratureConfig& cfg = {}, const SharpOptions& opts = {});

struct ClosedForm {
  double value = 0.0;
  std::string id;
  double log_value = 0.0;
};

/// Registry of explicit formulas, most specific first:
/// M1/M2/M3-p1/M3-p2 > E-6/E-8 > C-3.6/C-k > T1-mlen/T1-general.
std::optional<ClosedForm> closed_form_lookup(int n, const ExponentP& p);

/// m such that p = 2(m+1)/(2m+1-n) exactly (n >= 1, n <= 2m+1), if any.
std::optional<int> beta_sum_index(int n, const ExponentP& p);

/// K_{n,p} at p = 2(m+1)/(2m+1-n) from the Beta/binomial formula; the finite
/// sum is empty when m <= n.
double beta_sum_value(int n, int m);
double even_order_value(int m);        ///< K_{2m, 2m+2}
double family_k_value(int n, int k);          ///< K_{n, 2k/(2k-1)}
double odd_order_infinity(int m);          ///< K_{2m+1, inf}
double printed_k6();                       ///< trigonometric expression printed for K_{6,inf}
double printed_k8();                       ///< trigonometric expression printed for K_{8,inf}

/// L_{2m} < K_{2m,inf} < U_{2m}, U/L = 2m/(2m-1).
struct BoundsPair {
  int m = 1;
  double lower = 0.0;
  double upper = 0.0;
  double log_lower = 0.0;
  double log_upper = 0.0;
};
BoundsPair bounds_even(int m);

/// Leading term (2/pi)((2m-1)!!)^2 of K_{2m,inf}.
double asymptotic_main_term(int m);
double log_asymptotic_main_term(int m);

/// Lambda_m(phi) = sum_{l=1}^{m} (-1)^l (2l-1) C(2m-1, m-l)
///                 sin((2l-1) phi/(2m+1)) / sin((2l-1) pi/(2(2m+1))).
double lambda_m(int m, double phi);

/// dK_{2m,inf}/dalpha through Lambda_m.
double dk_dalpha(int m, double alpha, const QuadratureConfig& cfg = {});

/// K_{n,inf}/d^n, the bound for |f^(n)| at distance d from a convex
/// obstacle.
double exterior_bound(int n, double d, const QuadratureConfig& cfg = {});

/// Printed ratios L_{2m}/K_{2m,inf} and U_{2m}/K_{2m,inf}, m = 1..4.
struct RatioRow {
  int m;
  double lower_over_k;
  double upper_over_k;
};
inline constexpr std::array<RatioRow, 4> kRatioTable = {{
    {1, 0.7698, 1.5396},
    {2, 0.8830, 1.2141},
    {3, 0.9204, 1.1045},
    {4, 0.9396, 1.0738},
}};
inline constexpr double kRatioTablePrecision = 5e-4;

/// Printed closed form vs quadrature vs the values implied by the ratio
/// table for K_{2m,inf}, m = 1..4.
struct ConsistencyCase {
  int n = 0;
  std::string formula_id;
  double printed = 0.0;
  double quadrature = 0.0;
  double alpha_star = 0.0;
  double implied_by_lower = 0.0;  ///< L_{2m} / table(L/K)
  double implied_by_upper = 0.0;  ///< U_{2m} / table(U/K)
  double printed_rel_diff = 0.0;  ///< (printed - quadrature) / quadrature
  double lower_rel_diff = 0.0;
  double upper_rel_diff = 0.0;
};
std::vector<ConsistencyCase> consistency_report(const QuadratureConfig& cfg = {});

}  // namespace realpart
