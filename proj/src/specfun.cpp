#include "realpart/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "realpart/errors.hpp"

namespace realpart::specfun {

namespace {

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(name) + ": argument must be finite and > 0, got " + std::to_string(x));
  }
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  return boost::math::lgamma(x);
}

double gamma_fn(double x) {
  require_positive(x, "gamma_fn");
  if (x > 171.6) return std::numeric_limits<double>::infinity();
  return boost::math::tgamma(x);
}

double beta_fn(double a, double b) {
  require_positive(a, "beta_fn");
  require_positive(b, "beta_fn");
  return boost::math::beta(a, b);
}

double log_beta(double a, double b) {
  require_positive(a, "log_beta");
  require_positive(b, "log_beta");
  return boost::math::lgamma(a) + boost::math::lgamma(b) - boost::math::lgamma(a + b);
}

double factorial(int k) {
  if (k < 0) throw DomainError("factorial: k must be >= 0");
  if (k > kLogSpaceThreshold) return std::exp(log_factorial(k));
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

double log_factorial(int k) {
  if (k < 0) throw DomainError("log_factorial: k must be >= 0");
  if (k <= 1) return 0.0;
  return boost::math::lgamma(static_cast<double>(k) + 1.0);
}

double log_double_factorial(int k, int threshold) {
  if (k < -1) throw DomainError("double_factorial: k must be >= -1");
  if (k <= 1) return 0.0;
  if (k <= threshold) {
    double s = 0.0;
    for (int i = k; i > 1; i -= 2) s += std::log(static_cast<double>(i));
    return s;
  }
  // (2j)!! = 2^j j!,  (2j+1)!! = (2j+1)! / (2^j j!)
  const double ln2 = std::log(2.0);
  if (k % 2 == 0) {
    const int j = k / 2;
    return j * ln2 + log_factorial(j);
  }
  const int j = (k - 1) / 2;
  return log_factorial(k) - j * ln2 - log_factorial(j);
}

double double_factorial(int k, int threshold) {
  if (k < -1) throw DomainError("double_factorial: k must be >= -1");
  if (k > threshold) return std::exp(log_double_factorial(k, threshold));
  double r = 1.0;
  for (int i = k; i > 1; i -= 2) r *= i;
  return r;
}

double binomial(int n, int k) {
  if (n < 0) throw DomainError("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  if (n <= 60) {
    // exact: each partial product is itself a binomial coefficient
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
  }
  return std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k));
}

double double_factorial_ratio(int m) {
  if (m < 0) throw DomainError("double_factorial_ratio: m must be >= 0");
  if (m <= 60) {
    double r = 1.0;
    for (int i = 1; i <= m; ++i) r *= (2.0 * i - 1.0) / (2.0 * i);
    return r;
  }
  return std::exp(log_double_factorial(2 * m - 1) - log_double_factorial(2 * m));
}

}  // namespace realpart::specfun
