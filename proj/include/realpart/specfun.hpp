#pragma once

// Scalar special functions for the closed forms: Gamma, Beta and the
// factorial family. Arguments are real and positive throughout, so no
// reflection formulas are needed.

namespace realpart::specfun {

/// Arguments above this use the log-space path in the factorial family.
inline constexpr int kLogSpaceThreshold = 170;

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Gamma(x) for x > 0; +inf on overflow.
double gamma_fn(double x);

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b) for a, b > 0.
double beta_fn(double a, double b);

/// ln B(a, b).
double log_beta(double a, double b);

/// k! for k >= 0. Exact while the value fits the mantissa.
double factorial(int k);
double log_factorial(int k);

/// k!! for k >= -1 with (-1)!! = 0!! = 1. Iterated product up to
/// `threshold`, exp of the log-space value beyond it (may be +inf).
double double_factorial(int k, int threshold = kLogSpaceThreshold);
double log_double_factorial(int k, int threshold = kLogSpaceThreshold);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
double binomial(int n, int k);

/// (2m-1)!! / (2m)!! for m >= 0, evaluated without overflow.
double double_factorial_ratio(int m);

}  // namespace realpart::specfun
