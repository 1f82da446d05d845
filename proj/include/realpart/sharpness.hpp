#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "realpart/exponent.hpp"
#include "realpart/quadrature.hpp"

namespace realpart {

struct HalfPlanePoint {
  double re = 0.0;
  double im = 1.0;

  /// Throws DomainError unless im > 0.
  void validate() const;
  std::complex<double> complex() const { return {re, im}; }
};

/// Boundary values u = Re f on a uniform grid t_i = lo + i h, i = 0..N-1,
/// h = (hi - lo)/(N - 1), extended by zero outside [lo, hi].
///
/// Between samples u is the cubic through the four surrounding samples. It
/// is linear in the end cells and next to a cell holding an entry of
/// `breaks`; in such a cell it is constant from each side up to the break
/// (jump discontinuity). Only the first break of a cell is honored.
///
/// `norm_p` is the discrete L^p norm of the samples: the trapezoid sum
/// (h/2 at both ends) to the power 1/p, or max |u_i| when p = inf.
struct BoundaryDensity {
  double lo = -1.0;
  double hi = 1.0;
  std::vector<double> samples;
  ExponentP p = ExponentP::infinity();
  double norm_p = 0.0;
  std::vector<double> breaks;

  static BoundaryDensity from_samples(double lo, double hi, std::vector<double> samples, const ExponentP& p,
                                      std::vector<double> breaks = {});

  std::size_t size() const { return samples.size(); }
  double spacing() const { return (hi - lo) / static_cast<double>(samples.size() - 1); }
  double node(std::size_t i) const { return lo + static_cast<double>(i) * spacing(); }
  /// Reconstructed density at t.
  double operator()(double t) const;
  void validate() const;
};

double discrete_norm(const std::vector<double>& samples, double spacing, const ExponentP& p);

struct SchwarzResult {
  std::complex<double> value;
  double tail_bound = 0.0;  ///< bound on the |t| > T contribution of a density bounded by max|u_i|
  bool slow_tail = false;   ///< n = 0: the tail decays only like 1/T
};

/// f^(n)(z) = (n!/(pi i)) int u(t) (t - z)^{-(n+1)} dt over the support,
/// with a Gauss-Legendre rule of `order` points on every grid cell (split at
/// the density's breaks).
SchwarzResult schwarz_derivative(const BoundaryDensity& u, int n, const HalfPlanePoint& z, int order = 8);

/// The density saturating Hoelder's inequality against the kernel
/// g(t) = Re{e^{i alpha} (n!/(pi i)) (t - z)^{-(n+1)}}: sgn g for p = inf
/// (breaks at the sign changes of g), |g|^{q-1} sgn g normalized to unit
/// discrete L^p norm otherwise. Support [-T, T] with N samples.
BoundaryDensity extremal_density(int n, const ExponentP& p, double alpha, const HalfPlanePoint& z, double T,
                                 std::size_t N);
/// Same on an explicit support [lo, hi].
BoundaryDensity extremal_density(int n, const ExponentP& p, double alpha, const HalfPlanePoint& z, double lo,
                                 double hi, std::size_t N);

/// Sign changes of g on the real line: t = Re z + Im z tan(phi_k) for the
/// kinks phi_k of cos(alpha - (n+1) phi + n pi/2).
std::vector<double> kernel_sign_changes(int n, double alpha, const HalfPlanePoint& z);

/// (Im z)^{n+1/p} |Re{e^{i alpha} f^(n)(z)}| / ||u||_p for the extremal
/// density at z = i on [-T, T].
double sharpness_ratio(int n, const ExponentP& p, double alpha, double T, std::size_t N);
/// Same at an arbitrary z, the support [Re z - T Im z, Re z + T Im z]
/// being the dilated image of [-T, T].
double sharpness_ratio_at(int n, const ExponentP& p, double alpha, const HalfPlanePoint& z, double T, std::size_t N);

struct SharpnessReport {
  int n = 0;
  std::string p;
  double alpha = 0.0;
  double T = 0.0;
  std::size_t N = 0;
  double value = 0.0;       ///< sharpness_ratio
  double target = 0.0;      ///< K_{n,p}(alpha)
  double lhs = 0.0;         ///< (Im z)^{n+1/p} |Re{e^{i alpha} f^(n)(z)}|
  double rhs = 0.0;         ///< K_{n,p}(alpha) ||u||_p
  double ratio = 0.0;       ///< lhs / rhs
  double tail_bound = 0.0;
  bool ok = false;          ///< lhs <= rhs (1 + 1e-6)
};
SharpnessReport sharpness_report(int n, const ExponentP& p, double alpha, double T, std::size_t N,
                                 const QuadratureConfig& cfg = {});
std::string to_json(const SharpnessReport& r);

/// C_{n,p} = 2^{n+1/p} K_{n,p}, the sharp constant in the unit disk.
double disk_constant(int n, const ExponentP& p, const QuadratureConfig& cfg = {});

/// u(e^{it}) = a0 + sum_k (a_k cos kt + b_k sin kt), k = 1..
struct TrigPolynomial {
  double a0 = 0.0;
  std::vector<double> a;
  std::vector<double> b;

  double operator()(double t) const;
};

struct DiskReport {
  double lhs = 0.0;        ///< |f^(n)(z)|
  double rhs = 0.0;        ///< C_{n,p} (1 - r^2)^{-(n+1/p)} ||u||_p
  double ratio = 0.0;
  double norm_p = 0.0;     ///< arc-length L^p norm on the circle
  std::complex<double> derivative;
  double tail_bound = 0.0; ///< always 0 on the disk; kept for a uniform report schema
  bool ok = false;         ///< lhs <= rhs (1 + 1e-9)
};

/// f^(n)(z) for f(z) = (1/2pi) int u(e^{it}) (e^{it}+z)/(e^{it}-z) dt via the
/// differentiated kernel 2 n! e^{it}/(e^{it}-z)^{n+1} (periodic trapezoid,
/// refined until stable).
std::complex<double> disk_schwarz_derivative(const TrigPolynomial& u, int n, std::complex<double> z);
DiskReport disk_verify(const TrigPolynomial& u, int n, const ExponentP& p, std::complex<double> z,
                       const QuadratureConfig& cfg = {});
std::string to_json(const DiskReport& r);

/// CSV with header "t,u", one sample per row, 17 significant digits.
void write_density_csv(std::ostream& os, const BoundaryDensity& u);
/// Requires strictly increasing, uniformly spaced t. Throws DomainError.
BoundaryDensity read_density_csv(std::istream& is, const ExponentP& p);

}  // namespace realpart
