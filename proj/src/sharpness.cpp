#include "realpart/sharpness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "realpart/constants.hpp"
#include "realpart/errors.hpp"
#include "realpart/specfun.hpp"

namespace realpart {

namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

cplx inverse_power(cplx w, int k) {
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= w;
  return r;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void HalfPlanePoint::validate() const {
  if (!(im > 0.0) || !std::isfinite(im) || !std::isfinite(re)) {
    throw DomainError("half-plane point must satisfy Im z > 0, got " + fmt17(re) + " + " + fmt17(im) + "i");
  }
}

double discrete_norm(const std::vector<double>& samples, double spacing, const ExponentP& p) {
  if (samples.empty()) return 0.0;
  if (p.is_infinite()) return max_abs(samples);
  const double pp = p.p();
  double s = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double w = (i == 0 || i + 1 == samples.size()) ? 0.5 * spacing : spacing;
    const double a = std::abs(samples[i]);
    s += w * (pp == 1.0 ? a : pp == 2.0 ? a * a : std::pow(a, pp));
  }
  return pp == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / pp);
}

BoundaryDensity BoundaryDensity::from_samples(double lo, double hi, std::vector<double> samples, const ExponentP& p,
                                              std::vector<double> breaks) {
  BoundaryDensity u;
  u.lo = lo;
  u.hi = hi;
  u.samples = std::move(samples);
  u.p = p;
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::remove_if(breaks.begin(), breaks.end(), [&](double b) { return !(b > lo && b < hi); }),
               breaks.end());
  u.breaks = std::move(breaks);
  u.validate();
  u.norm_p = discrete_norm(u.samples, u.spacing(), p);
  return u;
}

void BoundaryDensity::validate() const {
  if (!(lo < hi)) throw DomainError("BoundaryDensity: support must satisfy lo < hi");
  if (samples.size() < 2) throw DomainError("BoundaryDensity: at least 2 samples required");
  for (double x : samples) {
    if (!std::isfinite(x)) throw DomainError("BoundaryDensity: samples must be finite");
  }
}

namespace {

// Cubic Lagrange weights on the nodes -1, 0, 1, 2 at s in [0, 1].
std::array<double, 4> cubic_weights(double s) {
  return {-s * (s - 1.0) * (s - 2.0) / 6.0, (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0,
          -(s + 1.0) * s * (s - 2.0) / 2.0, (s + 1.0) * s * (s - 1.0) / 6.0};
}

std::vector<char> cells_with_breaks(const BoundaryDensity& u) {
  std::vector<char> flag(u.size() - 1, 0);
  const double h = u.spacing();
  for (double b : u.breaks) {
    auto i = static_cast<std::size_t>(std::floor((b - u.lo) / h));
    if (i >= flag.size()) i = flag.size() - 1;
    if (b <= u.node(i) && i > 0) --i;
    if (b > u.node(i)) flag[i] = 1;
  }
  return flag;
}

bool cubic_cell(const std::vector<char>& broken, std::size_t i) {
  return i >= 1 && i + 2 < broken.size() + 1 && !broken[i - 1] && !broken[i] && !broken[i + 1];
}

}  // namespace

double BoundaryDensity::operator()(double t) const {
  if (t < lo || t > hi) return 0.0;
  const double h = spacing();
  auto i = static_cast<std::size_t>(std::floor((t - lo) / h));
  if (i >= samples.size() - 1) i = samples.size() - 2;
  const double t0 = node(i);
  const double t1 = node(i + 1);
  const auto it = std::upper_bound(breaks.begin(), breaks.end(), t0);
  if (it != breaks.end() && *it < t1) return t < *it ? samples[i] : samples[i + 1];
  const double w = (t - t0) / h;
  if (cubic_cell(cells_with_breaks(*this), i)) {
    const auto c = cubic_weights(w);
    return c[0] * samples[i - 1] + c[1] * samples[i] + c[2] * samples[i + 1] + c[3] * samples[i + 2];
  }
  return (1.0 - w) * samples[i] + w * samples[i + 1];
}

SchwarzResult schwarz_derivative(const BoundaryDensity& u, int n, const HalfPlanePoint& z, int order) {
  z.validate();
  u.validate();
  if (n < 0) throw DomainError("schwarz_derivative: n must be >= 0");
  const GaussLegendreRule rule = gauss_legendre_rule(order);
  const cplx zc = z.complex();
  const int power = n + 1;

  std::vector<std::array<double, 4>> cubic(order);
  for (int k = 0; k < order; ++k) cubic[k] = cubic_weights(0.5 * (1.0 + rule.nodes[k]));

  // mode 0: constant ua, 1: linear ua..ub, 2: cubic through u[i-1..i+2]
  auto panel = [&](double a, double b, std::size_t i, double ua, double ub, int mode) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cplx s = 0.0;
    for (int k = 0; k < order; ++k) {
      const double x = rule.nodes[k];
      const double t = c + h * x;
      double uval = ua;
      if (mode == 1) {
        uval = 0.5 * ((1.0 - x) * ua + (1.0 + x) * ub);
      } else if (mode == 2) {
        const auto& w = cubic[k];
        uval = w[0] * u.samples[i - 1] + w[1] * u.samples[i] + w[2] * u.samples[i + 1] + w[3] * u.samples[i + 2];
      }
      s += rule.weights[k] * uval * inverse_power(1.0 / (t - zc), power);
    }
    return s * h;
  };

  const std::vector<char> broken = cells_with_breaks(u);
  cplx sum = 0.0;
  auto br = u.breaks.begin();
  const std::size_t cells = u.size() - 1;
  for (std::size_t i = 0; i < cells; ++i) {
    const double t0 = u.node(i);
    const double t1 = i + 1 == cells ? u.hi : u.node(i + 1);
    while (br != u.breaks.end() && *br <= t0) ++br;
    if (br != u.breaks.end() && *br < t1) {
      sum += panel(t0, *br, i, u.samples[i], u.samples[i], 0);
      sum += panel(*br, t1, i, u.samples[i + 1], u.samples[i + 1], 0);
    } else {
      sum += panel(t0, t1, i, u.samples[i], u.samples[i + 1], cubic_cell(broken, i) ? 2 : 1);
    }
  }

  SchwarzResult res;
  const double pref = specfun::factorial(n) / kPi;
  res.value = cplx(0.0, -pref) * sum;  // (n!/pi) / i
  if (n == 0) {
    res.slow_tail = true;
    res.tail_bound = std::numeric_limits<double>::infinity();
  } else {
    const double d_lo = z.re - u.lo;
    const double d_hi = u.hi - z.re;
    if (d_lo <= 0.0 || d_hi <= 0.0) {
      res.tail_bound = std::numeric_limits<double>::infinity();
    } else {
      res.tail_bound = pref * max_abs(u.samples) * (1.0 / (n * std::pow(d_lo, n)) + 1.0 / (n * std::pow(d_hi, n)));
    }
  }
  return res;
}

std::vector<double> kernel_sign_changes(int n, double alpha, const HalfPlanePoint& z) {
  z.validate();
  const auto phis = kink_points(alpha + n * kPi / 2, n, -kPi / 2, kPi / 2);
  std::vector<double> out;
  out.reserve(phis.size());
  for (double phi : phis) out.push_back(z.re + z.im * std::tan(phi));
  return out;
}

BoundaryDensity extremal_density(int n, const ExponentP& p, double alpha, const HalfPlanePoint& z, double T,
                                 std::size_t N) {
  if (!(T > 0.0)) throw DomainError("extremal_density: T must be > 0");
  return extremal_density(n, p, alpha, z, -T, T, N);
}

BoundaryDensity extremal_density(int n, const ExponentP& p, double alpha, const HalfPlanePoint& z, double lo,
                                 double hi, std::size_t N) {
  check_admissible(n, p);
  if (p.is_one()) throw AdmissibilityError("extremal_density: p = 1 (q = inf) has no Hoelder-saturating density");
  z.validate();
  if (N < 2) throw DomainError("extremal_density: N must be >= 2");
  if (!(lo < hi)) throw DomainError("extremal_density: requires lo < hi");

  const cplx zc = z.complex();
  const cplx phase = std::polar(1.0, alpha) * cplx(0.0, -specfun::factorial(n) / kPi);
  const double h = (hi - lo) / static_cast<double>(N - 1);
  const double q = p.q();
  std::vector<double> samples(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double t = lo + static_cast<double>(i) * h;
    const double g = (phase * inverse_power(1.0 / (t - zc), n + 1)).real();
    if (p.is_infinite()) {
      samples[i] = g > 0.0 ? 1.0 : (g < 0.0 ? -1.0 : 0.0);
    } else {
      samples[i] = std::copysign(q == 2.0 ? std::abs(g) : std::pow(std::abs(g), q - 1.0), g);
    }
  }
  if (p.is_infinite()) {
    return BoundaryDensity::from_samples(lo, hi, std::move(samples), p, kernel_sign_changes(n, alpha, z));
  }
  const double norm = discrete_norm(samples, h, p);
  if (norm > 0.0) {
    for (double& s : samples) s /= norm;
  }
  return BoundaryDensity::from_samples(lo, hi, std::move(samples), p);
}

double sharpness_ratio_at(int n, const ExponentP& p, double alpha, const HalfPlanePoint& z, double T, std::size_t N) {
  if (!(T > 0.0)) throw DomainError("sharpness_ratio: T must be > 0");
  const BoundaryDensity u = extremal_density(n, p, alpha, z, z.re - T * z.im, z.re + T * z.im, N);
  const SchwarzResult f = schwarz_derivative(u, n, z);
  const double proj = (std::polar(1.0, alpha) * f.value).real();
  return std::pow(z.im, n + p.inv_p()) * std::abs(proj) / u.norm_p;
}

double sharpness_ratio(int n, const ExponentP& p, double alpha, double T, std::size_t N) {
  return sharpness_ratio_at(n, p, alpha, HalfPlanePoint{0.0, 1.0}, T, N);
}

SharpnessReport sharpness_report(int n, const ExponentP& p, double alpha, double T, std::size_t N,
                                 const QuadratureConfig& cfg) {
  const HalfPlanePoint z{0.0, 1.0};
  const BoundaryDensity u = extremal_density(n, p, alpha, z, T, N);
  const SchwarzResult f = schwarz_derivative(u, n, z);
  SharpnessReport r;
  r.n = n;
  r.p = p.to_string();
  r.alpha = alpha;
  r.T = T;
  r.N = N;
  r.lhs = std::abs((std::polar(1.0, alpha) * f.value).real());
  r.value = r.lhs / u.norm_p;
  r.target = k_alpha(n, p, alpha, cfg);
  r.rhs = r.target * u.norm_p;
  r.ratio = r.lhs / r.rhs;
  r.tail_bound = f.tail_bound;
  r.ok = r.lhs <= r.rhs * (1.0 + 1e-6);
  return r;
}

std::string to_json(const SharpnessReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["alpha"] = r.alpha;
  j["T"] = r.T;
  j["N"] = r.N;
  j["value"] = r.value;
  j["target"] = r.target;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["ratio"] = r.ratio;
  j["ok"] = r.ok;
  j["tail_bound"] = r.tail_bound;
  return j.dump(2);
}

double disk_constant(int n, const ExponentP& p, const QuadratureConfig& cfg) {
  check_admissible(n, p);
  const ConstantResult k = k_sharp({n, p, std::nullopt}, cfg);
  return std::exp2(n + p.inv_p()) * k.value;
}

double TrigPolynomial::operator()(double t) const {
  double s = a0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * std::cos((k + 1.0) * t);
  for (std::size_t k = 0; k < b.size(); ++k) s += b[k] * std::sin((k + 1.0) * t);
  return s;
}

std::complex<double> disk_schwarz_derivative(const TrigPolynomial& u, int n, std::complex<double> z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("disk: requires |z| < 1");
  if (n < 0) throw DomainError("disk: n must be >= 0");
  const double nf = specfun::factorial(n);
  auto trapezoid = [&](int M) {
    cplx s = 0.0;
    for (int j = 0; j < M; ++j) {
      const double t = 2.0 * kPi * j / M;
      const cplx e = std::polar(1.0, t);
      const cplx kern = n == 0 ? (e + z) / (e - z) : 2.0 * nf * e * inverse_power(1.0 / (e - z), n + 1);
      s += u(t) * kern;
    }
    return s / static_cast<double>(M);
  };
  int M = 256;
  cplx prev = trapezoid(M);
  while (M < (1 << 22)) {
    M *= 2;
    const cplx cur = trapezoid(M);
    if (std::abs(cur - prev) <= 1e-14 * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

DiskReport disk_verify(const TrigPolynomial& u, int n, const ExponentP& p, std::complex<double> z,
                       const QuadratureConfig& cfg) {
  if (!(std::abs(z) < 1.0)) throw DomainError("disk_verify: requires |z| < 1");
  DiskReport r;
  r.derivative = disk_schwarz_derivative(u, n, z);
  r.lhs = std::abs(r.derivative);

  const std::size_t degree = std::max(u.a.size(), u.b.size());
  const int M = 4096 * static_cast<int>(std::max<std::size_t>(1, degree));
  std::vector<double> vals(M);
  for (int j = 0; j < M; ++j) vals[j] = u(2.0 * kPi * j / M);
  if (p.is_infinite()) {
    r.norm_p = max_abs(vals);
  } else {
    double s = 0.0;
    for (double v : vals) s += std::pow(std::abs(v), p.p());
    r.norm_p = std::pow(s * 2.0 * kPi / M, 1.0 / p.p());
  }
  const double rr = std::norm(z);
  r.rhs = disk_constant(n, p, cfg) / std::pow(1.0 - rr, n + p.inv_p()) * r.norm_p;
  r.ratio = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
  r.ok = r.lhs <= r.rhs * (1.0 + 1e-9);
  return r;
}

std::string to_json(const DiskReport& r) {
  nlohmann::ordered_json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["ratio"] = r.ratio;
  j["ok"] = r.ok;
  j["tail_bound"] = r.tail_bound;
  j["norm_p"] = r.norm_p;
  j["derivative"] = {r.derivative.real(), r.derivative.imag()};
  return j.dump(2);
}

void write_density_csv(std::ostream& os, const BoundaryDensity& u) {
  os << "t,u\n";
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double t = i + 1 == u.size() ? u.hi : u.node(i);
    os << fmt17(t) << ',' << fmt17(u.samples[i]) << '\n';
  }
}

BoundaryDensity read_density_csv(std::istream& is, const ExponentP& p) {
  std::string line;
  if (!std::getline(is, line)) throw DomainError("density csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,u") throw DomainError("density csv: expected header 't,u', got '" + line + "'");
  std::vector<double> ts;
  std::vector<double> us;
  std::size_t row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw DomainError("density csv: row " + std::to_string(row) + " lacks a comma");
    try {
      std::size_t used = 0;
      const std::string a = line.substr(0, comma);
      const std::string b = line.substr(comma + 1);
      const double t = std::stod(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      const double v = std::stod(b, &used);
      if (used != b.size()) throw std::invalid_argument(b);
      ts.push_back(t);
      us.push_back(v);
    } catch (const std::logic_error&) {
      throw DomainError("density csv: row " + std::to_string(row) + " is not numeric");
    }
  }
  if (ts.size() < 2) throw DomainError("density csv: at least 2 rows required");
  const double h = (ts.back() - ts.front()) / static_cast<double>(ts.size() - 1);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (!(ts[i] > ts[i - 1])) throw DomainError("density csv: t must be strictly increasing (row " + std::to_string(i + 2) + ")");
    const double expect = ts.front() + static_cast<double>(i) * h;
    if (std::abs(ts[i] - expect) > 1e-9 * std::max(1.0, std::abs(expect)) + 1e-6 * h) {
      throw DomainError("density csv: t must be uniformly spaced (row " + std::to_string(i + 2) + ")");
    }
  }
  return BoundaryDensity::from_samples(ts.front(), ts.back(), std::move(us), p);
}

}  // namespace realpart
