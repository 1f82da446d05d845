#include "realpart/maximize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "realpart/errors.hpp"

namespace realpart {

namespace {

struct Point {
  double x;
  double f;
};

Point golden_section(const std::function<double(double)>& f, double a, double b, double tol, int& evals) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  evals += 2;
  while (b - a > tol) {
    // ties keep the left part
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  return fc >= fd ? Point{c, fc} : Point{d, fd};
}

// Locates where df changes from positive to non-positive inside [a, b].
double derivative_sign_change(const std::function<double(double)>& df, double a, double b, double tol, int& evals) {
  const double da = df(a);
  const double db = df(b);
  evals += 2;
  if (da <= 0.0 && db <= 0.0) return a;
  if (da > 0.0 && db > 0.0) return b;
  if (da <= 0.0 && db > 0.0) return std::numeric_limits<double>::quiet_NaN();  // minimum inside
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (df(mid) > 0.0) {
      a = mid;
    } else {
      b = mid;
    }
    ++evals;
  }
  return 0.5 * (a + b);
}

}  // namespace

MaximizeResult grid_golden_maximize(const std::function<double(double)>& f, double lo, double hi,
                                    const MaximizeOptions& opts, const std::function<double(double)>& derivative) {
  if (!(lo < hi)) throw DomainError("grid_golden_maximize: requires lo < hi");
  if (opts.grid_points < 2) throw DomainError("grid_golden_maximize: grid_points must be >= 2");

  MaximizeResult res;
  const int g = opts.grid_points;
  const double step = (hi - lo) / g;
  std::vector<double> values(g + 1);
  for (int i = 0; i <= g; ++i) values[i] = f(i == g ? hi : lo + i * step);
  res.evaluations = g + 1;

  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  if (*mx - *mn <= opts.flat_rel_tol * std::max(1.0, std::abs(*mx))) {
    res.x = lo;
    res.value = values[0];
    res.flat = true;
    return res;
  }
  const int best = static_cast<int>(mx - values.begin());  // first maximum

  const double a = best == 0 ? lo : lo + (best - 1) * step;
  const double b = best == g ? hi : lo + (best + 1) * step;

  Point p = golden_section(f, a, b, opts.x_tol, res.evaluations);
  // the bracket ends are candidates too (maxima on the boundary)
  const double x_best = best == g ? hi : lo + best * step;
  if (values[best] > p.f) p = {x_best, values[best]};

  if (derivative) {
    const double x = derivative_sign_change(derivative, a, b, opts.x_tol, res.evaluations);
    if (std::isfinite(x)) {
      p = {x, f(x)};
      ++res.evaluations;
    }
  }
  res.x = p.x;
  res.value = p.f;
  return res;
}

}  // namespace realpart
