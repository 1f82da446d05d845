// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "realpart/constants.hpp"
#include "realpart/qkernel.hpp"
#include "realpart/sharpness.hpp"
#include "realpart/specfun.hpp"

using namespace realpart;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;
const ExponentP kInf = ExponentP::infinity();
const ExponentP kTwo = ExponentP::rational(2);
const SharpOptions kQuadOnly{false, 256};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Verdict {
  bool ok = true;
  std::string detail;
  void fail(const std::string& what) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

Verdict headline_values() {
  struct Case {
    std::string name;
    int n;
    ExponentP p;
    double expected;
  };
  std::vector<Case> cases = {
      {"K_{1,inf}", 1, kInf, 2.0 / kPi},
      {"K_{3,inf}", 3, kInf, 6.0 / kPi},
      {"K_{5,inf}", 5, kInf, 90.0 / kPi},
      {"K_{2,inf}", 2, kInf, 3.0 * std::sqrt(3.0) / (2.0 * kPi)},
      {"K_{4,inf}", 4, kInf, 3.0 * (16.0 + 5.0 * std::sqrt(5.0)) / (4.0 * kPi)},
  };
  for (int n = 1; n <= 6; ++n) {
    cases.push_back({"K_{n,2}", n, kTwo, std::sqrt(specfun::factorial(2 * n) / (std::pow(2.0, 2 * n + 1) * kPi))});
  }
  Verdict v;
  double worst = 0.0;
  double slowest = 0.0;
  for (const Case& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const ConstantResult r = k_sharp({c.n, c.p, std::nullopt}, {}, kQuadOnly);
    const double dt = seconds_since(t0);
    const double e = rel(r.value, c.expected);
    worst = std::max(worst, e);
    slowest = std::max(slowest, dt);
    if (r.method != Method::quadrature) v.fail(c.name + " did not use quadrature");
    if (e > 1e-8) v.fail(c.name + fmt(" n=%g rel err %.3g", c.n, e));
    if (dt >= 5.0) v.fail(c.name + fmt(" n=%g took %.2f s", c.n, dt));
  }
  v.detail = fmt("worst rel err %.3g, slowest %.3f s", worst, slowest) + (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict ratio_table() {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  std::string cells;
  for (const RatioRow& row : kRatioTable) {
    const double k = k_sharp({2 * row.m, kInf, std::nullopt}, {}, kQuadOnly).value;
    const BoundsPair b = bounds_even(row.m);
    const double lk = b.lower / k;
    const double uk = b.upper / k;
    cells += fmt("n=%g L/K=%.5f U/K=%.5f, ", 2 * row.m, lk, uk);
    if (std::abs(lk - row.lower_over_k) > kRatioTablePrecision) {
      v.fail(fmt("L_%g/K %.5f vs printed %.4f", 2 * row.m, lk, row.lower_over_k));
    }
    if (std::abs(uk - row.upper_over_k) > kRatioTablePrecision) {
      v.fail(fmt("U_%g/K %.5f vs printed %.4f", 2 * row.m, uk, row.upper_over_k));
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 60.0) v.fail(fmt("runtime %.1f s", dt));
  v.detail = cells + fmt("(%.2f s)", dt) + (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict beta_sum_consistency() {
  Verdict v;
  double worst_exact = 0.0;
  for (int n = 1; n <= 10; ++n) {
    worst_exact = std::max(worst_exact, rel(beta_sum_value(n, n), closed_form_lookup(n, kTwo)->value));
  }
  for (int m = 0; 2 * m + 1 <= 10; ++m) {
    worst_exact = std::max(worst_exact, rel(beta_sum_value(2 * m + 1, m), closed_form_lookup(2 * m + 1, kInf)->value));
  }
  if (worst_exact > 1e-12) v.fail(fmt("special-index rel err %.3g", worst_exact));
  double worst_general = 0.0;
  for (auto [n, m] : {std::pair{1, 2}, {2, 3}, {3, 4}, {1, 4}}) {
    const ExponentP p = ExponentP::rational(2 * (m + 1), 2 * m + 1 - n);
    worst_general = std::max(worst_general, rel(beta_sum_value(n, m), k_sharp({n, p, std::nullopt}, {}, kQuadOnly).value));
  }
  if (worst_general > 1e-8) v.fail(fmt("general-index rel err %.3g", worst_general));
  v.detail = fmt("special %.3g, general %.3g", worst_exact, worst_general) + (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict kernel_suite() {
  Verdict v;
  double agree = 0.0;
  double spread = 0.0;
  double argmax = 0.0;
  int cases = 0;
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      for (double g : {1.0, 1.5, 2.0, 3.0, 4.0}) {
        const QRegime r = regime(m, n, g);
        if (r == QRegime::unresolved) continue;
        ++cases;
        const double closed = q_closed(m, n, g);
        agree = std::max(agree, std::abs(q_numeric({m, n, g, 0.0}) - closed));
        if (r == QRegime::low) {
          double lo = 1e300;
          double hi = -1e300;
          for (int k = 0; k < 16; ++k) {
            const double q = q_numeric({m, n, g, kPi * k / 16.0});
            agree = std::max(agree, std::abs(q - closed));
            lo = std::min(lo, q);
            hi = std::max(hi, q);
          }
          spread = std::max(spread, hi - lo);
        } else {
          argmax = std::max(argmax, std::abs(q_maximize(m, n, g).beta_star));
        }
      }
    }
  }
  if (agree > 1e-9) v.fail(fmt("closed-form disagreement %.3g", agree));
  if (spread > 1e-9) v.fail(fmt("low-regime spread %.3g", spread));
  if (argmax > 1e-6) v.fail(fmt("high-regime argmax %.3g", argmax));
  v.detail = fmt("%g cases: agreement %.3g, spread %.3g, argmax %.3g", cases, agree, spread, argmax) +
             (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict sign_suite() {
  Verdict v;
  double l3 = -1e300;
  double l4 = 1e300;
  for (int k = 1; k <= 1000; ++k) {
    const double phi = kHalfPi * k / 1001.0;
    l3 = std::max(l3, lambda_m(3, phi));
    l4 = std::min(l4, lambda_m(4, phi));
  }
  if (!(l3 < 0.0)) v.fail(fmt("max Lambda_3 = %.3g", l3));
  if (!(l4 > 0.0)) v.fail(fmt("min Lambda_4 = %.3g", l4));
  double worst = 0.0;
  for (int m = 1; m <= 4; ++m) {
    for (int k = 0; k < 20; ++k) {
      const double a = kHalfPi * (k + 0.5) / 20.0;
      worst = std::max(worst, rel(dk_dalpha(m, a), k_alpha_central_difference(2 * m, kInf, a, 1e-5)));
    }
  }
  if (worst > 1e-6) v.fail(fmt("derivative rel err %.3g", worst));
  const double a6 = *k_sharp({6, kInf, std::nullopt}, {}, kQuadOnly).alpha_star;
  const double a8 = *k_sharp({8, kInf, std::nullopt}, {}, kQuadOnly).alpha_star;
  if (std::abs(a6) > 1e-6) v.fail(fmt("alpha*(6) = %.3g", a6));
  if (std::abs(a8 - kHalfPi) > 1e-6) v.fail(fmt("alpha*(8) - pi/2 = %.3g", a8 - kHalfPi));
  v.detail = fmt("Lambda_3 <= %.3g, Lambda_4 >= %.3g, dK rel err %.3g", l3, l4, worst) +
             fmt(", alpha*(6) = %.3g, alpha*(8) - pi/2 = %.3g", a6, a8 - kHalfPi) + (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict bracket_suite() {
  Verdict v;
  double prev = 1e300;
  std::string ratios;
  for (int m = 1; m <= 8; ++m) {
    const double k = k_sharp({2 * m, kInf, std::nullopt}, {}, kQuadOnly).value;
    const BoundsPair b = bounds_even(m);
    const double r = k / b.lower;
    ratios += fmt("%.5f ", r);
    if (!(b.lower < k && k < b.upper)) v.fail(fmt("m=%g outside bracket", m));
    if (!(r > 1.0 && r < 2.0 * m / (2.0 * m - 1.0))) v.fail(fmt("m=%g K/L = %.6f", m, r));
    if (!(r < prev)) v.fail(fmt("m=%g K/L not decreasing", m));
    prev = r;
  }
  v.detail = "K/L: " + ratios + (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict sharpness_suite() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  std::string ratios;
  for (auto [n, p] : {std::pair{1, kInf}, {2, kInf}, {1, kTwo}}) {
    const double r = sharpness_ratio(n, p, 0.0, 1e4, std::size_t{1} << 20);
    const double k = k_alpha(n, p, 0.0);
    ratios += fmt("%.8f ", r / k);
    if (r < 0.99 * k) v.fail(fmt("n=%g ratio/K = %.6f", n, r / k));
    if (r > k * (1 + 1e-6)) v.fail(fmt("n=%g ratio exceeds K: %.9f", n, r / k));
  }
  const double dt = seconds_since(t0);
  if (dt >= 120.0) v.fail(fmt("runtime %.1f s", dt));

  // random piecewise-constant densities never beat the sharp constant
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(-100.0, 100.0);
  std::uniform_real_distribution<double> im(0.5, 5.0);
  const std::pair<int, ExponentP> cases[] = {{1, kInf}, {2, kInf}, {1, kTwo}, {2, kTwo}, {3, kInf}};
  double worst = 0.0;
  const std::size_t N = 4001;
  const double h = 200.0 / (N - 1);
  for (int i = 0; i < 200; ++i) {
    const auto& [n, p] = cases[i % 5];
    std::vector<double> cuts(static_cast<std::size_t>(1 + rng() % 25));
    for (double& c : cuts) c = pos(rng);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> levels(cuts.size() + 1);
    for (double& l : levels) l = val(rng);
    std::vector<double> s(N);
    for (std::size_t j = 0; j < N; ++j) {
      const double t = -100.0 + static_cast<double>(j) * h;
      s[j] = levels[std::upper_bound(cuts.begin(), cuts.end(), t) - cuts.begin()];
    }
    const BoundaryDensity u = BoundaryDensity::from_samples(-100.0, 100.0, std::move(s), p, cuts);
    const HalfPlanePoint z{pos(rng) / 5.0, im(rng)};
    const double lhs = std::pow(z.im, n + p.inv_p()) * std::abs(schwarz_derivative(u, n, z).value) / u.norm_p;
    worst = std::max(worst, lhs / k_sharp({n, p, std::nullopt}).value);
  }
  if (worst > 1 + 1e-6) v.fail(fmt("fuzz ratio %.9f", worst));
  v.detail = "ratio/K: " + ratios + fmt("(%.1f s), fuzz worst %.4f", dt, worst) + (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict disk_suite() {
  Verdict v;
  const double c1 = rel(disk_constant(1, kInf), 4.0 / kPi);
  if (c1 > 1e-10) v.fail(fmt("C_{1,inf} rel err %.3g", c1));
  double c2 = 0.0;
  for (int n = 0; n <= 8; ++n) c2 = std::max(c2, rel(disk_constant(n, kTwo), std::sqrt(specfun::factorial(2 * n) / kPi)));
  if (c2 > 1e-10) v.fail(fmt("C_{n,2} rel err %.3g", c2));
  const DiskReport a = disk_verify({0.0, {1.0}, {}}, 1, kInf, 0.0);
  const DiskReport b = disk_verify({1.0, {}, {}}, 1, kTwo, 0.5);
  const DiskReport c = disk_verify({0.0, {0.0, 1.0}, {}}, 2, kInf, 0.0);
  if (!a.ok || std::abs(a.lhs - 1.0) > 1e-12) v.fail("cos t example");
  if (!b.ok || b.lhs > 1e-12) v.fail("constant example");
  if (!c.ok || std::abs(c.lhs - 2.0) > 1e-12) v.fail("cos 2t example");
  v.detail = fmt("C_{1,inf} rel err %.3g, C_{n,2} rel err %.3g, ", c1, c2) +
             fmt("lhs = %.12g, %.3g, %.12g", a.lhs, b.lhs, c.lhs) + (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict consistency() {
  Verdict v;
  for (const ConsistencyCase& c : consistency_report()) {
    if (c.n < 6) continue;
    std::printf("       K_{%d,inf}: printed %s = %.6f, quadrature = %.6f, ratio table implies %.6f (L) / %.6f (U)\n",
                c.n, c.formula_id.c_str(), c.printed, c.quadrature, c.implied_by_lower, c.implied_by_upper);
    if (!std::isfinite(c.printed) || !std::isfinite(c.quadrature) || !std::isfinite(c.implied_by_lower)) {
      v.fail(fmt("n=%g incomplete", c.n));
    }
  }
  v.detail = "report emitted";
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"closed-form headline values by quadrature", headline_values},
      {"ratio table", ratio_table},
      {"Beta/binomial formula consistency", beta_sum_consistency},
      {"kernel integral suite", kernel_suite},
      {"sign and derivative suite", sign_suite},
      {"two-sided bracket", bracket_suite},
      {"sharpness", sharpness_suite},
      {"disk", disk_suite},
      {"consistency report", consistency},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict v = run();
    std::printf("[%s] %d. %s: %s [%.2f s]\n", v.ok ? "PASS" : "FAIL", index, name, v.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    if (!v.ok) ++failed;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
