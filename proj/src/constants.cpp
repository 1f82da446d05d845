#include "realpart/constants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "realpart/errors.hpp"
#include "realpart/maximize.hpp"
#include "realpart/specfun.hpp"

namespace realpart {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;

bool is_integer(double x) { return x == std::floor(x) && std::abs(x) < 1e9; }

double cos_power(double c, double e) {
  if (is_integer(e)) {
    double r = 1.0;
    double b = c;
    auto k = static_cast<long long>(e);
    while (k > 0) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }
  return std::pow(c, e);
}

void accumulate(QuadratureResult& into, const QuadratureResult& part) {
  into.value += part.value;
  into.err_estimate += part.err_estimate;
  into.panels += part.panels;
}

// int_{-pi/2}^{pi/2} h(phi) cos^e(phi) dphi for e > -1, with h smooth away
// from `kinks`. For e < 0 each half is mapped through phi = +-(pi/2 - s^k),
// k = 1/(e+1), which turns the endpoint singularity into a bounded factor.
QuadratureResult integrate_against_cos_power(const std::function<double(double)>& h, double e,
                                             std::span<const double> kinks, const QuadratureConfig& cfg) {
  if (!(e > -1.0)) throw DomainError("cosine exponent must be > -1");
  if (e >= 0.0) {
    auto f = [&](double phi) { return h(phi) * cos_power(std::cos(phi), e); };
    return integrate_panels(f, -kHalfPi, kHalfPi, kinks, cfg);
  }
  const double k = 1.0 / (e + 1.0);
  const double s_max = std::pow(kHalfPi, 1.0 / k);
  QuadratureResult total;
  for (const double side : {1.0, -1.0}) {
    // phi = side * (pi/2 - w), w = s^k in (0, pi/2]
    auto f = [&, side](double s) {
      const double w = std::pow(s, k);
      const double sinc = w > 0.0 ? std::sin(w) / w : 1.0;
      return k * std::pow(sinc, e) * h(side * (kHalfPi - w));
    };
    std::vector<double> mapped;
    for (double phi : kinks) {
      const double w = kHalfPi - side * phi;
      if (w > 0.0 && w < kHalfPi) mapped.push_back(std::pow(w, 1.0 / k));
    }
    accumulate(total, integrate_panels(f, 0.0, s_max, mapped, cfg));
  }
  return total;
}

double require_finite_q(const ExponentP& p, const char* who) {
  const double q = p.q();
  if (!std::isfinite(q)) {
    throw AdmissibilityError(std::string(who) + ": p = 1 has no integral representation; use the closed form n!/pi");
  }
  return q;
}

// Braced integral of K_{n,p}(alpha) and its phase.
struct Profile {
  int n;
  double q;
  double e;  // (n+1) q - 2

  double phase(double alpha) const { return alpha + n * kHalfPi; }

  QuadratureResult integral(double alpha, const QuadratureConfig& cfg) const {
    const double ph = phase(alpha);
    const double slope = n + 1.0;
    auto h = [&](double phi) {
      const double c = std::abs(std::cos(ph - slope * phi));
      return q == 1.0 ? c : std::pow(c, q);
    };
    const auto kinks = kink_points(ph, n, -kHalfPi, kHalfPi);
    return integrate_against_cos_power(h, e, kinks, cfg);
  }

  QuadratureResult integral_derivative(double alpha, const QuadratureConfig& cfg) const {
    const double ph = phase(alpha);
    const double slope = n + 1.0;
    auto h = [&](double phi) {
      const double arg = ph - slope * phi;
      const double c = std::cos(arg);
      const double mag = q == 1.0 ? 1.0 : std::pow(std::abs(c), q - 1.0);
      return -q * mag * std::copysign(1.0, c) * std::sin(arg);
    };
    const auto kinks = kink_points(ph, n, -kHalfPi, kHalfPi);
    return integrate_against_cos_power(h, e, kinks, cfg);
  }

  // I(alpha + d) - I(alpha - d) with the difference formed pointwise:
  // cos(x + d) - cos(x - d) = -2 sin x sin d away from sign changes.
  QuadratureResult integral_difference(double alpha, double d, const QuadratureConfig& cfg) const {
    const double ph = phase(alpha);
    const double slope = n + 1.0;
    const double cd = std::cos(d);
    const double sd = std::sin(d);
    auto h = [&](double phi) {
      const double x = ph - slope * phi;
      const double cx = std::cos(x);
      const double sx = std::sin(x);
      const double c1 = cx * cd - sx * sd;
      const double c0 = cx * cd + sx * sd;
      const double diff = (c1 > 0.0) == (c0 > 0.0) ? std::copysign(1.0, c0) * (-2.0 * sx * sd) : std::abs(c1) - std::abs(c0);
      if (q == 1.0) return diff;
      const double a0 = std::abs(c0);
      if (a0 == 0.0) return std::pow(std::abs(c1), q);
      return std::pow(a0, q) * std::expm1(q * std::log1p(diff / a0));
    };
    auto kinks = kink_points(phase(alpha + d), n, -kHalfPi, kHalfPi);
    const auto k0 = kink_points(phase(alpha - d), n, -kHalfPi, kHalfPi);
    kinks.insert(kinks.end(), k0.begin(), k0.end());
    QuadratureConfig fine = cfg;
    fine.abs_tol = cfg.abs_tol * d * 1e-4;
    return integrate_against_cos_power(h, e, kinks, fine);
  }
};

Profile make_profile(int n, const ExponentP& p, const char* who) {
  check_admissible(n, p);
  const double q = require_finite_q(p, who);
  return {n, q, (n + 1) * q - 2.0};
}

double log_prefactor(int n) { return specfun::log_factorial(n) - std::log(kPi); }

double combine(int n, double q, double integral, double* log_out) {
  const double lv = log_prefactor(n) + std::log(integral) / q;
  if (log_out) *log_out = lv;
  if (n <= specfun::kLogSpaceThreshold) return specfun::factorial(n) / kPi * std::pow(integral, 1.0 / q);
  return std::exp(lv);
}

ConstantResult from_closed(const ClosedForm& cf, int n, const ExponentP& p) {
  ConstantResult r;
  r.value = cf.value;
  r.log_value = cf.log_value;
  r.method = Method::closed_form;
  r.formula_id = cf.id;
  // kernel families: flat (m <= n) -> 0, maximum at beta = 0 otherwise
  if (cf.id == "M1" || cf.id == "M3-p2" || cf.id == "T1-mlen" || cf.id == "C-3.6") {
    r.alpha_star = 0.0;
  } else if (cf.id == "T1-general" || cf.id == "C-k") {
    const auto m = beta_sum_index(n, p);
    r.alpha_star = (m && *m <= n) || n % 2 == 0 ? 0.0 : kHalfPi;
  } else if (cf.id == "M2") {
    r.alpha_star = n == 2 ? 0.0 : kHalfPi;
  }
  return r;
}

}  // namespace

std::string ConstantResult::method_string() const {
  return method == Method::quadrature ? "quadrature" : "closed_form(" + formula_id + ")";
}

void check_admissible(int n, const ExponentP& p) {
  if (n < 0) throw AdmissibilityError("derivative order n must be >= 0");
  if (n == 0 && p.is_infinite()) {
    throw AdmissibilityError("(n = 0, p = inf) is divergent: the weight cos^{(n+1)q-2} = cos^{-1} is not integrable");
  }
}

KAlphaValue k_alpha_detailed(int n, const ExponentP& p, double alpha, const QuadratureConfig& cfg) {
  const Profile prof = make_profile(n, p, "k_alpha");
  const QuadratureResult ir = prof.integral(alpha, cfg);
  KAlphaValue out;
  out.integral = ir.value;
  out.value = combine(n, prof.q, ir.value, &out.log_value);
  out.err_estimate = std::isfinite(out.value) ? out.value * ir.err_estimate / (prof.q * ir.value) : 0.0;
  return out;
}

double k_alpha(int n, const ExponentP& p, double alpha, const QuadratureConfig& cfg) {
  return k_alpha_detailed(n, p, alpha, cfg).value;
}

double k_alpha_derivative(int n, const ExponentP& p, double alpha, const QuadratureConfig& cfg) {
  const Profile prof = make_profile(n, p, "k_alpha_derivative");
  const double i0 = prof.integral(alpha, cfg).value;
  const double di = prof.integral_derivative(alpha, cfg).value;
  // d/dalpha c I^{1/q} = (c I^{1/q}) (1/q) I'/I
  return combine(n, prof.q, i0, nullptr) * di / (prof.q * i0);
}

double k_alpha_central_difference(int n, const ExponentP& p, double alpha, double h, const QuadratureConfig& cfg) {
  if (!(h > 0.0)) throw DomainError("k_alpha_central_difference: step must be > 0");
  const Profile prof = make_profile(n, p, "k_alpha_central_difference");
  const double i_minus = prof.integral(alpha - h, cfg).value;
  const double delta = prof.integral_difference(alpha, h, cfg).value;
  const double k_minus = combine(n, prof.q, i_minus, nullptr);
  const double dk = prof.q == 1.0 ? k_minus * delta / i_minus : k_minus * std::expm1(std::log1p(delta / i_minus) / prof.q);
  return dk / (2.0 * h);
}

ConstantResult k_sharp(const ConstantQuery& query, const QuadratureConfig& cfg, const SharpOptions& opts) {
  const int n = query.n;
  check_admissible(n, query.p);

  if (query.p.is_one()) {
    if (query.alpha) throw AdmissibilityError("p = 1: the alpha-profile has no integral representation");
    auto cf = closed_form_lookup(n, query.p);
    return from_closed(*cf, n, query.p);
  }

  if (query.alpha) {
    const auto kv = k_alpha_detailed(n, query.p, *query.alpha, cfg);
    ConstantResult r;
    r.value = kv.value;
    r.log_value = kv.log_value;
    r.err_estimate = kv.err_estimate;
    r.alpha_star = query.alpha;
    return r;
  }

  if (opts.allow_closed_form) {
    if (auto cf = closed_form_lookup(n, query.p); cf && cf->id != "E-6" && cf->id != "E-8") {
      return from_closed(*cf, n, query.p);
    }
  }

  const Profile prof = make_profile(n, query.p, "k_sharp");
  // maximize the braced integral; K is an increasing function of it
  auto f = [&](double a) { return prof.integral(a, cfg).value; };
  auto df = [&](double a) { return prof.integral_derivative(a, cfg).value; };
  MaximizeOptions mo;
  mo.grid_points = std::max(256, opts.grid_points);
  const MaximizeResult mr = grid_golden_maximize(f, 0.0, kHalfPi, mo, df);

  const QuadratureResult at = prof.integral(mr.x, cfg);
  ConstantResult r;
  r.method = Method::quadrature;
  r.value = combine(n, prof.q, at.value, &r.log_value);
  r.alpha_star = mr.x;
  r.err_estimate = std::isfinite(r.value) ? r.value * at.err_estimate / (prof.q * at.value) : 0.0;
  return r;
}

std::optional<int> beta_sum_index(int n, const ExponentP& p) {
  if (n < 1) return std::nullopt;
  const auto q = p.exact_q();
  if (!q) return std::nullopt;
  // m + 1 = q (n+1) / 2
  const std::int64_t num = q->num * (n + 1);
  const std::int64_t den = 2 * q->den;
  if (num % den != 0) return std::nullopt;
  const std::int64_t m = num / den - 1;
  if (m < 0 || n > 2 * m + 1 || m > 100000) return std::nullopt;
  return static_cast<int>(m);
}

double beta_sum_value(int n, int m) {
  if (n < 1 || m < 0 || n > 2 * m + 1) throw DomainError("beta_sum_value: requires n >= 1, m >= 0, n <= 2m+1");
  const double g = (m + 1.0) / (n + 1.0);
  double brace = specfun::double_factorial_ratio(m) * specfun::beta_fn(g + 0.5, 0.5);
  const int jmax = m / (n + 1);
  if (jmax > 0) {
    // pi (n+1) / (2^{2m-1+2(m+1)/(n+1)} (2m+n+3)), summed in log space
    const double log_pref = std::log(kPi * (n + 1.0) / (2.0 * m + n + 3.0)) - (2.0 * m - 1.0 + 2.0 * g) * std::log(2.0);
    for (int j = 1; j <= jmax; ++j) {
      const int k = m - j * (n + 1);
      const double log_binom = specfun::log_factorial(2 * m) - specfun::log_factorial(k) - specfun::log_factorial(2 * m - k);
      brace += std::exp(log_pref + log_binom - specfun::log_beta(g + j + 1.0, g - j + 1.0));
    }
  }
  const double expo = (n + 1.0) / (2.0 * (m + 1.0));
  return std::exp(log_prefactor(n) + expo * std::log(brace));
}

double even_order_value(int m) {
  if (m < 1) throw DomainError("even_order_value: m must be >= 1");
  const double a = (m + 1.0) / (2.0 * m + 1.0);
  const double brace = std::sqrt(kPi) * specfun::double_factorial_ratio(m) * specfun::gamma_fn(a + 0.5) / specfun::gamma_fn(a + 1.0);
  const double expo = (2.0 * m + 1.0) / (2.0 * (m + 1.0));
  return std::exp(log_prefactor(2 * m) + expo * std::log(brace));
}

double family_k_value(int n, int k) {
  if (n < 1 || k < 1) throw DomainError("family_k_value: requires n >= 1, k >= 1");
  const int top = 2 * k * (n + 1);
  // sqrt(pi) (top-3)!! Gamma(k+1/2) / ((top-2)!! k!)
  const double log_first = 0.5 * std::log(kPi) + specfun::log_double_factorial(top - 3) + specfun::log_gamma(k + 0.5) -
                           specfun::log_double_factorial(top - 2) - specfun::log_factorial(k);
  double brace = std::exp(log_first);
  const double log2_scale = -(2.0 * k * (n + 2) - 3.0) * std::log(2.0);
  for (int j = 1; j <= k - 1; ++j) {
    const double lb1 = std::log(specfun::binomial(top - 2, (k - j) * (n + 1) - 1));
    const double lb2 = std::log(specfun::binomial(2 * k, k - j));
    brace += std::exp(std::log(kPi) + log2_scale + lb1 + lb2);
  }
  return std::exp(log_prefactor(n) + std::log(brace) / (2.0 * k));
}

double odd_order_infinity(int m) {
  if (m < 0) throw DomainError("odd_order_infinity: m must be >= 0");
  return std::exp(std::log(2.0 / kPi) + 2.0 * specfun::log_double_factorial(2 * m + 1) - std::log(2.0 * m + 1.0));
}

double printed_k6() {
  return 105.0 * std::sqrt(2.0) / (4.0 * kPi) *
         (9.0 * std::cos(kPi / 28) + 3.0 * std::cos(3 * kPi / 28) + std::cos(5 * kPi / 28));
}

double printed_k8() {
  return 315.0 / (8.0 * kPi) *
         (175.0 + 9.0 * std::sqrt(2.0) * (17.0 * std::cos(kPi / 36) + 9.0 * std::cos(5 * kPi / 36) + 11.0 * std::cos(7 * kPi / 36)));
}

namespace {

ClosedForm with_log(ClosedForm cf) {
  cf.log_value = std::log(cf.value);
  return cf;
}

}  // namespace

std::optional<ClosedForm> closed_form_lookup(int n, const ExponentP& p) {
  if (n < 0) return std::nullopt;
  if (p.is_one()) return ClosedForm{std::exp(log_prefactor(n)), "M3-p1", log_prefactor(n)};
  if (p.is_infinite()) {
    if (n == 0) return std::nullopt;
    if (n % 2 == 1) {
      const double lv = std::log(2.0 / kPi) + 2.0 * specfun::log_double_factorial(n) - std::log(static_cast<double>(n));
      return ClosedForm{odd_order_infinity((n - 1) / 2), "M1", lv};
    }
    if (n == 2) return with_log({3.0 * std::sqrt(3.0) / (2.0 * kPi), "M2"});
    if (n == 4) return with_log({3.0 / (4.0 * kPi) * (16.0 + 5.0 * std::sqrt(5.0)), "M2"});
    if (n == 6) return with_log({printed_k6(), "E-6"});
    if (n == 8) return with_log({printed_k8(), "E-8"});
    return std::nullopt;
  }
  if (p.exact() && *p.exact() == Rational{2, 1}) {
    const double lv = 0.5 * (specfun::log_factorial(2 * n) - (2.0 * n + 1.0) * std::log(2.0) - std::log(kPi));
    return ClosedForm{std::exp(lv), "M3-p2", lv};
  }
  const auto m = beta_sum_index(n, p);
  if (!m) return std::nullopt;
  ClosedForm cf;
  if (n % 2 == 0 && *m == n / 2) cf = {even_order_value(*m), "C-3.6"};
  else if ((*m + 1) % (n + 1) == 0) cf = {family_k_value(n, (*m + 1) / (n + 1)), "C-k"};
  else cf = {beta_sum_value(n, *m), *m <= n ? "T1-mlen" : "T1-general"};
  cf.log_value = std::log(cf.value);
  return cf;
}

BoundsPair bounds_even(int m) {
  if (m < 1) throw DomainError("bounds_even: m must be >= 1");
  BoundsPair b;
  b.m = m;
  b.log_lower = log_asymptotic_main_term(m);
  b.log_upper = b.log_lower + std::log(2.0 * m / (2.0 * m - 1.0));
  b.lower = asymptotic_main_term(m);
  b.upper = b.lower * (2.0 * m) / (2.0 * m - 1.0);
  return b;
}

double log_asymptotic_main_term(int m) {
  if (m < 1) throw DomainError("asymptotic_main_term: m must be >= 1");
  return std::log(2.0 / kPi) + 2.0 * specfun::log_double_factorial(2 * m - 1);
}

double asymptotic_main_term(int m) {
  if (m < 1) throw DomainError("asymptotic_main_term: m must be >= 1");
  const double df = specfun::double_factorial(2 * m - 1);
  if (std::isfinite(df) && df < 1e150) return 2.0 / kPi * df * df;
  return std::exp(log_asymptotic_main_term(m));
}

double lambda_m(int m, double phi) {
  if (m < 1) throw DomainError("lambda_m: m must be >= 1");
  const double d = 2.0 * m + 1.0;
  double s = 0.0;
  for (int l = 1; l <= m; ++l) {
    const double odd = 2.0 * l - 1.0;
    const double sign = l % 2 == 0 ? 1.0 : -1.0;
    s += sign * odd * specfun::binomial(2 * m - 1, m - l) * std::sin(odd * phi / d) / std::sin(odd * kPi / (2.0 * d));
  }
  return s;
}

double dk_dalpha(int m, double alpha, const QuadratureConfig& cfg) {
  if (m < 1) throw DomainError("dk_dalpha: m must be >= 1");
  const double log_pref = specfun::log_factorial(2 * m) - std::log(kPi) - 2.0 * std::log(2.0 * m + 1.0) -
                          2.0 * (m - 1.0) * std::log(2.0);
  auto f = [&](double phi) {
    return (std::abs(std::cos(alpha - phi)) - std::abs(std::cos(alpha + phi))) * lambda_m(m, phi);
  };
  auto kinks = cosine_zeros(alpha, -1.0, 0.0, kHalfPi);
  const auto k2 = cosine_zeros(alpha, 1.0, 0.0, kHalfPi);
  kinks.insert(kinks.end(), k2.begin(), k2.end());
  const QuadratureResult r = integrate_panels(f, 0.0, kHalfPi, kinks, cfg);
  return std::exp(log_pref) * r.value;
}

double exterior_bound(int n, double d, const QuadratureConfig& cfg) {
  if (n < 1) throw AdmissibilityError("exterior_bound: n must be >= 1 (n = 0 with p = inf is divergent)");
  if (!(d > 0.0)) throw DomainError("exterior_bound: distance must be > 0");
  const ConstantResult k = k_sharp({n, ExponentP::infinity(), std::nullopt}, cfg);
  return k.value / std::pow(d, n);
}

std::vector<ConsistencyCase> consistency_report(const QuadratureConfig& cfg) {
  std::vector<ConsistencyCase> out;
  for (const RatioRow& row : kRatioTable) {
    const int n = 2 * row.m;
    const ExponentP inf = ExponentP::infinity();
    const auto cf = closed_form_lookup(n, inf);
    const ConstantResult k = k_sharp({n, inf, std::nullopt}, cfg, SharpOptions{false, 256});
    const BoundsPair b = bounds_even(row.m);
    ConsistencyCase c;
    c.n = n;
    c.formula_id = cf ? cf->id : "";
    c.printed = cf ? cf->value : std::numeric_limits<double>::quiet_NaN();
    c.quadrature = k.value;
    c.alpha_star = k.alpha_star.value_or(0.0);
    c.implied_by_lower = b.lower / row.lower_over_k;
    c.implied_by_upper = b.upper / row.upper_over_k;
    c.printed_rel_diff = (c.printed - c.quadrature) / c.quadrature;
    c.lower_rel_diff = (c.implied_by_lower - c.quadrature) / c.quadrature;
    c.upper_rel_diff = (c.implied_by_upper - c.quadrature) / c.quadrature;
    out.push_back(c);
  }
  return out;
}

}  // namespace realpart
