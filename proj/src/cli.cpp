#include "realpart/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "realpart/constants.hpp"
#include "realpart/errors.hpp"
#include "realpart/qkernel.hpp"
#include "realpart/sharpness.hpp"
#include "realpart/verify.hpp"

namespace realpart::cli {

namespace {

using nlohmann::ordered_json;

std::string fmt17(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// JSON has no infinity; non-finite numbers become null.
ordered_json num(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

ordered_json opt_num(const std::optional<double>& x) { return x ? num(*x) : ordered_json(nullptr); }

struct Options {
  int n = 1;
  std::string p = "inf";
  std::optional<double> alpha;
  std::optional<int> m;
  std::optional<double> gamma;
  std::optional<double> beta;
  double tol = 1e-10;
  std::string format;
  std::string out;
  std::uint64_t seed = 20240607;
  int points = 256;
  bool no_closed_form = false;
  std::string suite = "all";
  double T = 1e3;
  std::size_t N = std::size_t{1} << 18;
  double z_re = 0.0;
  double z_im = 1.0;
  double disk_re = 0.0;
  double disk_im = 0.0;
  std::string density;
  double a0 = 0.0;
  std::vector<double> a;
  std::vector<double> b;
  bool with_poly = false;
};

QuadratureConfig config_for(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be positive and finite");
  QuadratureConfig cfg;
  cfg.rel_tol = 0.1 * tol;
  cfg.abs_tol = 0.01 * tol;
  cfg.validate();
  return cfg;
}

// Renders rows as CSV (first row the header) or as a JSON array of objects.
std::string render_rows(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows,
                        const std::string& format) {
  if (format == "csv") {
    std::string s;
    for (std::size_t i = 0; i < header.size(); ++i) s += (i ? "," : "") + header[i];
    s += "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + fmt17(r[i]);
      s += "\n";
    }
    return s;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json o;
    for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = num(r[i]);
    arr.push_back(o);
  }
  return arr.dump(2) + "\n";
}

std::string render_object(const ordered_json& j, const std::string& format) {
  if (format != "csv") return j.dump(2) + "\n";
  std::string head;
  std::string row;
  bool first = true;
  for (const auto& [k, v] : j.items()) {
    if (v.is_structured()) continue;
    head += (first ? "" : ",") + k;
    std::string cell;
    if (v.is_number_float()) cell = fmt17(v.get<double>());
    else if (v.is_string()) cell = v.get<std::string>();
    else if (v.is_null()) cell = "";
    else cell = v.dump();
    row += (first ? "" : ",") + cell;
    first = false;
  }
  return head + "\n" + row + "\n";
}

ordered_json constant_json(int n, const ExponentP& p, const ConstantResult& r) {
  ordered_json j;
  j["n"] = n;
  j["p"] = p.to_string();
  j["value"] = num(r.value);
  j["log_value"] = num(r.log_value);
  j["method"] = r.method_string();
  j["alpha_star"] = opt_num(r.alpha_star);
  j["err_estimate"] = num(r.err_estimate);
  return j;
}

Outcome cmd_k(const Options& o, const QuadratureConfig& cfg) {
  const ExponentP p = ExponentP::parse(o.p);
  const ConstantResult r =
      k_sharp({o.n, p, o.alpha}, cfg, SharpOptions{!o.no_closed_form, o.points});
  ordered_json j = constant_json(o.n, p, r);
  if (o.alpha) j["alpha"] = *o.alpha;
  return {kSuccess, render_object(j, o.format), "", ""};
}

Outcome cmd_profile(const Options& o, const QuadratureConfig& cfg) {
  const ExponentP p = ExponentP::parse(o.p);
  check_admissible(o.n, p);
  if (o.points < 2) throw DomainError("--points must be at least 2");
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < o.points; ++i) {
    const double a = (std::numbers::pi / 2) * i / (o.points - 1);
    const double v = p.is_one() ? k_sharp({o.n, p, std::nullopt}, cfg).value : k_alpha(o.n, p, a, cfg);
    rows.push_back({a, v});
  }
  return {kSuccess, render_rows({"alpha", "K"}, rows, o.format.empty() ? "csv" : o.format), "", ""};
}

Outcome cmd_q(const Options& o, const QuadratureConfig& cfg) {
  if (!o.m || !o.gamma) throw DomainError("q requires --m and --gamma");
  const int m = *o.m;
  const double g = *o.gamma;
  validate(QSpec{m, o.n, g, 0.0});
  const QRegime reg = regime(m, o.n, g);
  ordered_json j;
  j["m"] = m;
  j["n"] = o.n;
  j["gamma"] = g;
  j["regime"] = to_string(reg);
  if (o.beta) {
    const QuadratureResult r = q_numeric_detailed({m, o.n, g, *o.beta}, cfg);
    j["beta"] = *o.beta;
    j["value"] = num(r.value);
    j["err_estimate"] = num(r.err_estimate);
  }
  const QMaximum mx = q_maximize(m, o.n, g, cfg);
  j["beta_star"] = num(mx.beta_star);
  j["max_value"] = num(mx.value);
  j["closed_form"] = reg == QRegime::unresolved ? ordered_json(nullptr) : num(q_closed(m, o.n, g));
  return {kSuccess, render_object(j, o.format), "", ""};
}

Outcome cmd_bounds(const Options& o, const QuadratureConfig& cfg) {
  if (!o.m) throw DomainError("bounds requires --m");
  const int m = *o.m;
  if (m < 1) throw DomainError("bounds requires m >= 1");
  const BoundsPair b = bounds_even(m);
  ordered_json j;
  j["m"] = m;
  j["lower"] = num(b.lower);
  j["upper"] = num(b.upper);
  j["log_lower"] = num(b.log_lower);
  j["log_upper"] = num(b.log_upper);
  if (m <= 16) {
    const ConstantResult k = k_sharp({2 * m, ExponentP::infinity(), std::nullopt}, cfg);
    j["k_sharp"] = num(k.value);
    j["method"] = k.method_string();
    j["lower_over_k"] = num(b.lower / k.value);
    j["upper_over_k"] = num(b.upper / k.value);
  } else {
    j["k_sharp"] = nullptr;
  }
  return {kSuccess, render_object(j, o.format), "", ""};
}

Outcome cmd_verify(const Options& o, const QuadratureConfig& cfg) {
  const auto results = verify::run_suite(o.suite, cfg, o.seed);
  const bool passed = verify::all_passed(results);
  ordered_json j;
  j["suite"] = o.suite;
  j["passed"] = passed;
  ordered_json checks = ordered_json::array();
  for (const auto& r : results) {
    ordered_json c;
    c["suite"] = r.suite;
    c["name"] = r.name;
    c["ok"] = r.ok;
    c["informational"] = r.informational;
    c["measured"] = num(r.measured);
    c["tolerance"] = num(r.tolerance);
    c["detail"] = r.detail;
    checks.push_back(c);
  }
  j["checks"] = checks;
  Outcome out{passed ? kSuccess : kAssertionFailure, j.dump(2) + "\n", "", ""};
  if (!passed) out.error = "verification failed";
  return out;
}

Outcome cmd_sharpness(const Options& o, const QuadratureConfig& cfg) {
  const ExponentP p = ExponentP::parse(o.p);
  const double alpha = o.alpha.value_or(0.0);
  if (o.density.empty()) {
    const SharpnessReport r = sharpness_report(o.n, p, alpha, o.T, o.N, cfg);
    Outcome out{r.ok ? kSuccess : kAssertionFailure, "", "", ""};
    out.output = o.format == "csv" ? render_object(ordered_json::parse(to_json(r)), "csv") : to_json(r) + "\n";
    if (!r.ok) out.error = "sharpness bound violated";
    return out;
  }
  check_admissible(o.n, p);
  std::ifstream in(o.density);
  if (!in) throw DomainError("cannot open density file '" + o.density + "'");
  const BoundaryDensity u = read_density_csv(in, p);
  const HalfPlanePoint z{o.z_re, o.z_im};
  z.validate();
  const SchwarzResult f = schwarz_derivative(u, o.n, z);
  const double k = k_alpha(o.n, p, alpha, cfg);
  const double lhs = std::pow(z.im, o.n + p.inv_p()) * std::abs((std::polar(1.0, alpha) * f.value).real());
  const double rhs = k * u.norm_p;
  ordered_json j;
  j["n"] = o.n;
  j["p"] = p.to_string();
  j["alpha"] = alpha;
  j["re"] = num(f.value.real());
  j["im"] = num(f.value.imag());
  j["norm_p"] = num(u.norm_p);
  j["lhs"] = num(lhs);
  j["rhs"] = num(rhs);
  j["ratio"] = num(lhs / rhs);
  j["tail_bound"] = num(f.tail_bound);
  j["slow_tail"] = f.slow_tail;
  const bool ok = lhs <= rhs * (1.0 + 1e-6);
  j["ok"] = ok;
  return {ok ? kSuccess : kAssertionFailure, render_object(j, o.format), ok ? "" : "sharpness bound violated", ""};
}

Outcome cmd_disk(const Options& o, const QuadratureConfig& cfg) {
  const ExponentP p = ExponentP::parse(o.p);
  ordered_json j;
  j["n"] = o.n;
  j["p"] = p.to_string();
  j["constant"] = num(disk_constant(o.n, p, cfg));
  if (!o.with_poly) return {kSuccess, render_object(j, o.format), "", ""};
  const TrigPolynomial u{o.a0, o.a, o.b};
  const DiskReport r = disk_verify(u, o.n, p, {o.disk_re, o.disk_im}, cfg);
  const ordered_json rep = ordered_json::parse(to_json(r));
  for (const auto& [k, v] : rep.items()) j[k] = v;
  return {r.ok ? kSuccess : kAssertionFailure, render_object(j, o.format), r.ok ? "" : "disk bound violated", ""};
}

Outcome cmd_table(const Options& o, const QuadratureConfig& cfg) {
  const ExponentP one = ExponentP::rational(1);
  const ExponentP two = ExponentP::rational(2);
  const ExponentP inf = ExponentP::infinity();
  std::vector<std::vector<double>> rows;
  for (int n = 0; n <= 8; ++n) {
    const double k1 = k_sharp({n, one, std::nullopt}, cfg).value;
    const double k2 = k_sharp({n, two, std::nullopt}, cfg).value;
    const double ki = n == 0 ? std::numeric_limits<double>::infinity() : k_sharp({n, inf, std::nullopt}, cfg).value;
    rows.push_back({static_cast<double>(n), k1, k2, ki});
  }
  std::vector<std::vector<double>> ratios;
  for (const RatioRow& t : kRatioTable) {
    const BoundsPair b = bounds_even(t.m);
    const double k = k_sharp({2 * t.m, inf, std::nullopt}, cfg, SharpOptions{false, 256}).value;
    ratios.push_back({static_cast<double>(t.m), b.lower / k, t.lower_over_k, b.upper / k, t.upper_over_k});
  }
  if (o.format == "csv") {
    return {kSuccess,
            render_rows({"n", "K_1", "K_2", "K_inf"}, rows, "csv") + "\n" +
                render_rows({"m", "L_over_K", "L_over_K_printed", "U_over_K", "U_over_K_printed"}, ratios, "csv"),
            "", ""};
  }
  ordered_json j;
  j["constants"] = ordered_json::parse(render_rows({"n", "K_1", "K_2", "K_inf"}, rows, "json"));
  j["ratios"] = ordered_json::parse(
      render_rows({"m", "L_over_K", "L_over_K_printed", "U_over_K", "U_over_K_printed"}, ratios, "json"));
  return {kSuccess, j.dump(2) + "\n", "", ""};
}

std::optional<double> env_tolerance() {
  const char* s = std::getenv("REALPART_TOL");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  if (*end != '\0') throw DomainError("REALPART_TOL is not a number: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Sharp constants in real-part estimates for derivatives of analytic functions", "realpart"};
  app.require_subcommand(1);

  std::vector<CLI::Option*> tol_opts;
  std::vector<CLI::Option*> poly_opts;
  auto common = [&](CLI::App* c) {
    tol_opts.push_back(c->add_option("--tol", o.tol, "quadrature tolerance (default 1e-10, or $REALPART_TOL)"));
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    c->add_option("--out", o.out, "write output to this file");
    c->add_option("--seed", o.seed, "seed for randomized checks");
  };
  auto np = [&](CLI::App* c) {
    c->add_option("--n", o.n, "derivative order")->required();
    c->add_option("--p", o.p, "exponent: inf, integer, decimal or fraction such as 3/2");
  };

  CLI::App* k = app.add_subcommand("k", "sharp constant K_{n,p}, or K_{n,p}(alpha) with --alpha");
  np(k);
  k->add_option("--alpha", o.alpha);
  k->add_option("--points", o.points, "initial grid for the alpha search");
  k->add_flag("--no-closed-form", o.no_closed_form, "always maximize by quadrature");
  common(k);

  CLI::App* profile = app.add_subcommand("profile", "K_{n,p}(alpha) on a uniform grid of [0, pi/2]");
  np(profile);
  profile->add_option("--points", o.points);
  common(profile);

  CLI::App* q = app.add_subcommand("q", "kernel integral Q_{2m,n,gamma}");
  q->add_option("--n", o.n)->required();
  q->add_option("--m", o.m)->required();
  q->add_option("--gamma", o.gamma)->required();
  q->add_option("--beta", o.beta);
  common(q);

  CLI::App* bounds = app.add_subcommand("bounds", "two-sided bounds for K_{2m,inf}");
  bounds->add_option("--m", o.m)->required();
  common(bounds);

  CLI::App* ver = app.add_subcommand("verify", "run an invariant suite");
  std::vector<std::string> names = verify::suite_names();
  names.push_back("all");
  ver->add_option("suite", o.suite, "suite name")->check(CLI::IsMember(names));
  common(ver);

  CLI::App* sharp = app.add_subcommand("sharpness", "extremal-density sharpness ratio");
  np(sharp);
  sharp->add_option("--alpha", o.alpha);
  sharp->add_option("--T", o.T, "truncation half-width");
  sharp->add_option("--N", o.N, "number of samples");
  sharp->add_option("--density", o.density, "CSV density (t,u) to evaluate instead");
  sharp->add_option("--re", o.z_re, "Re z for --density");
  sharp->add_option("--im", o.z_im, "Im z for --density");
  common(sharp);

  CLI::App* disk = app.add_subcommand("disk", "disk constant C_{n,p} and optional check");
  np(disk);
  poly_opts.push_back(disk->add_option("--a0", o.a0, "constant coefficient"));
  poly_opts.push_back(disk->add_option("--a", o.a, "cosine coefficients a_1,a_2,...")->delimiter(','));
  poly_opts.push_back(disk->add_option("--b", o.b, "sine coefficients b_1,b_2,...")->delimiter(','));
  disk->add_option("--re", o.disk_re, "Re z");
  disk->add_option("--im", o.disk_im, "Im z");
  common(disk);

  CLI::App* table = app.add_subcommand("table", "K_{n,1}, K_{n,2}, K_{n,inf} for n <= 8 and bound ratios");
  common(table);

  bool tol_given = false;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (const CLI::Option* t : tol_opts) tol_given = tol_given || t->count() > 0;
    for (const CLI::Option* t : poly_opts) o.with_poly = o.with_poly || t->count() > 0;
  } catch (const CLI::CallForHelp&) {
    return {kSuccess, app.help(), "", ""};
  } catch (const CLI::CallForAllHelp&) {
    return {kSuccess, app.help("", CLI::AppFormatMode::All), "", ""};
  } catch (const CLI::ParseError& e) {
    return {kUsageError, "", e.what(), ""};
  }

  Outcome out;
  try {
    if (!tol_given) {
      if (auto env = env_tolerance()) o.tol = *env;
    }
    const QuadratureConfig cfg = config_for(o.tol);
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "k") out = cmd_k(o, cfg);
    else if (name == "profile") out = cmd_profile(o, cfg);
    else if (name == "q") out = cmd_q(o, cfg);
    else if (name == "bounds") out = cmd_bounds(o, cfg);
    else if (name == "verify") out = cmd_verify(o, cfg);
    else if (name == "sharpness") out = cmd_sharpness(o, cfg);
    else if (name == "disk") out = cmd_disk(o, cfg);
    else out = cmd_table(o, cfg);
  } catch (const ConvergenceError& e) {
    return {kNonConvergence, "", e.what(), ""};
  } catch (const AdmissibilityError& e) {
    return {kUsageError, "", e.what(), ""};
  } catch (const DomainError& e) {
    return {kUsageError, "", e.what(), ""};
  } catch (const std::logic_error& e) {
    return {kUsageError, "", e.what(), ""};
  } catch (const std::exception& e) {
    return {kNonConvergence, "", e.what(), ""};
  }
  out.out_path = o.out;
  return out;
}

int main_entry(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const Outcome r = run(args);
  if (!r.error.empty()) std::cerr << "realpart: " << r.error << "\n";
  if (r.out_path.empty()) {
    std::cout << r.output;
  } else if (!r.output.empty()) {
    std::ofstream f(r.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "realpart: cannot write '" << r.out_path << "'\n";
      return kUsageError;
    }
    f << r.output;
  }
  return r.exit_code;
}

}  // namespace realpart::cli
