/* Copyright 2026 The berezin-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Exit codes: 0 all verdicts pass, 1 some verdict
// failed (the worst row is printed), 2 usage or parse error, 3 numeric failure.

#ifndef BEREZIN_CLI_HPP
#define BEREZIN_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "berezin/bounds.hpp"
#include "berezin/constants.hpp"
#include "berezin/domain_text.hpp"
#include "berezin/error.hpp"
#include "berezin/harness.hpp"
#include "berezin/remainder.hpp"
#include "berezin/report_io.hpp"
#include "berezin/spectra.hpp"

namespace berezin::cli {

enum ExitCode : int { kOk = 0, kVerdictFailed = 1, kUsage = 2, kNumeric = 3 };

namespace detail {

struct Options {
  double sigma = 1.5;
  int dim = 0;
  double mu = 0.0;
  double scan_upper = 60.0;
  double tol = 1e-12;
  std::string domain;
  int axis = 0;
  double cutoff = 0.0;
  std::vector<double> lambda;
  double lambda_min = 1.0;
  double lambda_max = 0.0;
  int points = 0;
  long long n_max = 0;
  std::string nu = "auto";
  std::optional<double> melas_m;
  int quad_points = 0;
  double slack = 1e-9;
  std::string csv;
  int workers = 1;
};

inline Domain make_domain(const Options& o) {
  Domain dom = parse_domain(o.domain);
  return o.axis ? dom.with_axis(o.axis) : dom;
}

inline std::string domain_label(const Domain& dom) { return render_domain(dom); }

inline void apply_nu(const Options& o, SweepConfig& cfg) {
  if (o.nu == "auto") return;
  double value = 0.0;
  const char* first = o.nu.data();
  const char* last = first + o.nu.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value))
    throw ParseError("--nu expects a number or 'auto', got '" + o.nu + "'", static_cast<std::size_t>(ptr - first));
  cfg.nu_mode = NuMode::explicit_value;
  cfg.nu_value = value;
}

inline SweepConfig base_config(const Options& o) {
  SweepConfig cfg{make_domain(o)};
  cfg.sigma = o.sigma;
  cfg.quad_points = o.quad_points;
  cfg.slack = o.slack;
  cfg.workers = o.workers;
  cfg.melas_M = o.melas_m;
  cfg.domain_text = domain_label(cfg.domain);
  apply_nu(o, cfg);
  return cfg;
}

inline std::vector<double> lambda_grid(const Options& o) {
  if (!o.lambda.empty()) {
    std::vector<double> g = o.lambda;
    std::sort(g.begin(), g.end());
    return g;
  }
  if (!(o.lambda_max > 0.0) || o.points < 2)
    throw DomainError("give --lambda values or --lambda-max with --points >= 2");
  return numeric::log_grid(o.lambda_min, o.lambda_max, o.points);
}

// All N in [1, n_max], or `points` log-spaced integers when points > 0.
inline std::vector<double> n_grid(const Options& o) {
  if (o.n_max < 1) throw DomainError("--n-max must be at least 1");
  std::vector<double> g;
  if (o.points <= 0 || o.points >= o.n_max) {
    for (long long n = 1; n <= o.n_max; ++n) g.push_back(static_cast<double>(n));
    return g;
  }
  for (double x : numeric::log_grid(1.0, static_cast<double>(o.n_max), o.points)) {
    const double n = std::round(x);
    if (g.empty() || n > g.back()) g.push_back(n);
  }
  return g;
}

template <typename Writer>
void emit_csv(const std::string& path, std::ostream& out, Writer&& write) {
  if (path.empty()) return;
  if (path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open " + path + " for writing");
  write(file);
  if (!file.flush()) throw DomainError("failed writing " + path);
}

inline int finish(const BoundReport& report, const Options& o, std::ostream& out) {
  emit_csv(o.csv, out, [&](std::ostream& s) { io::write_csv(s, report); });
  if (o.csv != "-") io::write_summary(out, report);
  return report.failures() ? kVerdictFailed : kOk;
}

inline void print(std::ostream& out, const char* name, double value) {
  out << name << " = " << io::format_short(value) << '\n';
}

inline int cmd_constants(const Options& o, std::ostream& out) {
  const SemiclassicalParams p{o.sigma, o.dim};
  p.validate();
  print(out, "L_cl(sigma,d)", lt_classical(p));
  print(out, "L_cl(0,d)", lt_classical({0.0, p.dim}));
  print(out, "c(sigma,d)", c_const(p));
  print(out, "omega_d", unit_ball_volume(p.dim));
  if (p.dim >= 2) {
    print(out, "L_cl(sigma,d-1)", lt_classical({p.sigma, p.dim - 1}));
    print(out, "dimension_reduction_residual", dimension_reduction_identity_residual(p));
    print(out, "nu_nonnegativity_limit", nu_nonnegativity_limit(p));
  }
  if (p.sigma >= 1.0) print(out, "rho(sigma,d)", rho_lower(p));
  return kOk;
}

inline int cmd_epsilon(const Options& o, bool have_mu, std::ostream& out) {
  double mu = o.mu;
  std::optional<SemiclassicalParams> p;
  if (!have_mu) {
    if (o.dim < 2) throw DomainError("epsilon: give --mu, or --sigma with --dim >= 2");
    p = SemiclassicalParams{o.sigma, o.dim};
    p->validate();
    mu = section_exponent(*p);
  }
  const RemainderResult r = epsilon_mu(mu, {o.scan_upper, o.tol});
  print(out, "mu", r.mu);
  print(out, "epsilon_mu", r.epsilon);
  print(out, "argmin_A", r.argmin_A);
  print(out, "argmin_tolerance", r.tol);
  print(out, "scan_upper", r.scan_upper);
  print(out, "nu_lower (4*epsilon_mu)", 4.0 * r.epsilon);
  print(out, "nu_upper (2*min(1,B(1+mu,1/2)))", 2.0 * std::min(1.0, specfun::beta(1.0 + mu, 0.5)));
  if (p) print(out, "nu_nonnegativity_limit", nu_nonnegativity_limit(*p));
  return kOk;
}

inline int cmd_spectrum(const Options& o, std::ostream& out) {
  const Domain dom = make_domain(o);
  const Spectrum spec = enumerate(dom, o.cutoff);
  if (o.csv.empty() || o.csv == "-") {
    io::write_spectrum_csv(out, spec);
    return kOk;
  }
  emit_csv(o.csv, out, [&](std::ostream& s) { io::write_spectrum_csv(s, spec); });
  out << "domain " << domain_label(dom) << ": " << spec.size() << " eigenvalues in " << spec.levels().size()
      << " distinct levels below " << io::format_short(o.cutoff) << '\n';
  return kOk;
}

inline int cmd_check(const Options& o, std::ostream& out) {
  if (o.lambda.size() != 1) throw DomainError("check: give exactly one --lambda");
  SweepConfig cfg = base_config(o);
  cfg.grid = o.lambda;
  return finish(sweep_riesz(cfg), o, out);
}

inline int cmd_sweep(const Options& o, std::ostream& out) {
  SweepConfig cfg = base_config(o);
  cfg.grid = lambda_grid(o);
  return finish(sweep_riesz(cfg), o, out);
}

inline int cmd_sums(const Options& o, std::ostream& out) {
  SweepConfig cfg = base_config(o);
  cfg.grid = n_grid(o);
  return finish(sweep_sums(cfg), o, out);
}

inline int cmd_asymptotics(const Options& o, std::ostream& out) {
  const Domain dom = make_domain(o);
  const BoundReport report = asymptotic_diagnostics(dom, o.sigma, lambda_grid(o), o.slack, domain_label(dom));
  return finish(report, o, out);
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Numerical laboratory for semiclassical eigenvalue bounds of the Dirichlet Laplacian",
               "berezin-lab"};
  app.set_version_flag("--version", std::string("berezin-lab ") + kVersion);
  app.require_subcommand(1);

  const auto add_domain = [&](CLI::App* sub) {
    sub->add_option("--domain", o.domain, "box:a1xa2[x...] | disk:R | union:box(..)@(..)+... [;axis=i]")
        ->required();
    sub->add_option("--axis", o.axis, "Slicing axis (1-based); overrides the domain text")->check(CLI::PositiveNumber);
  };
  const auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--sigma", o.sigma, "Riesz exponent")->capture_default_str();
    sub->add_option("--nu", o.nu, "Correction constant: a number or 'auto' (4*epsilon)")->capture_default_str();
    sub->add_option("--quad-points", o.quad_points, "Quadrature points per transverse axis (0 = default)");
    sub->add_option("--slack", o.slack, "Relative verdict slack")->capture_default_str();
    sub->add_option("--csv", o.csv, "Write the CSV report to this path ('-' for stdout)");
    sub->add_option("--workers", o.workers, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  };
  const auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--lambda", o.lambda, "Explicit lambda values");
    sub->add_option("--lambda-min", o.lambda_min, "Smallest lambda of the log grid")->capture_default_str();
    sub->add_option("--lambda-max", o.lambda_max, "Largest lambda of the log grid");
    sub->add_option("--points", o.points, "Number of log-spaced grid points");
  };

  auto* constants = app.add_subcommand("constants", "Semiclassical constants for (sigma, d)");
  constants->add_option("--sigma", o.sigma, "Riesz exponent")->capture_default_str();
  constants->add_option("--dim", o.dim, "Dimension")->required();

  auto* epsilon = app.add_subcommand("epsilon", "Remainder constant epsilon_mu and the nu bracket");
  auto* mu_opt = epsilon->add_option("--mu", o.mu, "Exponent mu");
  epsilon->add_option("--sigma", o.sigma, "Riesz exponent (with --dim)")->excludes(mu_opt);
  epsilon->add_option("--dim", o.dim, "Dimension (mu = sigma + (d-1)/2)")->excludes(mu_opt);
  epsilon->add_option("--scan-upper", o.scan_upper, "Upper end of the scan in A")->capture_default_str();
  epsilon->add_option("--tol", o.tol, "Argmin tolerance")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Exact eigenvalues below a cutoff");
  add_domain(spectrum);
  spectrum->add_option("--cutoff", o.cutoff, "Spectral cutoff")->required();
  spectrum->add_option("--csv", o.csv, "Write (eigenvalue, multiplicity) rows to this path");

  auto* check = app.add_subcommand("check", "All Riesz-mean bounds at one lambda");
  add_domain(check);
  add_bounds(check);
  check->add_option("--lambda", o.lambda, "Spectral parameter")->required()->expected(1);

  auto* sweep = app.add_subcommand("sweep", "Riesz-mean bounds along a lambda grid");
  add_domain(sweep);
  add_bounds(sweep);
  add_grid(sweep);

  auto* sums = app.add_subcommand("sums", "Eigenvalue-sum bounds for N = 1..n_max");
  add_domain(sums);
  sums->add_option("--sigma", o.sigma, "Exponent of the eigenvalue sums")->capture_default_str();
  sums->add_option("--n-max", o.n_max, "Largest N")->required();
  sums->add_option("--points", o.points, "Log-spaced N values instead of every N");
  sums->add_option("--melas-m", o.melas_m, "Melas constant M(d); the Melas column is n/a without it");
  sums->add_option("--quad-points", o.quad_points, "Quadrature points for the moment J (0 = default)");
  sums->add_option("--slack", o.slack, "Relative verdict slack")->capture_default_str();
  sums->add_option("--csv", o.csv, "Write the CSV report to this path ('-' for stdout)");
  sums->add_option("--workers", o.workers, "Worker threads (0 = hardware concurrency)")->capture_default_str();

  auto* asymptotics = app.add_subcommand("asymptotics", "Weyl ratios along a lambda list");
  add_domain(asymptotics);
  asymptotics->add_option("--sigma", o.sigma, "Riesz exponent")->capture_default_str();
  asymptotics->add_option("--slack", o.slack, "Relative verdict slack")->capture_default_str();
  asymptotics->add_option("--csv", o.csv, "Write the CSV report to this path ('-' for stdout)");
  add_grid(asymptotics);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*constants) return detail::cmd_constants(o, out);
    if (*epsilon) return detail::cmd_epsilon(o, mu_opt->count() > 0, out);
    if (*spectrum) return detail::cmd_spectrum(o, out);
    if (*check) return detail::cmd_check(o, out);
    if (*sweep) return detail::cmd_sweep(o, out);
    if (*sums) return detail::cmd_sums(o, out);
    return detail::cmd_asymptotics(o, out);
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, out, err);
}

}  // namespace berezin::cli

#endif  // BEREZIN_CLI_HPP
