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

// Sweeps that evaluate every bound on a grid of Λ or N and record a verdict
// for every inequality. One spectrum is enumerated per sweep and shared by all
// rows; rows are independent and may be evaluated by several workers without
// changing a single bit of the result.

#ifndef BEREZIN_HARNESS_HPP
#define BEREZIN_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "berezin/bounds.hpp"
#include "berezin/constants.hpp"
#include "berezin/error.hpp"
#include "berezin/geometry.hpp"
#include "berezin/remainder.hpp"
#include "berezin/spectra.hpp"

#ifndef BEREZIN_VERSION
#define BEREZIN_VERSION "0.1.0"
#endif

namespace berezin {

inline constexpr const char* kVersion = BEREZIN_VERSION;

enum class NuMode { theorem_default, explicit_value };

struct SweepConfig {
  Domain domain;
  double sigma = 1.5;
  std::vector<double> grid;  // Λ values for Riesz sweeps, N values for sum sweeps
  NuMode nu_mode = NuMode::theorem_default;
  double nu_value = 0.0;
  std::optional<double> melas_M;
  int quad_points = 0;
  double slack = 1e-9;
  int workers = 1;  // 0 uses the hardware concurrency
  std::string domain_text;
};

struct ReportMetadata {
  std::string kind;
  std::string domain;
  double sigma = 0.0;
  std::optional<double> nu;
  std::string nu_source;
  bool nu_guaranteed = false;
  std::optional<RemainderResult> remainder;
  std::optional<double> melas_M;
  double slack = 0.0;
  std::string version = kVersion;
};

struct ReportRow {
  std::vector<double> values;
  std::vector<Verdict> verdicts;
};

struct BoundReport {
  ReportMetadata meta;
  std::vector<std::string> value_columns;
  std::vector<std::string> verdict_columns;
  std::vector<ReportRow> rows;

  std::size_t count(Outcome o) const {
    std::size_t n = 0;
    for (const auto& r : rows)
      for (const auto& v : r.verdicts) n += v.outcome == o;
    return n;
  }

  std::size_t count(Outcome o, std::size_t column) const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.verdicts[column].outcome == o;
    return n;
  }

  std::size_t failures() const { return count(Outcome::fail); }

  struct Location {
    std::size_t row = 0;
    std::size_t verdict = 0;
    double relative_margin = 0.0;
  };

  /// Failing verdict with the most negative relative margin.
  std::optional<Location> worst_failure() const {
    std::optional<Location> worst;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].verdicts.size(); ++j) {
        const auto& v = rows[i].verdicts[j];
        if (v.outcome != Outcome::fail) continue;
        const double rel = std::isnan(v.margin) ? -INFINITY : v.relative_margin();
        if (!worst || rel < worst->relative_margin) worst = Location{i, j, rel};
      }
    return worst;
  }

  /// Smallest relative margin among evaluated verdicts of one column.
  std::optional<double> tightest(std::size_t column) const {
    std::optional<double> m;
    for (const auto& r : rows) {
      const auto& v = r.verdicts[column];
      if (v.outcome == Outcome::not_applicable) continue;
      if (!m || v.relative_margin() < *m) m = v.relative_margin();
    }
    return m;
  }

  std::size_t value_index(const std::string& name) const {
    const auto it = std::find(value_columns.begin(), value_columns.end(), name);
    if (it == value_columns.end()) throw DomainError("no report column named " + name);
    return static_cast<std::size_t>(it - value_columns.begin());
  }

  std::size_t verdict_index(const std::string& name) const {
    const auto it = std::find(verdict_columns.begin(), verdict_columns.end(), name);
    if (it == verdict_columns.end()) throw DomainError("no verdict named " + name);
    return static_cast<std::size_t>(it - verdict_columns.begin());
  }
};

/// Runs body(i) for i in [0, count) on `workers` threads; rethrows the first error.
template <typename Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
  if (workers <= 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(count, 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
          try {
            body(i);
          } catch (...) {
            const std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(count);
          }
        }
      });
  }
  if (error) std::rethrow_exception(error);
}

namespace detail {

inline void validate_grid(const std::vector<double>& grid, const char* what) {
  if (grid.empty()) throw DomainError(std::string(what) + " grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i])) throw DomainError(std::string(what) + " grid must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw DomainError(std::string(what) + " grid must be strictly increasing");
  }
}

inline bool is_box_like(const Domain& dom) { return dom.as<AxisBox>() || dom.as<BoxUnion>(); }

inline std::optional<double> try_surface(const Domain& dom) {
  try {
    return surface(dom);
  } catch (const UnsupportedDomainError&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Riesz-mean side: one row per Λ with every bound and the proof chain
/// S <= sliced <= improved(ν) <= S^cl checked row by row.
inline BoundReport sweep_riesz(const SweepConfig& cfg) {
  detail::validate_grid(cfg.grid, "lambda");
  if (!(cfg.slack > 0.0)) throw DomainError("slack must be positive");
  const Domain& dom = cfg.domain;
  const SemiclassicalParams p{cfg.sigma, dom.dim()};
  p.validate();

  const Spectrum spec = enumerate(dom, cfg.grid.back());
  const double vol = volume(dom);
  const std::optional<double> surf = detail::try_surface(dom);
  const bool improved_applies = p.sigma >= 1.5 && p.dim >= 2;

  BoundReport report;
  report.meta.kind = "riesz";
  report.meta.domain = cfg.domain_text;
  report.meta.sigma = cfg.sigma;
  report.meta.slack = cfg.slack;

  double nu = 0.0;
  BoundMode mode = BoundMode::theorem;
  std::optional<double> nonneg_limit;
  if (improved_applies) {
    const NuBounds nb = nu_bounds(p);
    report.meta.remainder = nb.remainder;
    nonneg_limit = nu_nonnegativity_limit(p);
    if (cfg.nu_mode == NuMode::theorem_default) {
      nu = nb.lower;
      report.meta.nu_source = "4*epsilon_mu";
    } else {
      nu = cfg.nu_value;
      report.meta.nu_source = "explicit";
    }
    report.meta.nu = nu;
    report.meta.nu_guaranteed = nu >= 0.0 && nu <= nb.lower;
    if (!report.meta.nu_guaranteed) mode = BoundMode::exploratory;
  }

  report.value_columns = {"lambda", "n",        "S",        "eta",              "S_cl",
                          "sliced", "improved", "two_term", "vol_omega_lambda", "d_lambda"};
  report.verdict_columns = {"berezin",        "chain_left",  "chain_mid", "chain_right",
                            "improved_bound", "nonnegative", "geometry",  "polya"};
  report.rows.resize(cfg.grid.size());

  const double nan = std::numeric_limits<double>::quiet_NaN();
  parallel_for(cfg.grid.size(), cfg.workers, [&](std::size_t i) {
    const double lambda = cfg.grid[i];
    const auto n = counting(spec, lambda);
    const double S = riesz_mean(spec, p.sigma, lambda);
    const double eta = phase_space_eta(p.dim, vol, lambda);
    const double s_cl = s_classical(p, vol, lambda);
    const SlicingStats st = slicing_stats(dom, lambda, cfg.quad_points);
    const double two_term = (surf && p.dim >= 2) ? two_term_riesz(p, vol, *surf, lambda) : nan;
    double sliced = nan, improved = nan;
    if (improved_applies) {
      sliced = sliced_bound(dom, p, lambda, cfg.quad_points);
      improved = improved_rhs({p, lambda, st.vol_omega_lambda, st.d_lambda, nu}, mode);
    }

    ReportRow& row = report.rows[i];
    row.values = {lambda, static_cast<double>(n), S, eta, s_cl, sliced, improved, two_term, st.vol_omega_lambda,
                  st.d_lambda};
    const double s = cfg.slack;
    row.verdicts.assign(report.verdict_columns.size(), Verdict::na());
    if (p.sigma >= 1.0) row.verdicts[0] = check_le(S, s_cl, s);
    if (improved_applies) {
      row.verdicts[1] = check_le(S, sliced, s);
      row.verdicts[2] = check_le(sliced, improved, s);
      row.verdicts[3] = check_le(improved, s_cl, s);
      row.verdicts[4] = check_le(S, improved, s);
      if (nu <= *nonneg_limit) row.verdicts[5] = check_le(0.0, improved, s);
    }
    row.verdicts[6] = check_le(std::numbers::pi / std::sqrt(lambda) * st.d_lambda, st.vol_omega_lambda, s);
    if (detail::is_box_like(dom)) row.verdicts[7] = check_le(static_cast<double>(n), eta, s);
  });
  return report;
}

/// Enumerates a spectrum holding at least `count` eigenvalues.
inline Spectrum spectrum_with_count(const Domain& dom, std::int64_t count) {
  const double weyl = std::pow(count / (lt_classical({0.0, dom.dim()}) * volume(dom)), 2.0 / dom.dim());
  double cutoff = 1.25 * weyl + 50.0;
  for (int attempt = 0; attempt < 60; ++attempt) {
    Spectrum spec = enumerate(dom, cutoff);
    if (spec.size() >= count) return spec;
    cutoff *= 1.5;
  }
  throw CutoffError("could not reach " + std::to_string(count) + " eigenvalues", cutoff);
}

/// Sum side: one row per N with Li-Yau, Melas (given M), the λ_N lower bound,
/// the Hölder chain and the two-term prediction.
inline BoundReport sweep_sums(const SweepConfig& cfg) {
  detail::validate_grid(cfg.grid, "N");
  if (!(cfg.slack > 0.0)) throw DomainError("slack must be positive");
  if (!(cfg.sigma > 0.0)) throw DomainError("sweep_sums: sigma must be positive");
  for (double N : cfg.grid)
    if (N != std::floor(N)) throw DomainError("N grid must hold integers");
  const Domain& dom = cfg.domain;
  const SemiclassicalParams p{cfg.sigma, dom.dim()};
  p.validate();

  const auto n_max = static_cast<std::int64_t>(cfg.grid.back());
  const Spectrum spec = spectrum_with_count(dom, n_max);
  const double vol = volume(dom);
  const std::optional<double> surf = detail::try_surface(dom);
  const std::optional<double> J = cfg.melas_M ? std::optional<double>(moment_J(dom, cfg.quad_points)) : std::nullopt;

  BoundReport report;
  report.meta.kind = "sums";
  report.meta.domain = cfg.domain_text;
  report.meta.sigma = cfg.sigma;
  report.meta.slack = cfg.slack;
  report.meta.melas_M = cfg.melas_M;
  report.value_columns = {"N",        "lambda_N", "s_1",          "s_sigma",
                          "s_cl",     "li_yau",   "melas",        "lambda_lower",
                          "two_term"};
  report.verdict_columns = {"li_yau", "melas", "lambda_lower", "holder", "rho"};
  report.rows.resize(cfg.grid.size());

  const double nan = std::numeric_limits<double>::quiet_NaN();
  parallel_for(cfg.grid.size(), cfg.workers, [&](std::size_t i) {
    const double N = cfg.grid[i];
    const auto Ni = static_cast<std::int64_t>(N);
    const double lambda_N = eigenvalue(spec, Ni);
    const double s1 = partial_sum(spec, 1.0, Ni);
    const double s_sigma = partial_sum(spec, p.sigma, Ni);
    const double s_cl = sum_classical(p, vol, N);
    const double ly = li_yau_rhs(p.dim, vol, N);
    const double melas = J ? melas_rhs(p.dim, vol, *J, N, cfg.melas_M) : nan;
    const double lower = eigenvalue_lower(p.dim, vol, N);
    const double two_term = (surf && p.dim >= 2) ? two_term_sum(p, vol, *surf, N) : nan;

    ReportRow& row = report.rows[i];
    row.values = {N, lambda_N, s1, s_sigma, s_cl, ly, melas, lower, two_term};
    const double s = cfg.slack;
    row.verdicts.assign(report.verdict_columns.size(), Verdict::na());
    row.verdicts[0] = check_le(ly, s1, s);
    if (J) row.verdicts[1] = check_le(melas, s1, s);
    row.verdicts[2] = check_le(lower, lambda_N, s);
    if (p.sigma > 1.0) row.verdicts[3] = check_le(s1, std::pow(s_sigma, 1.0 / p.sigma) * std::pow(N, 1.0 - 1.0 / p.sigma), s);
    if (p.sigma >= 1.0) row.verdicts[4] = check_le(rho_lower(p) * s_cl, s_sigma, s);
  });
  return report;
}

/// Weyl diagnostics along a list of Λ: ratio_1 = S/S^cl and
/// ratio_2 = (S^cl - S) / ((1/4) L_{σ,d-1} |∂Ω| Λ^{σ+(d-1)/2}).
/// Verdicts: ratio_1 <= 1 (σ >= 1) and ratio_1 strictly closer to 1 than at the previous Λ.
inline BoundReport asymptotic_diagnostics(const Domain& dom, double sigma, const std::vector<double>& lambdas,
                                          double slack = 1e-9, const std::string& domain_text = {}) {
  if (lambdas.size() < 2) throw DomainError("asymptotic_diagnostics: need at least two lambda values");
  detail::validate_grid(lambdas, "lambda");
  const double surf = surface(dom);
  if (dom.dim() < 2) throw DomainError("asymptotic_diagnostics: requires dim >= 2");
  const SemiclassicalParams p{sigma, dom.dim()};
  p.validate();
  const Spectrum spec = enumerate(dom, lambdas.back());
  const double vol = volume(dom);

  BoundReport report;
  report.meta.kind = "asymptotics";
  report.meta.domain = domain_text;
  report.meta.sigma = sigma;
  report.meta.slack = slack;
  report.value_columns = {"lambda", "S", "S_cl", "ratio_1", "ratio_2"};
  report.verdict_columns = {"berezin", "closer_to_one"};
  const double boundary_coeff = 0.25 * lt_classical({sigma, p.dim - 1}) * surf;
  double previous_gap = 0.0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const double lambda = lambdas[i];
    const double S = riesz_mean(spec, sigma, lambda);
    const double s_cl = s_classical(p, vol, lambda);
    const double r1 = S / s_cl;
    const double r2 = (s_cl - S) / (boundary_coeff * std::pow(lambda, section_exponent(p)));
    ReportRow row;
    row.values = {lambda, S, s_cl, r1, r2};
    row.verdicts.assign(2, Verdict::na());
    if (sigma >= 1.0) row.verdicts[0] = check_le(S, s_cl, slack);
    const double gap = std::abs(1.0 - r1);
    if (i > 0) {
      const Outcome o = gap < previous_gap ? Outcome::pass : Outcome::fail;
      row.verdicts[1] = {o, previous_gap - gap, 1.0};
    }
    previous_gap = gap;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace berezin

#endif  // BEREZIN_HARNESS_HPP
