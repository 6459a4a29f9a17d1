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

// Acceptance suite: one pass/fail line per criterion, exit status 0 only when
// every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../generators.hpp"
#include "../oracles.hpp"
#include "berezin/berezin.hpp"
#include "berezin/cli.hpp"

using berezin::Domain;
using berezin::Outcome;
using berezin::SemiclassicalParams;
constexpr double pi = std::numbers::pi;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

berezin::BoundReport riesz(const Domain& dom, double sigma, double lambda_max, int points) {
  berezin::SweepConfig cfg{dom};
  cfg.sigma = sigma;
  cfg.grid = berezin::numeric::log_grid(1.0, lambda_max, points);
  return berezin::sweep_riesz(cfg);
}

std::size_t chain_failures(const berezin::BoundReport& r) {
  std::size_t n = 0;
  for (const char* c : {"chain_left", "chain_mid", "chain_right"}) {
    const auto i = r.verdict_index(c);
    n += r.count(Outcome::fail, i) + r.count(Outcome::not_applicable, i);
  }
  return n;
}

// 4ε₂ lies in (1.91, 2.0]; under 5 s.
Result ac1() {
  Stopwatch t;
  const auto r = berezin::epsilon_mu(2.0);
  const double s = t.seconds();
  const double nu = 4.0 * r.epsilon;
  return {nu > 1.91 && nu <= 2.0 && s < 5.0,
          fmt("remainder bracket: 4*eps_2 = %.10f (A* = %.6f) in (1.91, 2.0], %.2f s (limit 5 s)", nu, r.argmin_A, s)};
}

// Dimension-reduction identity residual <= 1e-12 on the (σ, d) grid.
Result ac2() {
  double worst = 0.0;
  for (double sigma : {1.0, 1.5, 2.0, 3.0, 5.0})
    for (int d = 2; d <= 6; ++d)
      worst = std::max(worst, berezin::dimension_reduction_identity_residual({sigma, d}));
  return {worst <= 1e-12, fmt("dimension reduction identity: worst residual %.3g over 25 (sigma, d) (limit 1e-12)", worst)};
}

// Proof chain on the unit square, σ = 3/2, 200 points to 5e4, under 30 s.
Result ac3() {
  Stopwatch t;
  const auto r = riesz(Domain::box({1, 1}), 1.5, 5e4, 200);
  const double s = t.seconds();
  const auto bad = chain_failures(r);
  const double tight = *r.tightest(r.verdict_index("chain_mid"));
  return {bad == 0 && r.rows.size() == 200 && r.meta.nu_guaranteed && s < 30.0,
          fmt("unit square chain: %zu rows, %zu failures, nu = %.6f, tightest mid margin %.3g, %.2f s (limit 30 s)",
              r.rows.size(), bad, *r.meta.nu, tight, s)};
}

// Same chain on the 2x1 box, two separated unit squares and the unit disk.
Result ac4() {
  struct Case {
    const char* name;
    Domain dom;
    double lambda_max;
  };
  const std::vector<Case> cases{
      {"box 2x1", Domain::box({2, 1}), 5e4},
      {"two squares", Domain::box_union({{{1, 1}, {0, 0}}, {{1, 1}, {2, 0}}}), 5e4},
      {"unit disk", Domain::disk(1), 1e4},
  };
  std::size_t rows = 0, bad = 0;
  for (const auto& c : cases)
    for (double sigma : {1.5, 2.0}) {
      const auto r = riesz(c.dom, sigma, c.lambda_max, 200);
      rows += r.rows.size();
      bad += chain_failures(r) + r.count(Outcome::fail);
    }
  return {bad == 0, fmt("chain on box 2x1, two squares, disk (sigma 3/2, 2): %zu rows, %zu failures", rows, bad)};
}

// Geometry invariant and non-negativity of the improved bound on random unions.
Result ac5() {
  std::mt19937_64 rng(20260501);
  std::size_t geometry_bad = 0, negative = 0, checks = 0;
  const std::vector<double> sigmas{1.5, 2.0, 3.0};
  std::vector<double> lower;
  for (double sigma : sigmas) lower.push_back(berezin::nu_bounds({sigma, 2}).lower);
  for (int i = 0; i < 100; ++i) {
    const Domain dom = gen::random_union(rng);
    for (int j = 0; j < 10; ++j) {
      const double lambda = gen::log_uniform(rng, 1.0, 1e4);
      const auto st = berezin::slicing_stats(dom, lambda);
      geometry_bad += berezin::check_le(pi / std::sqrt(lambda) * st.d_lambda, st.vol_omega_lambda, 1e-12).outcome ==
                      Outcome::fail;
      for (std::size_t k = 0; k < sigmas.size(); ++k) {
        const SemiclassicalParams p{sigmas[k], 2};
        const double limit = berezin::nu_nonnegativity_limit(p);
        const double bulk = berezin::improved_rhs({p, lambda, st.vol_omega_lambda, st.d_lambda, 0.0});
        for (double nu : {lower[k], 0.5 * limit, limit}) {
          const double rhs = berezin::improved_rhs({p, lambda, st.vol_omega_lambda, st.d_lambda, nu},
                                                   berezin::BoundMode::exploratory);
          negative += rhs < -1e-12 * bulk;
          ++checks;
        }
      }
    }
  }
  return {geometry_bad == 0 && negative == 0,
          fmt("geometry invariant: 1000 (union, lambda) pairs, %zu failures; improved bound >= 0 for nu <= 2B: "
              "%zu checks, %zu negative",
              geometry_bad, checks, negative)};
}

// Weyl ratios on the unit square.
Result ac6() {
  const auto r = berezin::asymptotic_diagnostics(Domain::box({1, 1}), 1.5, {4e2, 4e4});
  const double lo = r.rows[0].values[r.value_index("ratio_1")];
  const double hi = r.rows[1].values[r.value_index("ratio_1")];
  const double r2 = r.rows[1].values[r.value_index("ratio_2")];
  const bool pass = hi >= 0.9 && hi <= 1.0 && std::abs(1 - hi) < std::abs(1 - lo) && r2 >= 0.8 && r2 <= 1.2;
  return {pass, fmt("Weyl ratios: S/S_cl = %.6f at 4e2, %.6f at 4e4 (in [0.9, 1], closer to 1); second-term ratio "
                    "%.6f (in [0.8, 1.2])",
                    lo, hi, r2)};
}

// Sum-side bounds on three boxes.
Result ac7() {
  const std::vector<Domain> boxes{Domain::box({1, 1}), Domain::box({2, 1}), Domain::box({pi, 1})};
  std::size_t ly_bad = 0, lower_bad = 0, polya_bad = 0, holder_bad = 0, polya_checks = 0;
  for (const auto& dom : boxes) {
    berezin::SweepConfig cfg{dom};
    cfg.sigma = 1.0;
    for (int n = 1; n <= 10000; ++n) cfg.grid.push_back(n);
    const auto r = berezin::sweep_sums(cfg);
    ly_bad += r.count(Outcome::fail, r.verdict_index("li_yau"));
    lower_bad += r.count(Outcome::fail, r.verdict_index("lambda_lower"));

    // n(Λ) only jumps just past an eigenvalue, so checking there covers every Λ <= 1e5.
    const auto spec = berezin::enumerate(dom, 1e5);
    const double vol = berezin::volume(dom);
    std::int64_t cumulative = 0;
    for (const auto& level : spec.levels()) {
      cumulative += level.multiplicity;
      polya_bad += cumulative > berezin::phase_space_eta(2, vol, level.value);
      ++polya_checks;
    }

    for (double sigma : {1.5, 2.0, 3.0}) {
      berezin::SweepConfig h{dom};
      h.sigma = sigma;
      for (int n = 1; n <= 1000; ++n) h.grid.push_back(n);
      const auto hr = berezin::sweep_sums(h);
      holder_bad += hr.count(Outcome::fail, hr.verdict_index("holder")) +
                    hr.count(Outcome::not_applicable, hr.verdict_index("holder"));
    }
  }
  const bool pass = ly_bad + lower_bad + polya_bad + holder_bad == 0;
  return {pass, fmt("sum side on 1x1, 2x1, pi x1: Li-Yau %zu, lambda_N lower %zu failures (N <= 1e4); Polya %zu of "
                    "%zu levels below 1e5; Holder %zu (N <= 1e3)",
                    ly_bad, lower_bad, polya_bad, polya_checks, holder_bad)};
}

// Counting, Bessel zeros and Riesz means against independent oracles.
Result ac8() {
  std::mt19937_64 rng(20260502);
  std::size_t count_bad = 0, count_checks = 0;
  std::vector<std::vector<double>> boxes{{1, 1}, {2, 1}, {pi, 1}, {1, 1, 1}, {0.7, 1.3, 0.9}};
  for (int i = 0; i < 5; ++i) boxes.push_back(gen::random_box(rng, 1 + i % 3).as<berezin::AxisBox>()->sides);
  for (const auto& sides : boxes) {
    const auto spec = berezin::enumerate(Domain::box(sides), 2000.0);
    const auto exact = oracle::box_eigenvalues(sides, 2000.0);
    for (int j = 0; j < 20; ++j) {
      const double lambda = gen::log_uniform(rng, 1.0, 2000.0);
      std::int64_t expect = 0;
      for (double e : exact) expect += e < lambda;
      count_bad += berezin::counting(spec, lambda) != expect;
      ++count_checks;
    }
    count_bad += spec.size() != static_cast<std::int64_t>(exact.size());
  }
  for (double radius : {1.0, 0.6, 1.7}) {
    const auto spec = berezin::enumerate(Domain::disk(radius), 2000.0);
    for (double lambda : {5.0, 50.0, 333.0, 1000.0, 1999.0}) {
      count_bad += berezin::counting(spec, lambda) != oracle::disk_counting(radius, lambda);
      ++count_checks;
    }
  }

  double zero_err = 0.0;
  int zeros = 0;
  for (int m = 0; m <= 20; ++m)
    for (int k = 1;; ++k) {
      const double z = oracle::bessel_zero_bisection(m, k);
      if (z > 39.0) break;
      zero_err = std::max(zero_err, std::abs(berezin::specfun::bessel_zero(m, k) - z));
      ++zeros;
    }

  double riesz_err = 0.0;
  std::uniform_real_distribution<double> sigma(1.0, 4.0);
  for (int i = 0; i < 50; ++i) {
    const Domain dom = i % 5 == 0 ? Domain::disk(gen::log_uniform(rng, 0.5, 2.0)) : gen::random_union(rng);
    const double lambda = gen::log_uniform(rng, 20.0, 3000.0);
    riesz_err = std::max(riesz_err, berezin::riesz_integral_check(berezin::enumerate(dom, lambda), sigma(rng), lambda));
  }
  const bool pass = count_bad == 0 && zero_err <= 1e-10 && riesz_err <= 1e-12;
  return {pass, fmt("oracles: %zu counting mismatches of %zu; %d Bessel zeros, max error %.3g (limit 1e-10); Riesz "
                    "integral check max %.3g on 50 cases (limit 1e-12)",
                    count_bad, count_checks, zeros, zero_err, riesz_err)};
}

// Generic-section wrapper against the exact slicing statistics.
Result ac9() {
  std::mt19937_64 rng(20260503);
  std::vector<Domain> doms{Domain::box({1, 1}), Domain::box({2, 1}), Domain::box({2, 1}, 1),
                           Domain::box({1.3, 0.7, 2.1}), Domain::disk(1), Domain::disk(0.7, 1)};
  for (int i = 0; i < 10; ++i) doms.push_back(gen::random_union(rng));
  double wrapper = 0.0;
  for (const auto& dom : doms) {
    const Domain g = berezin::as_generic(dom);
    for (double lambda : {12.0, 50.0, 300.0, 5000.0}) {
      const auto e = berezin::slicing_stats(dom, lambda);
      const auto q = berezin::slicing_stats(g, lambda);
      if (e.vol_omega_lambda > 0) wrapper = std::max(wrapper, rel(q.vol_omega_lambda, e.vol_omega_lambda));
      if (e.d_lambda > 0) wrapper = std::max(wrapper, rel(q.d_lambda, e.d_lambda));
    }
  }
  double disk = 0.0;
  const Domain unit = Domain::disk(1);
  const Domain unit_generic = berezin::as_generic(unit);
  for (double lambda : {3.0, 10.0, 57.0, 400.0, 1e4}) {
    const auto e = berezin::slicing_stats(unit, lambda);
    const auto q = berezin::slicing_stats(unit_generic, lambda, 1 << 22);
    disk = std::max(disk, rel(q.d_lambda, e.d_lambda));
  }
  return {wrapper <= 1e-3 && disk <= 1e-6,
          fmt("slicing consistency: wrapper max relative error %.3g on %zu domains (limit 1e-3); disk d_lambda vs "
              "quadrature %.3g (limit 1e-6)",
              wrapper, doms.size(), disk)};
}

// Byte-identical sweep CSV across worker counts.
Result ac10() {
  const std::vector<std::vector<std::string>> sweeps{
      {"sweep", "--domain", "box:1x1", "--lambda-max", "5e4", "--points", "200"},
      {"sweep", "--domain", "union:box(1x1)@(0,0)+box(1x1)@(2,0)", "--lambda-max", "5e4", "--points", "150"},
      {"sweep", "--domain", "disk:1", "--sigma", "2", "--lambda-max", "1e4", "--points", "100"},
  };
  std::size_t runs = 0, mismatched = 0;
  for (const auto& base : sweeps) {
    std::string reference;
    for (const char* workers : {"1", "1", "2", "4", "7", "0"}) {
      auto args = base;
      args.insert(args.end(), {"--csv", "-", "--workers", workers});
      std::ostringstream out, err;
      const int code = berezin::cli::run(args, out, err);
      ++runs;
      if (code != 0) {
        ++mismatched;
        continue;
      }
      if (reference.empty()) reference = out.str();
      mismatched += out.str() != reference;
    }
  }
  return {mismatched == 0, fmt("determinism: %zu sweep runs over workers {1, 1, 2, 4, 7, auto}, %zu differing CSVs",
                              runs, mismatched)};
}

}  // namespace

int main() {
  const std::vector<std::function<Result()>> criteria{ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i]();
    } catch (const std::exception& e) {
      r = {false, std::string("threw: ") + e.what()};
    }
    failed += !r.pass;
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " AC" << i + 1 << "  " << r.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed ? 1 : 0;
}
