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

// Exact Dirichlet spectra of boxes, box unions and disks below a cutoff, and the
// spectral functionals built from them: the counting function n(Ω,Λ), Riesz
// means S_σ(Ω,Λ) = Σ (Λ - λ_k)_+^σ and partial sums s_σ(Ω,N) = Σ_{k<=N} λ_k^σ.
// All comparisons with Λ are strict.

#ifndef BEREZIN_SPECTRA_HPP
#define BEREZIN_SPECTRA_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "berezin/constants.hpp"
#include "berezin/error.hpp"
#include "berezin/geometry.hpp"
#include "berezin/numeric.hpp"
#include "berezin/specfun.hpp"

namespace berezin {

/// One distinct eigenvalue and its multiplicity.
struct Level {
  double value = 0.0;
  std::int64_t multiplicity = 0;
};

/// Sorted distinct eigenvalues below `cutoff`, complete up to it.
class Spectrum {
 public:
  Spectrum(int dim, double volume, double cutoff, std::vector<Level> levels)
      : dim_(dim), volume_(volume), cutoff_(cutoff), levels_(std::move(levels)) {
    cumulative_.reserve(levels_.size());
    std::int64_t running = 0;
    for (const auto& l : levels_) cumulative_.push_back(running += l.multiplicity);
  }

  int dim() const { return dim_; }
  double volume() const { return volume_; }
  double cutoff() const { return cutoff_; }
  const std::vector<Level>& levels() const { return levels_; }

  /// Number of eigenvalues below the cutoff, with multiplicity.
  std::int64_t size() const { return cumulative_.empty() ? 0 : cumulative_.back(); }

  /// Eigenvalues in the first `n` levels, counted with multiplicity.
  std::int64_t cumulative(std::size_t n) const { return n == 0 ? 0 : cumulative_[n - 1]; }

  /// Index of the first level with value >= lambda.
  std::size_t levels_below(double lambda) const {
    return static_cast<std::size_t>(
        std::lower_bound(levels_.begin(), levels_.end(), lambda,
                         [](const Level& l, double x) { return l.value < x; }) -
        levels_.begin());
  }

 private:
  int dim_;
  double volume_;
  double cutoff_;
  std::vector<Level> levels_;
  std::vector<std::int64_t> cumulative_;
};

struct EnumerateOptions {
  std::int64_t max_count = 50'000'000;  // memory guard on the eigenvalue count
  double merge_rel_tol = 1e-9;
};

namespace detail {

inline std::vector<Level> merge_levels(std::vector<std::pair<double, std::int64_t>> raw, double rel_tol) {
  std::sort(raw.begin(), raw.end());
  std::vector<Level> out;
  for (const auto& [value, mult] : raw) {
    if (!out.empty() && value - out.back().value <= rel_tol * out.back().value)
      out.back().multiplicity += mult;
    else
      out.push_back({value, mult});
  }
  return out;
}

// Eigenvalues π² Σ (n_i/a_i)² < cutoff, nested loops pruned per level.
inline void enumerate_box(const AxisBox& box, double cutoff, std::int64_t max_count,
                          std::vector<std::pair<double, std::int64_t>>& out) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const int d = box.dim();
  std::vector<double> inv_a2(d);
  for (int i = 0; i < d; ++i) inv_a2[i] = 1.0 / (box.sides[i] * box.sides[i]);
  const double budget = cutoff / pi2;  // Σ n_i²/a_i² must stay below this

  // Minimal contribution of the coordinates after i (all n_j = 1).
  std::vector<double> tail_min(d + 1, 0.0);
  for (int i = d - 1; i >= 0; --i) tail_min[i] = tail_min[i + 1] + inv_a2[i];

  std::vector<double> partial(d + 1, 0.0);
  std::vector<long long> n(d, 1);
  int level = 0;
  partial[0] = 0.0;
  for (;;) {
    const double value = partial[level] + n[level] * n[level] * inv_a2[level];
    if (value + tail_min[level + 1] < budget) {
      if (level == d - 1) {
        out.emplace_back(pi2 * value, 1);
        if (static_cast<std::int64_t>(out.size()) > max_count)
          throw CapacityError("enumerate: more than " + std::to_string(max_count) + " eigenvalues below cutoff");
        ++n[level];
      } else {
        partial[level + 1] = value;
        ++level;
        n[level] = 1;
      }
    } else {
      if (level == 0) break;
      --level;
      ++n[level];
    }
  }
}

}  // namespace detail

/// Exact Dirichlet spectrum of a box, box union or disk below `cutoff`.
inline Spectrum enumerate(const Domain& dom, double cutoff, const EnumerateOptions& opt = {}) {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) throw DomainError("enumerate: cutoff must be positive");
  std::vector<std::pair<double, std::int64_t>> raw;
  if (const auto* disk = dom.as<Disk>()) {
    // λ = (j_{m,k}/R)², multiplicity 2 for m >= 1 (cos and sin modes).
    const double x_max = disk->radius * std::sqrt(cutoff);
    std::int64_t count = 0;
    for (int m = 0; static_cast<double>(m) < x_max; ++m) {
      bool any = false;
      for (int k = 1;; ++k) {
        const double z = specfun::bessel_zero(m, k);
        if (!(z < x_max)) break;
        const double value = (z / disk->radius) * (z / disk->radius);
        if (!(value < cutoff)) break;
        any = true;
        const std::int64_t mult = m == 0 ? 1 : 2;
        raw.emplace_back(value, mult);
        count += mult;
        if (count > opt.max_count)
          throw CapacityError("enumerate: more than " + std::to_string(opt.max_count) +
                              " eigenvalues below cutoff");
      }
      if (!any) break;  // j_{m,1} increases with m
    }
  } else if (dom.is_generic()) {
    throw UnsupportedDomainError("enumerate: exact spectra are available for boxes, box unions and disks only");
  } else {
    for (const auto& b : detail::component_boxes(dom)) detail::enumerate_box(b, cutoff, opt.max_count, raw);
  }
  return Spectrum(dom.dim(), volume(dom), cutoff, detail::merge_levels(std::move(raw), opt.merge_rel_tol));
}

namespace detail {

inline void require_within_cutoff(const Spectrum& spec, double lambda) {
  if (!(lambda <= spec.cutoff()))
    throw CutoffError("spectral query at lambda = " + std::to_string(lambda) + " exceeds the enumerated cutoff " +
                          std::to_string(spec.cutoff()),
                      lambda);
}

}  // namespace detail

/// n(Ω,Λ) = #{k : λ_k < Λ}.
inline std::int64_t counting(const Spectrum& spec, double lambda) {
  detail::require_within_cutoff(spec, lambda);
  return spec.cumulative(spec.levels_below(lambda));
}

/// S_σ(Ω,Λ) = Σ (Λ - λ_k)_+^σ; σ = 0 gives the counting function.
inline double riesz_mean(const Spectrum& spec, double sigma, double lambda) {
  if (!(sigma >= 0.0)) throw DomainError("riesz_mean: sigma must be non-negative");
  detail::require_within_cutoff(spec, lambda);
  if (sigma == 0.0) return static_cast<double>(counting(spec, lambda));
  const std::size_t n = spec.levels_below(lambda);
  numeric::CompensatedSum s;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& l = spec.levels()[i];
    s += static_cast<double>(l.multiplicity) * numeric::positive_part_pow(lambda - l.value, sigma);
  }
  return s.value();
}

/// Smallest conceivable cutoff holding N eigenvalues: λ_N >= d/(2+d) (L_{0,d} vol)^{-2/d} N^{2/d}.
inline double minimal_cutoff_hint(const Spectrum& spec, std::int64_t N) {
  const double d = spec.dim();
  return d / (2.0 + d) * std::pow(lt_classical({0.0, spec.dim()}) * spec.volume(), -2.0 / d) *
         std::pow(static_cast<double>(N), 2.0 / d);
}

namespace detail {

inline void require_count(const Spectrum& spec, std::int64_t N) {
  if (N < 1) throw DomainError("eigenvalue index must be positive");
  if (spec.size() < N) {
    const double hint = minimal_cutoff_hint(spec, N);
    throw CutoffError("spectrum holds " + std::to_string(spec.size()) + " eigenvalues but " + std::to_string(N) +
                          " are required; the cutoff must exceed " + std::to_string(hint),
                      hint);
  }
}

}  // namespace detail

/// λ_N, counted with multiplicity.
inline double eigenvalue(const Spectrum& spec, std::int64_t N) {
  detail::require_count(spec, N);
  std::size_t lo = 0;
  std::size_t hi = spec.levels().size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (spec.cumulative(mid + 1) < N)
      lo = mid + 1;
    else
      hi = mid;
  }
  return spec.levels()[lo].value;
}

/// s_σ(Ω,N) = Σ_{k=1}^N λ_k^σ.
inline double partial_sum(const Spectrum& spec, double sigma, std::int64_t N) {
  if (!(sigma > 0.0)) throw DomainError("partial_sum: sigma must be positive");
  detail::require_count(spec, N);
  numeric::CompensatedSum s;
  std::int64_t remaining = N;
  for (const auto& l : spec.levels()) {
    const std::int64_t take = std::min(remaining, l.multiplicity);
    s += static_cast<double>(take) * std::pow(l.value, sigma);
    remaining -= take;
    if (remaining == 0) break;
  }
  return s.value();
}

/// Relative difference between S_σ(Ω,Λ) and σ ∫_0^Λ (Λ-τ)^{σ-1} n(Ω,τ) dτ,
/// the latter integrated exactly over the steps of n.
inline double riesz_integral_check(const Spectrum& spec, double sigma, double lambda) {
  if (!(sigma >= 1.0)) throw DomainError("riesz_integral_check: sigma must be at least 1");
  const double direct = riesz_mean(spec, sigma, lambda);
  const std::size_t n = spec.levels_below(lambda);
  numeric::CompensatedSum integral;
  // On (λ_i, λ_{i+1}] the counting function equals cumulative(i+1).
  for (std::size_t i = 0; i < n; ++i) {
    const double a = spec.levels()[i].value;
    const double b = i + 1 < n ? spec.levels()[i + 1].value : lambda;
    const double piece = std::pow(lambda - a, sigma) - std::pow(lambda - b, sigma);
    integral += static_cast<double>(spec.cumulative(i + 1)) * piece;
  }
  const double scale = std::max(std::abs(direct), std::abs(integral.value()));
  return scale == 0.0 ? 0.0 : std::abs(integral.value() - direct) / scale;
}

}  // namespace berezin

#endif  // BEREZIN_SPECTRA_HPP
