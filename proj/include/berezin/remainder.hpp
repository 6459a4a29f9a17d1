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

// The one-dimensional remainder estimate behind the improved Berezin bound.
//
// For μ > 0 and A >= 1,
//
//   f_μ(A) = (A/2) B(1+μ, 1/2) - Σ_{k>=1} (1 - k²/A²)_+^μ
//
// compares the Riemann sum of (1 - t²/A²)_+^μ over the integers with its
// integral. f_μ is positive and tends to 1/2, so ε_μ = min_{A>=1} f_μ(A) exists;
// 4 ε_{σ+(d-1)/2} is the guaranteed value of the correction constant ν(σ,d).

#ifndef BEREZIN_REMAINDER_HPP
#define BEREZIN_REMAINDER_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "berezin/constants.hpp"
#include "berezin/error.hpp"
#include "berezin/numeric.hpp"
#include "berezin/specfun.hpp"

namespace berezin {

struct RemainderResult {
  double mu = 0.0;
  double epsilon = 0.0;   // ε_μ
  double argmin_A = 1.0;  // where the minimum was found
  double scan_upper = 0.0;
  double tol = 0.0;  // width of the final refinement bracket
};

struct EpsilonOptions {
  double scan_upper = 60.0;
  double tol = 1e-12;
  double scan_step = 1e-3;  // coarse-scan spacing, at most 1e-3
};

namespace detail {

/// Σ_{k=1}^{floor(A)} (1 - k²/A²)^μ; terms with k >= A vanish.
inline double lattice_sum(double mu, double A) {
  numeric::CompensatedSum s;
  const auto last = static_cast<long long>(std::floor(A));
  for (long long k = 1; k <= last; ++k) {
    const double r = static_cast<double>(k) / A;
    const double base = (1.0 - r) * (1.0 + r);
    if (base > 0.0) s += std::pow(base, mu);
  }
  return s.value();
}

inline double f_mu_unchecked(double mu, double A, double half_beta) {
  return A * half_beta - lattice_sum(mu, A);
}

}  // namespace detail

/// f_μ(A) = (A/2) B(1+μ, 1/2) - Σ_k (1 - k²/A²)_+^μ.
inline double f_mu(double mu, double A) {
  if (!(mu > 0.0)) throw DomainError("f_mu: mu must be positive");
  if (!(A >= 1.0) || !std::isfinite(A)) throw DomainError("f_mu: A must be a finite value >= 1");
  return detail::f_mu_unchecked(mu, A, 0.5 * specfun::beta(1.0 + mu, 0.5));
}

/// ε_μ = min_{A>=1} f_μ(A).
///
/// Each unit interval [n, n+1] of [1, scan_upper] is scanned on a uniform grid;
/// every grid-local minimum is refined by golden-section search inside its
/// neighbouring grid cells. f_μ has kinks at integers, so brackets never straddle
/// one. A sparse scan of (scan_upper, 4·scan_upper] must stay above the result,
/// otherwise TailGuardError is thrown.
inline RemainderResult epsilon_mu(double mu, const EpsilonOptions& opt = {}) {
  if (!(mu > 0.0)) throw DomainError("epsilon_mu: mu must be positive");
  if (!(opt.scan_upper >= 2.0) || !std::isfinite(opt.scan_upper))
    throw DomainError("epsilon_mu: scan_upper must be at least 2");
  if (!(opt.tol > 0.0)) throw DomainError("epsilon_mu: tol must be positive");
  if (!(opt.scan_step > 0.0) || opt.scan_step > 1e-3)
    throw DomainError("epsilon_mu: scan_step must lie in (0, 1e-3]");

  const double half_beta = 0.5 * specfun::beta(1.0 + mu, 0.5);
  const auto f = [&](double A) { return detail::f_mu_unchecked(mu, A, half_beta); };

  RemainderResult best{mu, f(1.0), 1.0, opt.scan_upper, 0.0};
  const auto consider = [&](double A, double value, double width) {
    if (value < best.epsilon) {
      best.epsilon = value;
      best.argmin_A = A;
      best.tol = width;
    }
  };

  constexpr double kInvPhi = 0.6180339887498949;
  const auto golden = [&](double lo, double hi) {
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && hi - lo > opt.tol; ++it) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - kInvPhi * (hi - lo);
        f1 = f(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + kInvPhi * (hi - lo);
        f2 = f(x2);
      }
    }
    if (f1 <= f2)
      consider(x1, f1, hi - lo);
    else
      consider(x2, f2, hi - lo);
  };

  std::vector<double> values;
  for (double a = 1.0; a < opt.scan_upper; a += 1.0) {
    const double b = std::min(a + 1.0, opt.scan_upper);
    const auto steps = static_cast<std::size_t>(std::ceil((b - a) / opt.scan_step));
    const double h = (b - a) / static_cast<double>(steps);
    values.resize(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) values[i] = f(i == steps ? b : a + h * static_cast<double>(i));

    for (std::size_t i = 0; i <= steps; ++i) {
      const bool left_ok = i == 0 || values[i] <= values[i - 1];
      const bool right_ok = i == steps || values[i] <= values[i + 1];
      if (!left_ok || !right_ok) continue;
      const double at = i == steps ? b : a + h * static_cast<double>(i);
      consider(at, values[i], h);
      const double lo = a + h * static_cast<double>(i == 0 ? 0 : i - 1);
      const double hi = i == steps ? b : std::min(b, a + h * static_cast<double>(i + 1));
      golden(lo, hi);
    }
  }

  // Heuristic tail guard beyond the scanned range.
  const double tail_step = 0.1;
  for (double A = opt.scan_upper; A <= 4.0 * opt.scan_upper; A += tail_step) {
    if (!(f(A) > best.epsilon))
      throw TailGuardError("epsilon_mu: f_mu(" + std::to_string(A) + ") <= current minimum " +
                           std::to_string(best.epsilon) + " for mu = " + std::to_string(mu) +
                           "; increase scan_upper");
  }
  return best;
}

/// Computable bracket for the optimal constant ν(σ,d).
struct NuBounds {
  double lower = 0.0;  // 4 ε_{σ+(d-1)/2}
  double upper = 0.0;  // 2 min{1, B(1+σ+(d-1)/2, 1/2)}
  RemainderResult remainder;
};

/// σ + (d-1)/2, the exponent carried by the one-dimensional sections.
inline double section_exponent(const SemiclassicalParams& p) { return p.sigma + 0.5 * (p.dim - 1); }

inline NuBounds nu_bounds(const SemiclassicalParams& p, const EpsilonOptions& opt = {}) {
  p.validate();
  if (!(p.sigma >= 1.5) || p.dim < 2) throw DomainError("nu_bounds: requires sigma >= 3/2 and dim >= 2");
  const double mu = section_exponent(p);
  NuBounds out;
  out.remainder = epsilon_mu(mu, opt);
  out.lower = 4.0 * out.remainder.epsilon;
  out.upper = 2.0 * std::min(1.0, specfun::beta(1.0 + mu, 0.5));
  return out;
}

/// 2 B(1/2, 1+σ+(d-1)/2) = 4π L_{σ,d}/L_{σ,d-1}: the largest ν keeping the improved
/// right-hand side non-negative for every domain.
inline double nu_nonnegativity_limit(const SemiclassicalParams& p) {
  p.validate();
  if (p.dim < 2) throw DomainError("nu_nonnegativity_limit: requires dim >= 2");
  return 2.0 * specfun::beta(0.5, 1.0 + section_exponent(p));
}

}  // namespace berezin

#endif  // BEREZIN_REMAINDER_HPP
