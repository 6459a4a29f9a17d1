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

#ifndef BEREZIN_CONSTANTS_HPP
#define BEREZIN_CONSTANTS_HPP

#include <cmath>
#include <numbers>
#include <string>

#include "berezin/error.hpp"
#include "berezin/specfun.hpp"

namespace berezin {

/// Riesz-mean order and space dimension.
struct SemiclassicalParams {
  double sigma = 0.0;
  int dim = 1;

  void validate() const {
    if (dim < 1) throw DomainError("dimension must be at least 1, got " + std::to_string(dim));
    if (!(sigma >= 0.0)) throw DomainError("sigma must be non-negative");
  }
};

/// omega_d, the volume of the unit ball in R^d.
inline double unit_ball_volume(int d) {
  if (d < 1) throw DomainError("unit_ball_volume: dimension must be at least 1");
  return std::exp(0.5 * d * std::log(std::numbers::pi) - specfun::log_gamma(1.0 + 0.5 * d));
}

/// Classical Lieb-Thirring constant Γ(σ+1) / (2^d π^{d/2} Γ(1+σ+d/2)).
inline double lt_classical(const SemiclassicalParams& p) {
  p.validate();
  const double d = p.dim;
  const double log_value = specfun::log_gamma(p.sigma + 1.0) - d * std::numbers::ln2 -
                           0.5 * d * std::log(std::numbers::pi) -
                           specfun::log_gamma(1.0 + p.sigma + 0.5 * d);
  return std::exp(log_value);
}

/// Same constant through σ B(σ, 1 + d/2) L_{0,d}; σ > 0 only.
inline double lt_classical_beta_form(const SemiclassicalParams& p) {
  p.validate();
  if (!(p.sigma > 0.0)) throw DomainError("lt_classical_beta_form: sigma must be positive");
  return p.sigma * specfun::beta(p.sigma, 1.0 + 0.5 * p.dim) * lt_classical({0.0, p.dim});
}

/// c(σ,d) = d/(2σ+d) (L_{0,d})^{-2σ/d}, the coefficient of the classical eigenvalue sum.
inline double c_const(const SemiclassicalParams& p) {
  p.validate();
  if (!(p.sigma > 0.0)) throw DomainError("c_const: sigma must be positive");
  const double d = p.dim;
  return d / (2.0 * p.sigma + d) * std::pow(lt_classical({0.0, p.dim}), -2.0 * p.sigma / d);
}

/// c(σ,d) through the Beta form 2σ/d (L_{0,d})^{-2σ/d} B(2σ/d, 2).
inline double c_const_beta_form(const SemiclassicalParams& p) {
  p.validate();
  if (!(p.sigma > 0.0)) throw DomainError("c_const_beta_form: sigma must be positive");
  const double r = 2.0 * p.sigma / p.dim;
  return r * std::pow(lt_classical({0.0, p.dim}), -r) * specfun::beta(r, 2.0);
}

/// Relative residual of (1/2π) B(1+σ+(d-1)/2, 1/2) L_{σ,d-1} = L_{σ,d}.
inline double dimension_reduction_identity_residual(const SemiclassicalParams& p) {
  p.validate();
  if (p.dim < 2) throw DomainError("dimension reduction identity needs dim >= 2");
  const double mu = p.sigma + 0.5 * (p.dim - 1);
  const double lhs = specfun::beta(1.0 + mu, 0.5) * lt_classical({p.sigma, p.dim - 1}) /
                     (2.0 * std::numbers::pi);
  const double rhs = lt_classical(p);
  return std::abs(lhs / rhs - 1.0);
}

/// Lower estimate (2σ+d)/d (d/(2+d))^σ on the sum-side constant ρ(σ,d), σ >= 1.
inline double rho_lower(const SemiclassicalParams& p) {
  p.validate();
  if (!(p.sigma >= 1.0)) throw DomainError("rho_lower: sigma must be at least 1");
  const double d = p.dim;
  return (2.0 * p.sigma + d) / d * std::pow(d / (2.0 + d), p.sigma);
}

/// (1 + 2/d)^{d/2}: universal factor bounding n/η, and r(σ,d) for 0 <= σ < 1.
inline double polya_counting_factor(int d) {
  if (d < 1) throw DomainError("polya_counting_factor: dimension must be at least 1");
  return std::pow(1.0 + 2.0 / d, 0.5 * d);
}

}  // namespace berezin

#endif  // BEREZIN_CONSTANTS_HPP
