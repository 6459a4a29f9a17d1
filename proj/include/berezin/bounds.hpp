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

// Semiclassical quantities and the right-hand sides of the eigenvalue bounds.
//
// Riesz-mean side (upper bounds on S_σ(Ω,Λ)):
//   Berezin         S^cl = L_{σ,d} vol(Ω) Λ^{σ+d/2}                      (σ >= 1)
//   improved        L_{σ,d} vol(Ω_Λ) Λ^{σ+d/2} - ν L_{σ,d-1}/4 d_Λ(Ω) Λ^{σ+(d-1)/2}   (σ >= 3/2)
//   sliced          Λ^{σ+(d-1)/2} L_{σ,d-1} ∫ Σ_k Σ_j (1 - j² l_Λ²/l_k²)^{σ+(d-1)/2} dx'
// Sum side (lower bounds on s_σ(Ω,N)): Li-Yau, Melas, and the λ_N lower bound.
// Two-term Weyl expressions are asymptotic predictions, not bounds.

#ifndef BEREZIN_BOUNDS_HPP
#define BEREZIN_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "berezin/constants.hpp"
#include "berezin/error.hpp"
#include "berezin/geometry.hpp"
#include "berezin/remainder.hpp"

namespace berezin {

/// η(Ω,Λ) = L_{0,d} vol Λ^{d/2}, the phase-space volume.
inline double phase_space_eta(int d, double vol, double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("phase_space_eta: lambda must be non-negative");
  return lt_classical({0.0, d}) * vol * std::pow(lambda, 0.5 * d);
}

/// S^cl_{σ,d}(Ω,Λ) = L_{σ,d} vol Λ^{σ+d/2}.
inline double s_classical(const SemiclassicalParams& p, double vol, double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("s_classical: lambda must be non-negative");
  return lt_classical(p) * vol * std::pow(lambda, p.sigma + 0.5 * p.dim);
}

/// s^cl_{σ,d}(Ω,N) = c(σ,d) vol^{-2σ/d} N^{1+2σ/d}.
inline double sum_classical(const SemiclassicalParams& p, double vol, double N) {
  if (!(N >= 1.0)) throw DomainError("sum_classical: N must be at least 1");
  const double r = 2.0 * p.sigma / p.dim;
  return c_const(p) * std::pow(vol, -r) * std::pow(N, 1.0 + r);
}

/// Inputs of the improved right-hand side at one Λ.
struct BoundInputs {
  SemiclassicalParams params;
  double lambda = 0.0;
  double vol_omega_lambda = 0.0;
  double d_lambda = 0.0;
  double nu = 0.0;
};

enum class BoundMode {
  theorem,      // σ >= 3/2, d >= 2, 0 <= ν
  exploratory,  // any σ, ν; results carry no guarantee
};

/// L_{σ,d} vol(Ω_Λ) Λ^{σ+d/2} - ν (L_{σ,d-1}/4) d_Λ(Ω) Λ^{σ+(d-1)/2}.
inline double improved_rhs(const BoundInputs& in, BoundMode mode = BoundMode::theorem) {
  const auto& p = in.params;
  p.validate();
  if (p.dim < 2) throw DomainError("improved_rhs: requires dim >= 2");
  if (mode == BoundMode::theorem) {
    if (!(p.sigma >= 1.5)) throw DomainError("improved_rhs: requires sigma >= 3/2 outside exploratory mode");
    if (!(in.nu >= 0.0)) throw DomainError("improved_rhs: nu must be non-negative outside exploratory mode");
  }
  if (!(in.lambda > 0.0)) throw DomainError("improved_rhs: lambda must be positive");
  const double bulk = lt_classical(p) * in.vol_omega_lambda * std::pow(in.lambda, p.sigma + 0.5 * p.dim);
  const double correction = 0.25 * in.nu * lt_classical({p.sigma, p.dim - 1}) * in.d_lambda *
                            std::pow(in.lambda, section_exponent(p));
  return bulk - correction;
}

/// Σ_{j=1}^{floor(A)} (1 - j²/A²)^μ for a section of relative length A = l_k/l_Λ.
inline double section_lattice_sum(double mu, double A) { return detail::lattice_sum(mu, A); }

/// The sliced intermediate bound, built from the exact eigenvalues
/// Λ - j²π²/l_k² of the one-dimensional Dirichlet problems on the sections.
inline double sliced_bound(const Domain& dom, const SemiclassicalParams& p, double lambda, int quad_points = 0) {
  p.validate();
  if (p.dim != dom.dim()) throw DomainError("sliced_bound: dimension mismatch");
  if (p.dim < 2) throw DomainError("sliced_bound: requires dim >= 2");
  if (!(p.sigma >= 1.5)) throw DomainError("sliced_bound: requires sigma >= 3/2");
  const double l = critical_length(lambda);
  const double mu = section_exponent(p);
  const auto integral = integrate_over_sections(
      dom, [&](double len) { return len > l ? section_lattice_sum(mu, len / l) : 0.0; }, l, quad_points);
  return std::pow(lambda, mu) * lt_classical({p.sigma, p.dim - 1}) * integral.value;
}

/// Li-Yau: s_{1,d}(Ω,N) >= s^cl_{1,d}(Ω,N).
inline double li_yau_rhs(int d, double vol, double N) { return sum_classical({1.0, d}, vol, N); }

/// Melas: s^cl_{1,d} + M(d) vol/J N. M(d) must be supplied.
inline double melas_rhs(int d, double vol, double J, double N, std::optional<double> M) {
  if (!M) throw MissingParameterError("melas_rhs: the constant M(d) must be supplied");
  if (!(J > 0.0)) throw DomainError("melas_rhs: J must be positive");
  return li_yau_rhs(d, vol, N) + *M * vol / J * N;
}

/// λ_N >= d/(2+d) (L_{0,d} vol)^{-2/d} N^{2/d}.
inline double eigenvalue_lower(int d, double vol, double N) {
  if (!(N >= 1.0)) throw DomainError("eigenvalue_lower: N must be at least 1");
  const double dd = d;
  return dd / (2.0 + dd) * std::pow(lt_classical({0.0, d}) * vol, -2.0 / dd) * std::pow(N, 2.0 / dd);
}

/// L_{0,d} vol Λ^{d/2} - (1/4) L_{0,d-1} |∂Ω| Λ^{(d-1)/2}.
inline double two_term_counting(int d, double vol, double surf, double lambda) {
  if (d < 2) throw DomainError("two_term_counting: requires dim >= 2");
  return phase_space_eta(d, vol, lambda) -
         0.25 * lt_classical({0.0, d - 1}) * surf * std::pow(lambda, 0.5 * (d - 1));
}

/// S^cl - (1/4) L_{σ,d-1} |∂Ω| Λ^{σ+(d-1)/2}.
inline double two_term_riesz(const SemiclassicalParams& p, double vol, double surf, double lambda) {
  if (p.dim < 2) throw DomainError("two_term_riesz: requires dim >= 2");
  return s_classical(p, vol, lambda) -
         0.25 * lt_classical({p.sigma, p.dim - 1}) * surf * std::pow(lambda, section_exponent(p));
}

/// s^cl + σ (1/4) L_{0,d-1} |∂Ω| / (σ+(d-1)/2) · (N / (L_{0,d} vol))^{(2σ+d-1)/d}.
///
/// Obtained by inserting the two-term counting formula into
/// s_σ(N) = σ ∫ τ^{σ-1} (N - n(τ))_+ dτ; to first order the shift of the upper
/// limit does not contribute.
inline double two_term_sum(const SemiclassicalParams& p, double vol, double surf, double N) {
  if (p.dim < 2) throw DomainError("two_term_sum: requires dim >= 2");
  if (!(p.sigma > 0.0)) throw DomainError("two_term_sum: sigma must be positive");
  const double d = p.dim;
  const double mu = section_exponent(p);
  const double second = p.sigma * 0.25 * lt_classical({0.0, p.dim - 1}) * surf / mu *
                        std::pow(N / (lt_classical({0.0, p.dim}) * vol), (2.0 * p.sigma + d - 1.0) / d);
  return sum_classical(p, vol, N) + second;
}

/// Outcome of one inequality check.
enum class Outcome { pass, fail, not_applicable };

struct Verdict {
  Outcome outcome = Outcome::not_applicable;
  double margin = 0.0;  // claimed-larger side minus claimed-smaller side; negative on failure
  double scale = 1.0;   // max(1, |lhs|, |rhs|)

  static Verdict na() { return {}; }
  double relative_margin() const { return margin / scale; }
};

/// Checks lhs <= rhs with slack · max(1, |lhs|, |rhs|).
inline Verdict check_le(double lhs, double rhs, double slack) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  const double margin = rhs - lhs;
  if (std::isnan(margin)) return {Outcome::fail, margin, scale};
  return {margin >= -slack * scale ? Outcome::pass : Outcome::fail, margin, scale};
}

}  // namespace berezin

#endif  // BEREZIN_BOUNDS_HPP
