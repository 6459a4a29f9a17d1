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

// Special functions used by the constants and by the exact disk spectra:
// Gamma, Beta, Bessel J of integer order and the positive zeros of J_m.

#ifndef BEREZIN_SPECFUN_HPP
#define BEREZIN_SPECFUN_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "berezin/error.hpp"

namespace berezin::specfun {

/// Tolerances for iterative routines.
struct Accuracy {
  double abs_tol = 1e-13;
  double rel_tol = 4e-16;
  int max_iter = 100;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iter < 1)
      throw DomainError("Accuracy requires abs_tol > 0, rel_tol > 0, max_iter >= 1");
  }
};

/// Largest argument for which Gamma is representable in double.
inline constexpr double kGammaMaxArgument = 171.62437695630272;

inline double gamma(double x) {
  if (!(x > 0.0)) throw DomainError("gamma: argument must be positive, got " + std::to_string(x));
  if (x > kGammaMaxArgument) throw OverflowError("gamma: result overflows for x = " + std::to_string(x));
  const double g = std::tgamma(x);
  if (!std::isfinite(g)) throw OverflowError("gamma: result overflows for x = " + std::to_string(x));
  return g;
}

inline double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  // boost's lgamma does not touch the global signgam, unlike std::lgamma.
  return boost::math::lgamma(x);
}

/// B(a,b) = Γ(a)Γ(b)/Γ(a+b). Symmetric in (a,b) bit for bit.
inline double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta: arguments must be positive");
  return boost::math::beta(std::min(a, b), std::max(a, b));
}

/// J_m(x) for integer order m >= 0 and x >= 0.
inline double bessel_j(int m, double x) {
  if (m < 0) throw DomainError("bessel_j: order must be non-negative");
  if (!(x >= 0.0)) throw DomainError("bessel_j: argument must be non-negative");
  return boost::math::cyl_bessel_j(m, x);
}

/// J_m'(x) = (J_{m-1}(x) - J_{m+1}(x)) / 2, with J_{-1} = -J_1.
inline double bessel_j_derivative(int m, double x) {
  if (m == 0) return -bessel_j(1, x);
  return 0.5 * (bessel_j(m - 1, x) - bessel_j(m + 1, x));
}

/// McMahon's large-zero expansion for j_{m,k}, four terms.
inline double mcmahon_zero_guess(int m, int k) {
  const double b = (k + 0.5 * m - 0.25) * std::numbers::pi;
  const double mu = 4.0 * m * m;
  const double e = 8.0 * b;
  const double e3 = e * e * e;
  return b - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e3) -
         32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * e3 * e * e);
}

namespace detail {

inline bool opposite_signs(double a, double b) { return (a < 0.0) != (b < 0.0); }

// Newton iteration safeguarded by the sign-change bracket [lo, hi]; any step that
// leaves the bracket is replaced by bisection.
inline double refine_zero(int m, double lo, double hi, double start, const Accuracy& acc) {
  double f_lo = bessel_j(m, lo);
  double x = std::clamp(start, lo, hi);
  for (int it = 0; it < acc.max_iter; ++it) {
    const double f = bessel_j(m, x);
    if (f == 0.0) return x;
    if (opposite_signs(f_lo, f)) {
      hi = x;
    } else {
      lo = x;
      f_lo = f;
    }
    const double slope = bessel_j_derivative(m, x);
    double next = (slope != 0.0) ? x - f / slope : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double tol = std::max(acc.abs_tol, acc.rel_tol * std::abs(next));
    if (std::abs(next - x) <= tol || hi - lo <= tol) return next;
    x = next;
  }
  throw ConvergenceError("bessel_zero: no convergence for m = " + std::to_string(m) + " within " +
                         std::to_string(acc.max_iter) + " iterations");
}

// Locates the bracket of the k-th sign change of J_m by unit steps from x = m.
// Consecutive zeros of J_m are more than 3 apart, so a unit step never hides a pair.
inline std::pair<double, double> scan_bracket(int m, int k) {
  double a = std::max(static_cast<double>(m), 1e-3);
  double fa = bessel_j(m, a);
  int count = 0;
  for (;;) {
    const double b = a + 1.0;
    const double fb = bessel_j(m, b);
    if (opposite_signs(fa, fb) && ++count == k) return {a, b};
    a = b;
    fa = fb;
  }
}

}  // namespace detail

/// k-th positive zero j_{m,k} of J_m.
///
/// Starts from McMahon's expansion when it is reliable (2k >= m) and otherwise from
/// a sign-change scan; both paths finish with bracketed Newton.
inline double bessel_zero(int m, int k, const Accuracy& acc = {}) {
  if (m < 0) throw DomainError("bessel_zero: order must be non-negative");
  if (k < 1) throw DomainError("bessel_zero: zero index must be positive");
  acc.validate();

  if (2 * k >= m) {
    const double guess = mcmahon_zero_guess(m, k);
    const double lo = std::max(guess - 0.5, 1e-3);
    const double hi = guess + 0.5;
    if (detail::opposite_signs(bessel_j(m, lo), bessel_j(m, hi)))
      return detail::refine_zero(m, lo, hi, guess, acc);
  }
  const auto [lo, hi] = detail::scan_bracket(m, k);
  return detail::refine_zero(m, lo, hi, 0.5 * (lo + hi), acc);
}

}  // namespace berezin::specfun

#endif  // BEREZIN_SPECFUN_HPP
