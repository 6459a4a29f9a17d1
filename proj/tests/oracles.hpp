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

// Independent reference implementations used only by the tests.

#ifndef BEREZIN_TESTS_ORACLES_HPP
#define BEREZIN_TESTS_ORACLES_HPP

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using quad = __float128;

// J_m(x) by its power series in binary128. Cancellation costs about x/ln(10)
// digits, so results are good to 1e-17 for x <= 40.
inline quad bessel_j_series(int m, quad x) {
  const quad half = x / 2;
  quad term = 1;
  for (int i = 1; i <= m; ++i) term *= half / i;
  quad sum = term;
  const quad h2 = half * half;
  for (int k = 1; k < 400; ++k) {
    term *= -h2 / (static_cast<quad>(k) * (k + m));
    sum += term;
    const quad mag = term < 0 ? -term : term;
    if (mag < 1e-36Q * (sum < 0 ? -sum : sum) && k > 2 * static_cast<double>(half)) break;
  }
  return sum;
}

// k-th positive zero of J_m by a fine sign-change scan followed by bisection.
inline double bessel_zero_bisection(int m, int k) {
  const quad step = 0.01Q;
  quad a = m == 0 ? step : static_cast<quad>(m);
  quad fa = bessel_j_series(m, a);
  int found = 0;
  for (;;) {
    const quad b = a + step;
    const quad fb = bessel_j_series(m, b);
    if ((fa < 0) != (fb < 0) && ++found == k) {
      quad lo = a, hi = b, flo = fa;
      for (int it = 0; it < 200 && hi - lo > 1e-30Q; ++it) {
        const quad mid = (lo + hi) / 2;
        const quad fm = bessel_j_series(m, mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      return static_cast<double>((lo + hi) / 2);
    }
    a = b;
    fa = fb;
  }
}

// Box eigenvalues below cutoff by a plain multi-index loop with per-axis bounds.
inline std::vector<double> box_eigenvalues(const std::vector<double>& sides, double cutoff) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const int d = static_cast<int>(sides.size());
  std::vector<int> limit(d);
  for (int i = 0; i < d; ++i) limit[i] = static_cast<int>(std::sqrt(cutoff / pi2) * sides[i]) + 1;
  std::vector<double> out;
  std::vector<int> n(d, 1);
  for (;;) {
    double value = 0.0;
    for (int i = 0; i < d; ++i) value += pi2 * n[i] * n[i] / (sides[i] * sides[i]);
    if (value < cutoff) out.push_back(value);
    int i = 0;
    while (i < d && ++n[i] > limit[i]) n[i++] = 1;
    if (i == d) break;
  }
  return out;
}

inline std::int64_t box_counting(const std::vector<double>& sides, double lambda) {
  return static_cast<std::int64_t>(box_eigenvalues(sides, lambda).size());
}

// Disk eigenvalues below cutoff from Boost's Bessel zeros, scanning (m, k).
inline std::int64_t disk_counting(double radius, double lambda) {
  std::int64_t count = 0;
  for (int m = 0;; ++m) {
    int k = 1;
    for (;; ++k) {
      const double z = boost::math::cyl_bessel_j_zero(static_cast<double>(m), k);
      if (!(z * z / (radius * radius) < lambda)) break;
      count += m == 0 ? 1 : 2;
    }
    if (k == 1) break;
  }
  return count;
}

// Plain trapezoid rule on a uniform grid.
inline double trapezoid(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) s += f(a + i * h);
  return s * h;
}

}  // namespace oracle

#endif  // BEREZIN_TESTS_ORACLES_HPP
