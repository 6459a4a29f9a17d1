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

#ifndef BEREZIN_NUMERIC_HPP
#define BEREZIN_NUMERIC_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "berezin/error.hpp"

namespace berezin::numeric {

/// Neumaier-compensated accumulator. Results depend only on the order of add() calls.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      correction_ += (sum_ - t) + x;
    else
      correction_ += (x - t) + sum_;
    sum_ = t;
  }

  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }

  double value() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

/// x_+^p with the convention x_+^0 = [x > 0].
inline double positive_part_pow(double x, double p) {
  if (!(x > 0.0)) return 0.0;
  return p == 0.0 ? 1.0 : std::pow(x, p);
}

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline GaussRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  // Returns P_n'(x) and stores P_n(x) in `value`.
  const auto legendre = [n](double x, double& value) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    value = p1;
    return n * (x * p1 - p0) / (x * x - 1.0);
  };
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double value = 0.0;
    for (int it = 0; it < 100; ++it) {
      const double slope = legendre(x, value);
      const double step = value / slope;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double dp = legendre(x, value);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

/// ∫_a^b f using `rule` mapped onto [a, b].
template <typename F>
double integrate(const GaussRule& rule, double a, double b, F&& f) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  CompensatedSum s;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * s.value();
}

/// `count` log-spaced points from lo to hi inclusive.
inline std::vector<double> log_grid(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2)
    throw DomainError("log_grid: need 0 < lo < hi and at least two points");
  std::vector<double> grid(count);
  const double llo = std::log(lo);
  const double step = (std::log(hi) - llo) / (count - 1);
  for (int i = 0; i < count; ++i) grid[i] = std::exp(llo + step * i);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace berezin::numeric

#endif  // BEREZIN_NUMERIC_HPP
