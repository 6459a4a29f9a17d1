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

// Random domains for property tests.

#ifndef BEREZIN_TESTS_GENERATORS_HPP
#define BEREZIN_TESTS_GENERATORS_HPP

#include <random>
#include <vector>

#include "berezin/geometry.hpp"

namespace gen {

// Columns of boxes side by side along x; each column stacks one to three boxes
// along y with random gaps (zero gaps make boxes touch). Interiors never overlap.
inline std::vector<berezin::AxisBox> random_union_boxes(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> side(0.2, 2.0);
  std::uniform_real_distribution<double> gap(0.0, 0.5);
  std::uniform_int_distribution<int> columns(1, 3), stack(1, 3);
  std::bernoulli_distribution touch(0.3);
  std::vector<berezin::AxisBox> boxes;
  double x = 0.0;
  const int nc = columns(rng);
  for (int c = 0; c < nc; ++c) {
    const double width = side(rng);
    double y = gap(rng);
    const int ns = stack(rng);
    for (int s = 0; s < ns; ++s) {
      const double w = width * std::uniform_real_distribution<double>(0.3, 1.0)(rng);
      const double h = side(rng);
      boxes.push_back({{w, h}, {x, y}});
      y += h + (touch(rng) ? 0.0 : gap(rng));
    }
    x += width + (touch(rng) ? 0.0 : gap(rng));
  }
  return boxes;
}

inline berezin::Domain random_union(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> axis(1, 2);
  return berezin::Domain::box_union(random_union_boxes(rng), axis(rng));
}

inline berezin::Domain random_box(std::mt19937_64& rng, int dim) {
  std::uniform_real_distribution<double> side(0.3, 3.0);
  std::vector<double> sides(dim);
  for (auto& s : sides) s = side(rng);
  return berezin::Domain::box(sides, std::uniform_int_distribution<int>(1, dim)(rng));
}

// Λ log-uniform in [lo, hi].
inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
}

}  // namespace gen

#endif  // BEREZIN_TESTS_GENERATORS_HPP
