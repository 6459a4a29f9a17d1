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

// Domains and their decomposition into one-dimensional sections.
//
// A point is written x = (x', t) where t is the coordinate along the slicing
// axis and x' collects the remaining d-1 coordinates in increasing index order.
// The section Ω(x') is a finite union of disjoint open intervals J_k(x') of
// length l_k(x'). For a spectral parameter Λ the critical length is
// l_Λ = π Λ^{-1/2}; Ω_Λ keeps the intervals with l_k > l_Λ and d_Λ(Ω) integrates
// their number over x'.

#ifndef BEREZIN_GEOMETRY_HPP
#define BEREZIN_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "berezin/error.hpp"
#include "berezin/numeric.hpp"

namespace berezin {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Axis-parallel box [origin, origin + sides] (open).
struct AxisBox {
  std::vector<double> sides;
  std::vector<double> origin;  // empty means the zero vector

  int dim() const { return static_cast<int>(sides.size()); }
  double lower(int i) const { return origin.empty() ? 0.0 : origin[i]; }
  double upper(int i) const { return lower(i) + sides[i]; }

  double volume() const {
    double v = 1.0;
    for (double s : sides) v *= s;
    return v;
  }

  bool operator==(const AxisBox&) const = default;
};

/// Finite union of boxes with pairwise disjoint interiors.
struct BoxUnion {
  std::vector<AxisBox> boxes;

  bool operator==(const BoxUnion&) const = default;
};

/// Disk of the given radius centred at the origin of R².
struct Disk {
  double radius = 1.0;

  bool operator==(const Disk&) const = default;
};

/// Maps x' to the intervals of Ω(x'). Must be piecewise continuous in x'.
using SectionFn = std::function<std::vector<Interval>(std::span<const double>)>;

/// Domain known only through its sections along the slicing axis.
struct GenericSliced {
  int dim = 2;
  SectionFn section_fn;
  AxisBox bounding_box;
};

using Shape = std::variant<AxisBox, BoxUnion, Disk, GenericSliced>;

/// Immutable domain description together with its slicing axis (1-based).
class Domain {
 public:
  static Domain box(std::vector<double> sides, int axis = 0) { return box(AxisBox{std::move(sides), {}}, axis); }

  static Domain box(AxisBox b, int axis = 0) {
    validate_box(b);
    const int d = b.dim();
    return Domain(std::move(b), d, axis);
  }

  static Domain box_union(std::vector<AxisBox> boxes, int axis = 0) {
    if (boxes.empty()) throw DomainError("box union needs at least one box");
    const int d = boxes.front().dim();
    for (const auto& b : boxes) {
      validate_box(b);
      if (b.dim() != d) throw DomainError("box union mixes dimensions");
    }
    for (std::size_t i = 0; i < boxes.size(); ++i)
      for (std::size_t j = i + 1; j < boxes.size(); ++j)
        if (interiors_overlap(boxes[i], boxes[j]))
          throw DomainError("box union: boxes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                            " overlap");
    return Domain(BoxUnion{std::move(boxes)}, d, axis);
  }

  static Domain disk(double radius, int axis = 0) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("disk radius must be positive");
    return Domain(Disk{radius}, 2, axis);
  }

  /// `axis` is the coordinate along which `fn` reports intervals.
  static Domain generic(int dim, SectionFn fn, AxisBox bounding_box, int axis = 0) {
    if (dim < 1 || dim > 4) throw DomainError("generic sliced domains support 1 <= dim <= 4");
    if (!fn) throw DomainError("generic sliced domain needs a section function");
    validate_box(bounding_box);
    if (bounding_box.dim() != dim) throw DomainError("bounding box dimension mismatch");
    return Domain(GenericSliced{dim, std::move(fn), std::move(bounding_box)}, dim, axis);
  }

  /// Same domain sliced along another axis.
  Domain with_axis(int axis) const {
    if (std::holds_alternative<GenericSliced>(shape_) && axis != axis_)
      throw UnsupportedDomainError("a generic sliced domain cannot change its slicing axis");
    return Domain(shape_, dim_, axis);
  }

  int dim() const { return dim_; }
  int slicing_axis() const { return axis_; }
  const Shape& shape() const { return shape_; }

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&shape_);
  }

  bool is_generic() const { return std::holds_alternative<GenericSliced>(shape_); }

 private:
  Domain(Shape shape, int dim, int axis) : shape_(std::move(shape)), dim_(dim), axis_(axis == 0 ? dim : axis) {
    if (axis_ < 1 || axis_ > dim_)
      throw DomainError("slicing axis " + std::to_string(axis_) + " outside [1, " + std::to_string(dim_) + "]");
  }

  static void validate_box(const AxisBox& b) {
    if (b.sides.empty()) throw DomainError("box needs at least one side");
    for (double s : b.sides)
      if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("box sides must be positive and finite");
    if (!b.origin.empty() && b.origin.size() != b.sides.size())
      throw DomainError("box origin has the wrong dimension");
    for (double o : b.origin)
      if (!std::isfinite(o)) throw DomainError("box origin must be finite");
  }

  static bool interiors_overlap(const AxisBox& a, const AxisBox& b) {
    for (int i = 0; i < a.dim(); ++i)
      if (std::max(a.lower(i), b.lower(i)) >= std::min(a.upper(i), b.upper(i))) return false;
    return true;
  }

  Shape shape_;
  int dim_;
  int axis_;
};

/// l_Λ = π Λ^{-1/2}.
inline double critical_length(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("critical_length: lambda must be positive");
  return std::numbers::pi / std::sqrt(lambda);
}

namespace detail {

inline int x_prime_coordinate(int axis0, int j) { return j < axis0 ? j : j + 1; }

inline bool box_section(const AxisBox& b, int axis0, std::span<const double> x_prime, Interval& out) {
  for (std::size_t j = 0; j < x_prime.size(); ++j) {
    const int c = x_prime_coordinate(axis0, static_cast<int>(j));
    if (!(x_prime[j] > b.lower(c) && x_prime[j] < b.upper(c))) return false;
  }
  out = {b.lower(axis0), b.upper(axis0)};
  return true;
}

// Measure of the projection of `b` onto the x'-plane.
inline double projected_measure(const AxisBox& b, int axis0) {
  double m = 1.0;
  for (int i = 0; i < b.dim(); ++i)
    if (i != axis0) m *= b.sides[i];
  return m;
}

inline std::vector<AxisBox> component_boxes(const Domain& dom) {
  if (const auto* b = dom.as<AxisBox>()) return {*b};
  if (const auto* u = dom.as<BoxUnion>()) return u->boxes;
  return {};
}

}  // namespace detail

/// Bounding box of a domain.
inline AxisBox bounding_box(const Domain& dom) {
  if (const auto* b = dom.as<AxisBox>()) return *b;
  if (const auto* d = dom.as<Disk>()) return AxisBox{{2 * d->radius, 2 * d->radius}, {-d->radius, -d->radius}};
  if (const auto* g = dom.as<GenericSliced>()) return g->bounding_box;
  const auto& boxes = dom.as<BoxUnion>()->boxes;
  const int n = dom.dim();
  std::vector<double> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = boxes.front().lower(i);
    hi[i] = boxes.front().upper(i);
    for (const auto& b : boxes) {
      lo[i] = std::min(lo[i], b.lower(i));
      hi[i] = std::max(hi[i], b.upper(i));
    }
  }
  AxisBox out{std::vector<double>(n), lo};
  for (int i = 0; i < n; ++i) out.sides[i] = hi[i] - lo[i];
  return out;
}

/// Ω(x') as sorted disjoint open intervals along the slicing axis.
inline std::vector<Interval> sections(const Domain& dom, std::span<const double> x_prime) {
  if (static_cast<int>(x_prime.size()) != dom.dim() - 1)
    throw DomainError("sections: x' must have dim - 1 coordinates");
  const int axis0 = dom.slicing_axis() - 1;
  std::vector<Interval> out;
  if (const auto* d = dom.as<Disk>()) {
    const double r2 = d->radius * d->radius - x_prime[0] * x_prime[0];
    if (r2 > 0.0) {
      const double c = std::sqrt(r2);
      out.push_back({-c, c});
    }
    return out;
  }
  if (const auto* g = dom.as<GenericSliced>()) {
    out = g->section_fn(x_prime);
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    const double lo = g->bounding_box.lower(axis0);
    const double hi = g->bounding_box.upper(axis0);
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (!(out[k].lo < out[k].hi) || out[k].lo < lo || out[k].hi > hi)
        throw DomainError("generic section interval outside the bounding box or empty");
      if (k > 0 && out[k].lo < out[k - 1].hi) throw DomainError("generic section intervals overlap");
    }
    return out;
  }
  for (const auto& b : detail::component_boxes(dom)) {
    Interval iv;
    if (detail::box_section(b, axis0, x_prime, iv)) out.push_back(iv);
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

/// Default midpoint nodes per x'-dimension for generic domains.
inline int default_quad_points(int x_prime_dims) {
  switch (x_prime_dims) {
    case 0:
      return 1;
    case 1:
      return 4096;
    case 2:
      return 256;
    default:
      return 64;
  }
}

/// Visits the midpoints of an n^k grid over the x'-projection of `box`, in a
/// fixed lexicographic order. Returns the cell measure.
template <typename Visit>
double for_each_midpoint(const AxisBox& box, int axis0, int n, Visit&& visit) {
  const int k = box.dim() - 1;
  std::vector<double> lo(k), h(k), x(k);
  double cell = 1.0;
  for (int j = 0; j < k; ++j) {
    const int c = detail::x_prime_coordinate(axis0, j);
    lo[j] = box.lower(c);
    h[j] = box.sides[c] / n;
    cell *= h[j];
  }
  std::vector<int> idx(k, 0);
  for (;;) {
    for (int j = 0; j < k; ++j) x[j] = lo[j] + (idx[j] + 0.5) * h[j];
    visit(std::span<const double>(x));
    int j = k - 1;
    while (j >= 0 && ++idx[j] == n) idx[j--] = 0;
    if (j < 0) break;
  }
  return cell;
}

/// Value of ∫ Σ_k g(l_k(x')) dx' and whether it was obtained in closed form.
struct SectionIntegral {
  double value = 0.0;
  bool exact = false;
};

/// ∫_{R^{d-1}} Σ_k g(l_k(x')) dx'.
///
/// Boxes and box unions have piecewise-constant sections and are integrated
/// exactly. The disk is integrated by Gauss-Legendre in the angle, split where the
/// chord length crosses a multiple of `kink_spacing` (g may be non-smooth there).
/// Generic domains use the midpoint rule with `quad_points` nodes per dimension
/// (0 selects the default resolution).
template <typename G>
SectionIntegral integrate_over_sections(const Domain& dom, G&& g, double kink_spacing, int quad_points = 0) {
  const int axis0 = dom.slicing_axis() - 1;
  if (const auto* disk = dom.as<Disk>()) {
    static const numeric::GaussRule rule = numeric::gauss_legendre(64);
    const double R = disk->radius;
    std::vector<double> cuts{0.0};
    if (kink_spacing > 0.0) {
      const auto top = static_cast<long long>(std::floor(2.0 * R / kink_spacing));
      for (long long j = top; j >= 1; --j) {
        const double c = j * kink_spacing / (2.0 * R);
        if (c < 1.0) cuts.push_back(std::acos(c));
      }
    }
    cuts.push_back(0.5 * std::numbers::pi);
    numeric::CompensatedSum total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (!(cuts[i + 1] > cuts[i])) continue;
      total += numeric::integrate(rule, cuts[i], cuts[i + 1], [&](double theta) {
        const double c = std::cos(theta);
        return g(2.0 * R * c) * R * c;
      });
    }
    return {2.0 * total.value(), false};
  }
  if (const auto* gen = dom.as<GenericSliced>()) {
    const int n = quad_points > 0 ? quad_points : default_quad_points(dom.dim() - 1);
    numeric::CompensatedSum total;
    const double cell = for_each_midpoint(gen->bounding_box, axis0, n, [&](std::span<const double> xp) {
      for (const auto& iv : sections(dom, xp)) total += g(iv.length());
    });
    return {cell * total.value(), false};
  }
  numeric::CompensatedSum total;
  for (const auto& b : detail::component_boxes(dom))
    total += detail::projected_measure(b, axis0) * g(b.sides[axis0]);
  return {total.value(), true};
}

/// vol(Ω_Λ) and d_Λ(Ω) at one value of Λ.
struct SlicingStats {
  double lambda = 0.0;
  double vol_omega_lambda = 0.0;
  double d_lambda = 0.0;
  bool exact = false;
};

/// Intervals count towards Ω_Λ only when strictly longer than l_Λ.
inline SlicingStats slicing_stats(const Domain& dom, double lambda, int quad_points = 0) {
  const double l = critical_length(lambda);
  SlicingStats s{lambda, 0.0, 0.0, true};
  if (const auto* disk = dom.as<Disk>()) {
    const double R = disk->radius;
    if (2.0 * R > l) {
      const double x1 = std::sqrt(R * R - 0.25 * l * l);
      s.d_lambda = 2.0 * x1;
      s.vol_omega_lambda = 2.0 * (x1 * 0.5 * l + R * R * std::asin(x1 / R));
    }
    return s;
  }
  if (dom.is_generic()) {
    const int axis0 = dom.slicing_axis() - 1;
    const auto& gen = *dom.as<GenericSliced>();
    const int n = quad_points > 0 ? quad_points : default_quad_points(dom.dim() - 1);
    numeric::CompensatedSum vol, count;
    const double cell = for_each_midpoint(gen.bounding_box, axis0, n, [&](std::span<const double> xp) {
      for (const auto& iv : sections(dom, xp)) {
        if (iv.length() > l) {
          vol += iv.length();
          count += 1.0;
        }
      }
    });
    s.vol_omega_lambda = cell * vol.value();
    s.d_lambda = cell * count.value();
    s.exact = false;
    return s;
  }
  s.vol_omega_lambda = integrate_over_sections(dom, [l](double len) { return len > l ? len : 0.0; }, 0.0).value;
  s.d_lambda = integrate_over_sections(dom, [l](double len) { return len > l ? 1.0 : 0.0; }, 0.0).value;
  return s;
}

/// vol(Ω). Generic domains are integrated with the midpoint rule.
inline double volume(const Domain& dom) {
  if (const auto* d = dom.as<Disk>()) return std::numbers::pi * d->radius * d->radius;
  if (dom.is_generic()) return integrate_over_sections(dom, [](double len) { return len; }, 0.0).value;
  numeric::CompensatedSum v;
  for (const auto& b : detail::component_boxes(dom)) v += b.volume();
  return v.value();
}

/// |∂Ω|, the (d-1)-dimensional boundary measure.
inline double surface(const Domain& dom) {
  if (const auto* d = dom.as<Disk>()) return 2.0 * std::numbers::pi * d->radius;
  if (dom.is_generic()) throw UnsupportedDomainError("surface is unavailable for generic sliced domains");
  const auto boxes = detail::component_boxes(dom);
  for (std::size_t i = 0; i < boxes.size(); ++i)
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      bool closures_meet = true;
      for (int c = 0; c < dom.dim(); ++c)
        if (std::max(boxes[i].lower(c), boxes[j].lower(c)) > std::min(boxes[i].upper(c), boxes[j].upper(c)))
          closures_meet = false;
      if (closures_meet) throw UnsupportedDomainError("surface needs the boxes of a union to be separated");
    }
  numeric::CompensatedSum s;
  for (const auto& b : boxes)
    for (int i = 0; i < b.dim(); ++i) s += 2.0 * b.volume() / b.sides[i];
  return s.value();
}

/// J(Ω) = min_y ∫_Ω |x - y|² dx, attained at the centroid.
inline double moment_J(const Domain& dom, int quad_points = 0) {
  if (const auto* d = dom.as<Disk>()) return 0.5 * std::numbers::pi * std::pow(d->radius, 4);
  const int n = dom.dim();
  if (dom.is_generic()) {
    const int axis0 = dom.slicing_axis() - 1;
    const auto& gen = *dom.as<GenericSliced>();
    const int q = quad_points > 0 ? quad_points : default_quad_points(n - 1);
    // First pass: volume and first moments; second pass: central second moment.
    numeric::CompensatedSum vol;
    std::vector<numeric::CompensatedSum> first(n);
    const double cell = for_each_midpoint(gen.bounding_box, axis0, q, [&](std::span<const double> xp) {
      for (const auto& iv : sections(dom, xp)) {
        const double len = iv.length();
        vol += len;
        for (int j = 0; j < n - 1; ++j) first[detail::x_prime_coordinate(axis0, j)] += xp[j] * len;
        first[axis0] += 0.5 * (iv.hi * iv.hi - iv.lo * iv.lo);
      }
    });
    if (!(vol.value() > 0.0)) return 0.0;
    std::vector<double> centroid(n);
    for (int i = 0; i < n; ++i) centroid[i] = first[i].value() / vol.value();
    numeric::CompensatedSum second;
    for_each_midpoint(gen.bounding_box, axis0, q, [&](std::span<const double> xp) {
      for (const auto& iv : sections(dom, xp)) {
        double r2 = 0.0;
        for (int j = 0; j < n - 1; ++j) {
          const double dx = xp[j] - centroid[detail::x_prime_coordinate(axis0, j)];
          r2 += dx * dx;
        }
        const double a = iv.lo - centroid[axis0];
        const double b = iv.hi - centroid[axis0];
        second += r2 * iv.length() + (b * b * b - a * a * a) / 3.0;
      }
    });
    return cell * second.value();
  }
  const auto boxes = detail::component_boxes(dom);
  const double total = volume(dom);
  std::vector<double> centroid(n, 0.0);
  for (const auto& b : boxes)
    for (int i = 0; i < n; ++i) centroid[i] += b.volume() * 0.5 * (b.lower(i) + b.upper(i)) / total;
  numeric::CompensatedSum J;
  for (const auto& b : boxes) {
    double own = 0.0, shift = 0.0;
    for (int i = 0; i < n; ++i) {
      own += b.sides[i] * b.sides[i] / 12.0;
      const double dc = 0.5 * (b.lower(i) + b.upper(i)) - centroid[i];
      shift += dc * dc;
    }
    J += b.volume() * (own + shift);
  }
  return J.value();
}

/// Generic sliced view of any domain, answering sections through `sections(dom, ·)`.
inline Domain as_generic(const Domain& dom) {
  if (dom.is_generic()) return dom;
  return Domain::generic(
      dom.dim(), [dom](std::span<const double> xp) { return sections(dom, xp); }, bounding_box(dom),
      dom.slicing_axis());
}

}  // namespace berezin

#endif  // BEREZIN_GEOMETRY_HPP
