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

// Text form of domains:
//
//   domain := shape [ ";axis=" int ]
//   shape  := "box:" sides | "disk:" number | "union:" part { "+" part }
//   part   := "box(" sides ")@(" number { "," number } ")"
//   sides  := number { "x" number }
//
// render_domain uses the shortest decimal form of every number, so
// parse_domain(render_domain(d)) reproduces d exactly.

#ifndef BEREZIN_DOMAIN_TEXT_HPP
#define BEREZIN_DOMAIN_TEXT_HPP

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "berezin/error.hpp"
#include "berezin/geometry.hpp"

namespace berezin {

namespace detail {

class DomainLexer {
 public:
  explicit DomainLexer(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ == text_.size(); }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("domain text: " + what, pos_);
  }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  double number() {
    double value = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
    if (ec != std::errc() || ptr == first) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  int integer() {
    int value = 0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::vector<double> sides() {
    std::vector<double> out{number()};
    while (accept("x")) out.push_back(number());
    return out;
  }

  std::vector<double> tuple() {
    expect("(");
    std::vector<double> out{number()};
    while (accept(",")) out.push_back(number());
    expect(")");
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline std::string join(const std::vector<double>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += shortest(v[i]);
  }
  return out;
}

}  // namespace detail

/// Parses the text form; geometric violations (overlapping union members,
/// non-positive sides) surface as DomainError.
inline Domain parse_domain(std::string_view text) {
  detail::DomainLexer lex(text);
  enum class Kind { box, disk, box_union } kind;
  std::vector<double> sides;
  double radius = 0.0;
  std::vector<AxisBox> parts;
  if (lex.accept("box:")) {
    kind = Kind::box;
    sides = lex.sides();
  } else if (lex.accept("disk:")) {
    kind = Kind::disk;
    radius = lex.number();
  } else if (lex.accept("union:")) {
    kind = Kind::box_union;
    do {
      lex.expect("box(");
      AxisBox b;
      b.sides = lex.sides();
      lex.expect(")@");
      const std::size_t at = lex.pos();
      b.origin = lex.tuple();
      if (b.origin.size() != b.sides.size())
        throw ParseError("domain text: origin dimension does not match the box", at);
      parts.push_back(std::move(b));
    } while (lex.accept("+"));
  } else {
    lex.fail("expected 'box:', 'disk:' or 'union:'");
  }
  int axis = 0;
  if (lex.accept(";axis=")) {
    const std::size_t at = lex.pos();
    axis = lex.integer();
    if (axis < 1) throw ParseError("domain text: axis must be at least 1", at);
  }
  if (!lex.done()) lex.fail("unexpected trailing text");

  switch (kind) {
    case Kind::box:
      return Domain::box(std::move(sides), axis);
    case Kind::disk:
      return Domain::disk(radius, axis);
    default:
      return Domain::box_union(std::move(parts), axis);
  }
}

/// Text form of a box, box union or disk; the axis suffix is omitted when it
/// is the default (the last coordinate). A single box is written without its
/// origin, which the spectrum does not depend on.
inline std::string render_domain(const Domain& dom) {
  std::string out;
  if (const auto* b = dom.as<AxisBox>()) {
    out = "box:" + detail::join(b->sides, 'x');
  } else if (const auto* disk = dom.as<Disk>()) {
    out = "disk:" + detail::shortest(disk->radius);
  } else if (const auto* u = dom.as<BoxUnion>()) {
    out = "union:";
    for (std::size_t i = 0; i < u->boxes.size(); ++i) {
      const auto& box = u->boxes[i];
      std::vector<double> origin(box.sides.size());
      for (int j = 0; j < box.dim(); ++j) origin[j] = box.lower(j);
      if (i) out += '+';
      out += "box(" + detail::join(box.sides, 'x') + ")@(" + detail::join(origin, ',') + ")";
    }
  } else {
    throw UnsupportedDomainError("render_domain: generic sliced domains have no text form");
  }
  if (dom.slicing_axis() != dom.dim()) out += ";axis=" + std::to_string(dom.slicing_axis());
  return out;
}

}  // namespace berezin

#endif  // BEREZIN_DOMAIN_TEXT_HPP
