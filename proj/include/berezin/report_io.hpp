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

// CSV and plain-text rendering of reports and spectra.
//
// CSV layout: a version line `# berezin-lab v<semver>`, one header line, then
// one line per row. Value columns come first in their documented order, then
// for each verdict `v_<name>` (pass | fail | n/a) and `m_<name>` (signed margin,
// negative on failure). Numbers use 17 significant digits.

#ifndef BEREZIN_REPORT_IO_HPP
#define BEREZIN_REPORT_IO_HPP

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "berezin/harness.hpp"
#include "berezin/spectra.hpp"

namespace berezin::io {

/// Round-trip-safe decimal text of `x` (17 significant digits).
inline std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

/// Shortest text that reads back as `x`; used for human-readable output.
inline std::string format_short(double x) {
  if (!std::isfinite(x)) return format_number(x);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    default:
      return "n/a";
  }
}

inline void write_version_line(std::ostream& out) { out << "# berezin-lab v" << kVersion << '\n'; }

inline void write_csv(std::ostream& out, const BoundReport& report) {
  write_version_line(out);
  bool first = true;
  const auto sep = [&] {
    if (!first) out << ',';
    first = false;
  };
  for (const auto& c : report.value_columns) sep(), out << c;
  for (const auto& c : report.verdict_columns) {
    sep(), out << "v_" << c;
    sep(), out << "m_" << c;
  }
  out << '\n';
  for (const auto& row : report.rows) {
    first = true;
    for (double v : row.values) sep(), out << format_number(v);
    for (const auto& v : row.verdicts) {
      sep(), out << outcome_name(v.outcome);
      sep(), out << (v.outcome == Outcome::not_applicable ? std::string("nan") : format_number(v.margin));
    }
    out << '\n';
  }
}

inline void write_spectrum_csv(std::ostream& out, const Spectrum& spec) {
  write_version_line(out);
  out << "eigenvalue,multiplicity\n";
  for (const auto& l : spec.levels()) out << format_number(l.value) << ',' << l.multiplicity << '\n';
}

inline void write_row(std::ostream& out, const BoundReport& report, std::size_t i) {
  const auto& row = report.rows[i];
  for (std::size_t c = 0; c < report.value_columns.size(); ++c)
    out << "  " << report.value_columns[c] << " = " << format_short(row.values[c]) << '\n';
  for (std::size_t c = 0; c < report.verdict_columns.size(); ++c) {
    const auto& v = row.verdicts[c];
    out << "  " << report.verdict_columns[c] << ": " << outcome_name(v.outcome);
    if (v.outcome != Outcome::not_applicable) out << " (margin " << format_short(v.margin) << ")";
    out << '\n';
  }
}

/// Human-readable summary: metadata, per-verdict counts and tightest margins,
/// and the worst failing row if any.
inline void write_summary(std::ostream& out, const BoundReport& report) {
  const auto& m = report.meta;
  out << "berezin-lab v" << m.version << "  " << m.kind << " report";
  if (!m.domain.empty()) out << "  domain " << m.domain;
  out << "  sigma " << format_short(m.sigma) << '\n';
  if (m.nu) {
    out << "nu = " << format_short(*m.nu) << " (" << m.nu_source << ", "
        << (m.nu_guaranteed ? "guaranteed" : "exploratory") << ")\n";
  }
  if (m.remainder) {
    out << "epsilon_mu = " << format_short(m.remainder->epsilon) << " at A = " << format_short(m.remainder->argmin_A)
        << " (mu = " << format_short(m.remainder->mu) << ")\n";
  }
  if (m.melas_M) out << "melas M = " << format_short(*m.melas_M) << " (external constant)\n";
  out << "rows: " << report.rows.size() << ", slack " << format_short(m.slack) << '\n';
  for (std::size_t c = 0; c < report.verdict_columns.size(); ++c) {
    const auto pass = report.count(Outcome::pass, c);
    const auto fail = report.count(Outcome::fail, c);
    const auto na = report.count(Outcome::not_applicable, c);
    out << "  " << report.verdict_columns[c] << ": " << pass << " pass, " << fail << " fail, " << na << " n/a";
    if (const auto t = report.tightest(c)) out << ", tightest relative margin " << format_short(*t);
    out << '\n';
  }
  if (const auto worst = report.worst_failure()) {
    out << "worst failure: " << report.verdict_columns[worst->verdict] << " at row " << worst->row + 1 << '\n';
    write_row(out, report, worst->row);
  }
}

}  // namespace berezin::io

#endif  // BEREZIN_REPORT_IO_HPP
