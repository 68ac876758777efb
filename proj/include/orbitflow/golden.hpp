/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================
*/

#ifndef ORBITFLOW_GOLDEN_HPP_
#define ORBITFLOW_GOLDEN_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitflow/incidence.hpp"
#include "orbitflow/lattice.hpp"

namespace orbitflow {

// ---------------------------------------------------------------------------
// Reference table files: '#' comment lines, one header row, comma-separated.

class CsvTable {
 public:
  static CsvTable load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table " + path.string());
    CsvTable t;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      auto fields = split(line);
      if (t.header_.empty())
        t.header_ = std::move(fields);
      else if (fields.size() != t.header_.size())
        throw std::runtime_error(path.string() + ": ragged row '" + line + "'");
      else
        t.rows_.push_back(std::move(fields));
    }
    return t;
  }

  const std::vector<std::string>& header() const { return header_; }
  std::size_t size() const { return rows_.size(); }

  const std::string& text(std::size_t row, const std::string& column) const {
    return rows_.at(row).at(column_index(column));
  }
  double number(std::size_t row, const std::string& column) const {
    return std::stod(text(row, column));
  }
  std::int64_t integer(std::size_t row, const std::string& column) const {
    return std::stoll(text(row, column));
  }

  std::size_t column_index(const std::string& column) const {
    const auto it = std::find(header_.begin(), header_.end(), column);
    if (it == header_.end()) throw std::out_of_range("no column '" + column + "'");
    return static_cast<std::size_t>(it - header_.begin());
  }

  /// Half a unit in the last quoted decimal place of a cell ("18.8" -> 0.05).
  double quoted_half_unit(std::size_t row, const std::string& column) const {
    const auto& s = text(row, column);
    const auto dot = s.find('.');
    const int decimals = dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
    return 0.5 * std::pow(10.0, -decimals);
  }

 private:
  static std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// ---------------------------------------------------------------------------
// Exact quantities

struct FiniteNDiagnostics {
  int n = 0;
  std::int64_t modes = 0;
  std::int64_t orbits = 0;
  std::int64_t shells = 0;
  std::int64_t max_triads = 0;
  std::int64_t total_triads = 0;
};

inline FiniteNDiagnostics finite_n_diagnostics(const LatticeIndex& index) {
  if (index.truncation() != Truncation::cube)
    throw std::invalid_argument("finite_n_diagnostics: closed-form triad counts need the cube");
  FiniteNDiagnostics d;
  d.n = index.n();
  d.modes = static_cast<std::int64_t>(index.mode_count());
  d.orbits = static_cast<std::int64_t>(index.orbit_count());
  d.shells = static_cast<std::int64_t>(index.shell_count());
  for (const Mode& k : index.modes()) {
    const auto t = triad_count(k, index.n());
    d.max_triads = std::max(d.max_triads, t);
    d.total_triads += t;
  }
  return d;
}

struct IncidenceRow {
  int n = 0;
  Truncation truncation = Truncation::cube;
  double s = 0.0;
  Mode s_argmax;
  std::size_t s_argmax_size = 0;
  double iw = 0.0;
  Mode iw_argmax;
};

inline IncidenceRow incidence_row(const LatticeIndex& index) {
  const auto gamma = gamma_matrix(index);
  const auto s = incidence_sum(gamma);
  const auto w = weighted_incidence(gamma, index);
  IncidenceRow row;
  row.n = index.n();
  row.truncation = index.truncation();
  row.s = s.value;
  row.iw = w.value;
  if (index.orbit_count() > 0) {
    row.s_argmax = index.orbit(s.argmax_orbit).rep;
    row.s_argmax_size = index.orbit(s.argmax_orbit).size();
    row.iw_argmax = index.orbit(w.argmax_orbit).rep;
  }
  return row;
}

// ---------------------------------------------------------------------------
// Regression against the reference tables

struct GoldenCheck {
  std::string table;
  int n = 0;
  std::string column;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct GoldenReport {
  std::vector<GoldenCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }
  std::vector<GoldenCheck> failures() const {
    std::vector<GoldenCheck> out;
    for (const auto& c : checks)
      if (!c.pass) out.push_back(c);
    return out;
  }
  void add(std::string table, int n, std::string column, double expected, double actual,
           double tolerance) {
    checks.push_back({std::move(table), n, std::move(column), expected, actual, tolerance,
                      std::abs(expected - actual) <= tolerance});
  }
};

/// Recomputes every deterministic cell of the exact reference tables found in
/// data_dir and compares. Integer tables are compared exactly; S(N) to 0.005;
/// the cube/sphere comparison to 0.01 or half a unit of the quoted digit,
/// whichever is larger. Rows with N > max_n are skipped.
inline GoldenReport golden_tables(const std::filesystem::path& data_dir,
                                  int max_n = std::numeric_limits<int>::max()) {
  GoldenReport report;

  const auto finite = CsvTable::load(data_dir / "finite_n.csv");
  for (std::size_t r = 0; r < finite.size(); ++r) {
    const int n = static_cast<int>(finite.integer(r, "N"));
    if (n > max_n) continue;
    const auto d = finite_n_diagnostics(*enumerate_lattice(n, Truncation::cube));
    const std::pair<const char*, std::int64_t> cols[] = {{"modes", d.modes},
                                                         {"orbits", d.orbits},
                                                         {"shells", d.shells},
                                                         {"max_triads", d.max_triads},
                                                         {"total_triads", d.total_triads}};
    for (const auto& [col, actual] : cols)
      report.add("finite_n", n, col, static_cast<double>(finite.integer(r, col)),
                 static_cast<double>(actual), 0.0);
  }

  const auto burnside = CsvTable::load(data_dir / "burnside.csv");
  for (std::size_t r = 0; r < burnside.size(); ++r) {
    const int n = static_cast<int>(burnside.integer(r, "N"));
    if (n > max_n) continue;
    const auto index = enumerate_lattice(n, Truncation::cube);
    report.add("burnside", n, "orbits", static_cast<double>(burnside.integer(r, "orbits")),
               static_cast<double>(burnside_orbit_total(*index)), 0.0);
  }

  const auto incidence = CsvTable::load(data_dir / "incidence.csv");
  for (std::size_t r = 0; r < incidence.size(); ++r) {
    const int n = static_cast<int>(incidence.integer(r, "N"));
    if (n > max_n) continue;
    const auto row = incidence_row(*enumerate_lattice(n, Truncation::cube));
    report.add("incidence", n, "S", incidence.number(r, "S"), row.s, 0.005);
  }

  const auto cvs = CsvTable::load(data_dir / "cubic_vs_spherical.csv");
  for (std::size_t r = 0; r < cvs.size(); ++r) {
    const int n = static_cast<int>(cvs.integer(r, "N"));
    if (n > max_n) continue;
    const double n2 = double(n) * n, n3 = n2 * n;
    for (const auto trunc : {Truncation::cube, Truncation::sphere}) {
      const auto row = incidence_row(*enumerate_lattice(n, trunc));
      const std::string suffix = trunc == Truncation::cube ? "_cube" : "_sphere";
      const std::pair<std::string, double> cols[] = {{"S" + suffix, row.s},
                                                     {"S_over_N3" + suffix, row.s / n3},
                                                     {"Iw" + suffix, row.iw},
                                                     {"Iw_over_N2" + suffix, row.iw / n2}};
      for (const auto& [col, actual] : cols)
        report.add("cubic_vs_spherical", n, col, cvs.number(r, col), actual,
                   std::max(0.01, cvs.quoted_half_unit(r, col)));
    }
  }
  return report;
}

}  // namespace orbitflow

#endif  // ORBITFLOW_GOLDEN_HPP_
