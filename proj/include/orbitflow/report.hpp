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

#ifndef ORBITFLOW_REPORT_HPP_
#define ORBITFLOW_REPORT_HPP_

// CSV and JSON serialization of the diagnostics types. Floating-point values
// are written with 17 significant digits so they round-trip exactly.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitflow/galerkin.hpp"
#include "orbitflow/golden.hpp"
#include "orbitflow/monte_carlo.hpp"

namespace orbitflow {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string mode_text(const Mode& m) {
  return std::to_string(m[0]) + " " + std::to_string(m[1]) + " " + std::to_string(m[2]);
}

// ---------------------------------------------------------------------------
// CSV

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  CsvWriter& header(std::initializer_list<const char*> cols) {
    bool first = true;
    for (const char* c : cols) {
      out_ << (first ? "" : ",") << c;
      first = false;
    }
    out_ << '\n';
    return *this;
  }

  template <class... Ts>
  CsvWriter& row(const Ts&... values) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cell(values), first = false), ...);
    out_ << '\n';
    return *this;
  }

 private:
  static std::string cell(double v) { return format_double(v); }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  template <class I>
    requires std::is_integral_v<I>
  static std::string cell(I v) { return std::to_string(v); }

  std::ostream& out_;
};

inline void write_csv(std::ostream& out, const std::vector<DiagnosticsRecord>& records) {
  CsvWriter w(out);
  w.header({"t", "energy", "enstrophy", "rho_v", "inf_norm_v", "nu_c_star", "bkm_integral"});
  for (const auto& r : records)
    w.row(r.t, r.energy, r.enstrophy, r.rho_v, r.inf_norm_v, r.nu_c_star, r.bkm_integral);
}

inline void write_csv(std::ostream& out, const std::vector<SampleDiagnostics>& samples) {
  CsvWriter w(out);
  w.header({"sample_id", "rho_v", "rho_abs_v", "inf_norm_v", "nu_c_star"});
  for (const auto& s : samples)
    w.row(s.sample_id, s.d.rho_v, s.d.rho_abs_v, s.d.inf_norm_v, s.d.nu_c_star);
}

inline void write_csv(std::ostream& out, const std::vector<McRow>& rows) {
  CsvWriter w(out);
  w.header({"N", "samples", "mean_rho_v", "stderr_rho_v", "mean_nu_c_star", "stderr_nu_c_star",
            "mean_rho_abs_v", "mean_inf_norm_v", "cancellation_ratio"});
  for (const auto& r : rows)
    w.row(r.n, r.samples, r.mean_rho_v, r.stderr_rho_v, r.mean_nu_c_star, r.stderr_nu_c_star,
          r.mean_rho_abs_v, r.mean_inf_norm_v, r.cancellation_ratio);
}

// ---------------------------------------------------------------------------
// JSON. Doubles are stored as numbers; nlohmann/json prints them with
// round-trip precision.

using Json = nlohmann::ordered_json;

inline Json to_json(const Mode& m) { return Json::array({m[0], m[1], m[2]}); }

inline Json to_json(const DiagnosticsRecord& r) {
  return {{"t", r.t},           {"energy", r.energy},         {"enstrophy", r.enstrophy},
          {"rho_v", r.rho_v},   {"inf_norm_v", r.inf_norm_v}, {"nu_c_star", r.nu_c_star},
          {"bkm_integral", r.bkm_integral}};
}

inline Json to_json(const SampleDiagnostics& s) {
  return {{"sample_id", s.sample_id},
          {"rho_v", s.d.rho_v},
          {"rho_abs_v", s.d.rho_abs_v},
          {"inf_norm_v", s.d.inf_norm_v},
          {"nu_c_star", s.d.nu_c_star}};
}

inline Json to_json(const McRow& r) {
  return {{"N", r.n},
          {"samples", r.samples},
          {"mean_rho_v", r.mean_rho_v},
          {"stderr_rho_v", r.stderr_rho_v},
          {"mean_nu_c_star", r.mean_nu_c_star},
          {"stderr_nu_c_star", r.stderr_nu_c_star},
          {"mean_rho_abs_v", r.mean_rho_abs_v},
          {"mean_inf_norm_v", r.mean_inf_norm_v},
          {"cancellation_ratio", r.cancellation_ratio}};
}

inline Json to_json(const PowerLawFit& f) {
  return {{"exponent", f.exponent}, {"prefactor", f.prefactor}};
}

inline Json to_json(const GoldenCheck& c) {
  return {{"table", c.table},       {"N", c.n},
          {"column", c.column},     {"expected", c.expected},
          {"actual", c.actual},     {"tolerance", c.tolerance},
          {"pass", c.pass}};
}

inline Json lattice_json(const LatticeIndex& index) {
  Json orbits = Json::array();
  for (const auto& o : index.orbits())
    orbits.push_back({{"rep", to_json(o.rep)}, {"size", o.size()}, {"r", o.shell_r}});
  return {{"N", index.n()},
          {"truncation", std::string(to_string(index.truncation()))},
          {"modes", index.mode_count()},
          {"orbits", index.orbit_count()},
          {"shells", index.shell_count()},
          {"orbit_table", std::move(orbits)}};
}

}  // namespace orbitflow

#endif  // ORBITFLOW_REPORT_HPP_
