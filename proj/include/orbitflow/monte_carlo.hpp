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

#ifndef ORBITFLOW_MONTE_CARLO_HPP_
#define ORBITFLOW_MONTE_CARLO_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "orbitflow/ensemble.hpp"
#include "orbitflow/parallel.hpp"
#include "orbitflow/stats.hpp"
#include "orbitflow/transfer.hpp"

namespace orbitflow {

struct SampleDiagnostics {
  std::uint64_t sample_id = 0;
  StretchDiagnostics d;
};

/// One aggregated row of an ensemble run.
struct McRow {
  int n = 0;
  std::size_t samples = 0;
  double mean_rho_v = 0.0;
  double stderr_rho_v = 0.0;
  double mean_nu_c_star = 0.0;
  double stderr_nu_c_star = 0.0;
  double mean_rho_abs_v = 0.0;
  double mean_inf_norm_v = 0.0;
  double cancellation_ratio = 0.0;  // mean_rho_v / mean_rho_abs_v
};

struct McResult {
  McRow row;
  std::vector<SampleDiagnostics> per_sample;  // sorted by sample_id
};

inline McRow summarize(int n, const std::vector<SampleDiagnostics>& per_sample) {
  if (per_sample.size() < 2) throw std::invalid_argument("summary needs >= 2 samples");
  std::vector<double> rho, nu, rho_abs, inf;
  for (const auto& s : per_sample) {
    rho.push_back(s.d.rho_v);
    nu.push_back(s.d.nu_c_star);
    rho_abs.push_back(s.d.rho_abs_v);
    inf.push_back(s.d.inf_norm_v);
  }
  McRow row;
  row.n = n;
  row.samples = per_sample.size();
  row.mean_rho_v = mean(rho);
  row.stderr_rho_v = standard_error(rho);
  row.mean_nu_c_star = mean(nu);
  row.stderr_nu_c_star = standard_error(nu);
  row.mean_rho_abs_v = mean(rho_abs);
  row.mean_inf_norm_v = mean(inf);
  row.cancellation_ratio = row.mean_rho_abs_v > 0.0 ? row.mean_rho_v / row.mean_rho_abs_v : 0.0;
  return row;
}

/// Draws samples 0..samples-1 of the ensemble and aggregates their stretch
/// diagnostics. Reduction runs in sample_id order, so the summary is
/// bit-identical for any thread count.
inline McResult monte_carlo(const LatticePtr& index, const EnsembleSpec& spec, std::size_t samples,
                            unsigned threads = default_thread_count()) {
  if (samples < 2) throw std::invalid_argument("monte_carlo needs >= 2 samples");
  spec.validate();
  auto per_sample = parallel_map<SampleDiagnostics>(
      samples,
      [&](std::size_t i) {
        const auto u = sample_field(spec, index, i);
        return SampleDiagnostics{i, stretch_diagnostics(u)};
      },
      threads);
  McResult result;
  result.row = summarize(index->n(), per_sample);
  result.per_sample = std::move(per_sample);
  return result;
}

struct PlateauRow {
  int n = 0;
  double mean_inf_norm_v = 0.0;
  double stderr_inf_norm_v = 0.0;
};

struct PlateauReport {
  std::vector<PlateauRow> rows;
  PowerLawFit fit;  // of mean ||V_N||_inf against N
};

/// ||V_N||_inf for Sobolev-envelope fields |u_k| = M |k|^{-s} across N.
inline PlateauReport sobolev_plateau_check(double s, double m, const std::vector<int>& ns,
                                           std::size_t samples, std::uint64_t seed,
                                           unsigned threads = default_thread_count()) {
  if (!(s > 1.5)) throw std::invalid_argument("sobolev_plateau_check requires s > 3/2");
  if (samples < 2) throw std::invalid_argument("sobolev_plateau_check needs >= 2 samples");
  EnsembleSpec spec;
  spec.kind = EnsembleKind::sobolev;
  spec.s = s;
  spec.m = m;
  spec.seed = seed;
  PlateauReport report;
  std::vector<std::pair<double, double>> points;
  for (int n : ns) {
    const auto index = enumerate_lattice(n, Truncation::cube);
    const auto norms = parallel_map<double>(
        samples, [&](std::size_t i) { return stretch_diagnostics(sample_field(spec, index, i)).inf_norm_v; },
        threads);
    PlateauRow row{n, mean(norms), standard_error(norms)};
    report.rows.push_back(row);
    points.emplace_back(n, row.mean_inf_norm_v);
  }
  if (points.size() >= 2) report.fit = power_law_fit(points);
  return report;
}

}  // namespace orbitflow

#endif  // ORBITFLOW_MONTE_CARLO_HPP_
