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

// Command-line front end: orbitflow <lattice|incidence|stretch|evolve|mc|golden|fit> [flags]
//
// Exit codes: 0 success, 1 invalid input, 2 golden mismatch, 3 numerical blowup.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "orbitflow/orbitflow.hpp"
#include "orbitflow/report.hpp"

using namespace orbitflow;

namespace {

enum ExitCode { kOk = 0, kInvalid = 1, kGoldenMismatch = 2, kBlowup = 3 };

struct OutputOptions {
  bool json = false;
  bool csv = false;
  std::string path;

  void attach(CLI::App* cmd) {
    auto* j = cmd->add_flag("--json", json, "Emit JSON");
    auto* c = cmd->add_flag("--csv", csv, "Emit CSV (default)");
    j->excludes(c);
    cmd->add_option("-o,--output", path, "Write to this file instead of stdout");
  }
};

// Owns the output file when one was requested.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot open output file " + path);
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct EnsembleOptions {
  std::string ensemble = "isotropic";
  std::uint64_t seed = 0;
  double s = 2.5;
  double m = 1.0;
  std::string normalize;

  void attach(CLI::App* cmd, const std::string& default_normalization) {
    normalize = default_normalization;
    cmd->add_option("--ensemble", ensemble, "isotropic|kolmogorov|sobolev")->capture_default_str();
    cmd->add_option("--seed", seed, "Base seed of the counter-based generator")->capture_default_str();
    cmd->add_option("--s", s, "Sobolev decay exponent (> 3/2)")->capture_default_str();
    cmd->add_option("--m", m, "Sobolev envelope amplitude (> 0)")->capture_default_str();
    cmd->add_option("--normalize", normalize,
                    "energy: 1/2 sum |u|^2 = 1; gradient: 1/2 sum |k|^2 |u|^2 = 1")
        ->capture_default_str();
  }

  EnsembleSpec spec() const {
    EnsembleSpec out;
    out.kind = parse_ensemble_kind(ensemble);
    out.seed = seed;
    out.s = s;
    out.m = m;
    out.normalization = parse_normalization(normalize);
    out.validate();
    return out;
  }
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like a..b, got " + text);
  const int a = std::stoi(text.substr(0, dots));
  const int b = std::stoi(text.substr(dots + 2));
  if (a < 1 || b < a) throw std::invalid_argument("invalid range " + text);
  return {a, b};
}

std::string argmax_text(const Mode& m) { return mode_text(m); }

// ---------------------------------------------------------------------------
// lattice

struct LatticeCommand {
  int n = 1;
  std::string truncation = "cube";
  OutputOptions output;

  int run() const {
    const auto index = enumerate_lattice(n, parse_truncation(truncation));
    Sink sink(output.path);
    auto& out = sink.out();
    if (output.json) {
      out << lattice_json(*index).dump(2) << '\n';
      return kOk;
    }
    out << "# N=" << n << " truncation=" << truncation << " modes=" << index->mode_count()
        << " orbits=" << index->orbit_count() << " shells=" << index->shell_count() << '\n';
    CsvWriter w(out);
    w.header({"rep", "size", "r"});
    for (const auto& o : index->orbits()) w.row(mode_text(o.rep), o.size(), o.shell_r);
    return kOk;
  }
};

// ---------------------------------------------------------------------------
// incidence

struct IncidenceCommand {
  std::optional<int> n;
  std::string n_range;
  std::string truncation = "cube";
  bool weighted = false;
  bool fit = false;
  OutputOptions output;

  int run() const {
    int first = 1, last = 1;
    if (!n_range.empty()) {
      std::tie(first, last) = parse_range(n_range);
    } else if (n) {
      first = last = *n;
    } else {
      throw std::invalid_argument("incidence needs --n or --n-range");
    }
    const auto trunc = parse_truncation(truncation);
    std::vector<IncidenceRow> rows;
    for (int k = first; k <= last; ++k) rows.push_back(incidence_row(*enumerate_lattice(k, trunc)));

    std::optional<PowerLawFit> fit_s, fit_iw;
    if (fit) {
      std::vector<std::pair<double, double>> ps, pw;
      for (const auto& r : rows) {
        if (r.s > 0) ps.emplace_back(r.n, r.s);
        if (r.iw > 0) pw.emplace_back(r.n, r.iw);
      }
      if (ps.size() < 2) throw std::invalid_argument("--fit needs at least two N with S > 0");
      fit_s = power_law_fit(ps);
      if (weighted) fit_iw = power_law_fit(pw);
    }

    Sink sink(output.path);
    auto& out = sink.out();
    if (output.json) {
      Json j;
      j["truncation"] = std::string(to_string(trunc));
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json row{{"N", r.n},
                 {"S", r.s},
                 {"S_argmax", to_json(r.s_argmax)},
                 {"S_argmax_size", r.s_argmax_size}};
        if (weighted) {
          row["Iw"] = r.iw;
          row["Iw_argmax"] = to_json(r.iw_argmax);
        }
        arr.push_back(std::move(row));
      }
      j["rows"] = std::move(arr);
      if (fit_s) j["fit_S"] = to_json(*fit_s);
      if (fit_iw) j["fit_Iw"] = to_json(*fit_iw);
      out << j.dump(2) << '\n';
      return kOk;
    }
    CsvWriter w(out);
    if (weighted) {
      w.header({"N", "truncation", "S", "S_argmax", "S_argmax_size", "Iw", "Iw_argmax"});
      for (const auto& r : rows)
        w.row(r.n, truncation, r.s, argmax_text(r.s_argmax), r.s_argmax_size, r.iw,
              argmax_text(r.iw_argmax));
    } else {
      w.header({"N", "truncation", "S", "S_argmax", "S_argmax_size"});
      for (const auto& r : rows) w.row(r.n, truncation, r.s, argmax_text(r.s_argmax), r.s_argmax_size);
    }
    if (fit_s) out << "# fit_S exponent=" << format_double(fit_s->exponent) << '\n';
    if (fit_iw) out << "# fit_Iw exponent=" << format_double(fit_iw->exponent) << '\n';
    return kOk;
  }
};

// ---------------------------------------------------------------------------
// stretch

struct StretchCommand {
  int n = 2;
  std::size_t samples = 100;
  bool aggregate = false;
  EnsembleOptions ensemble;
  OutputOptions output;

  int run() const {
    const auto spec = ensemble.spec();
    const auto index = enumerate_lattice(n, Truncation::cube);
    const auto result = monte_carlo(index, spec, samples);
    Sink sink(output.path);
    auto& out = sink.out();
    if (output.json) {
      Json j{{"N", n}, {"ensemble", std::string(to_string(spec.kind))}, {"seed", spec.seed},
             {"normalization", std::string(to_string(spec.normalization))}};
      j["summary"] = to_json(result.row);
      if (!aggregate) {
        Json arr = Json::array();
        for (const auto& s : result.per_sample) arr.push_back(to_json(s));
        j["samples"] = std::move(arr);
      }
      out << j.dump(2) << '\n';
    } else if (aggregate) {
      write_csv(out, std::vector<McRow>{result.row});
    } else {
      write_csv(out, result.per_sample);
    }
    return kOk;
  }
};

// ---------------------------------------------------------------------------
// evolve

struct EvolveCommand {
  int n = 3;
  EvolutionConfig config;
  std::string integrator = "etdrk4";
  EnsembleOptions ensemble;
  OutputOptions output;

  int run() {
    config.integrator = parse_integrator(integrator);
    config.validate();
    const auto spec = ensemble.spec();
    const auto u0 = sample_field(spec, enumerate_lattice(n, Truncation::cube), 0);
    Sink sink(output.path);
    auto& out = sink.out();
    std::vector<DiagnosticsRecord> records;
    std::optional<BlowupError> blowup;
    try {
      // Stream CSV rows as they are produced so a blowup still leaves the history.
      bool first = true;
      records = evolve(u0, config, [&](const DiagnosticsRecord& r, const VelocityField&) {
        if (output.json) return;
        if (first) {
          CsvWriter(out).header({"t", "energy", "enstrophy", "rho_v", "inf_norm_v", "nu_c_star", "bkm_integral"});
          first = false;
        }
        CsvWriter(out).row(r.t, r.energy, r.enstrophy, r.rho_v, r.inf_norm_v, r.nu_c_star, r.bkm_integral);
        out.flush();
      });
    } catch (const BlowupError& e) {
      blowup = e;
    }
    if (output.json) {
      Json j{{"N", n},
             {"nu", config.nu},
             {"dt", config.dt},
             {"t_end", config.t_end},
             {"integrator", std::string(to_string(config.integrator))},
             {"seed", spec.seed}};
      Json arr = Json::array();
      for (const auto& r : records) arr.push_back(to_json(r));
      j["records"] = std::move(arr);
      j["status"] = blowup ? "blowup" : "completed";
      out << j.dump(2) << '\n';
    }
    if (blowup) {
      std::cerr << "orbitflow: " << blowup->what() << '\n';
      return kBlowup;
    }
    return kOk;
  }
};

// ---------------------------------------------------------------------------
// mc: ensemble-table reproduction

struct McCommand {
  int max_n = 8;
  int kolmogorov_max_n = 4;
  std::size_t samples = 0;  // 0: 2000 for N <= 4, 200 beyond
  std::uint64_t seed = 1;
  std::string table = "all";
  OutputOptions output;

  std::size_t samples_for(int n) const { return samples ? samples : (n <= 4 ? 2000 : 200); }

  int run() const {
    if (table != "all" && table != "isotropic" && table != "kolmogorov")
      throw std::invalid_argument("--table must be all, isotropic or kolmogorov");
    if (max_n < 1 || kolmogorov_max_n < 1) throw std::invalid_argument("N bounds must be >= 1");
    struct Run {
      std::string ensemble;
      std::vector<McRow> rows;
      std::optional<PowerLawFit> fit_rho, fit_nu;
    };
    std::vector<Run> runs;
    auto run_table = [&](EnsembleKind kind, int last) {
      EnsembleSpec spec;
      spec.kind = kind;
      spec.seed = seed;
      spec.normalization = Normalization::gradient;
      Run run{std::string(to_string(kind)), {}, {}, {}};
      std::vector<std::pair<double, double>> rho, nu;
      for (int n = 1; n <= last; ++n) {
        const auto row = monte_carlo(enumerate_lattice(n, Truncation::cube), spec, samples_for(n)).row;
        std::cerr << "mc " << run.ensemble << " N=" << n << " samples=" << row.samples
                  << " mean_rho_v=" << row.mean_rho_v << '\n';
        run.rows.push_back(row);
        if (n >= 2) {
          rho.emplace_back(n, row.mean_rho_v);
          nu.emplace_back(n, row.mean_nu_c_star);
        }
      }
      if (rho.size() >= 2) {
        run.fit_rho = power_law_fit(rho);
        run.fit_nu = power_law_fit(nu);
      }
      runs.push_back(std::move(run));
    };
    if (table != "kolmogorov") run_table(EnsembleKind::isotropic, max_n);
    if (table != "isotropic") run_table(EnsembleKind::kolmogorov, kolmogorov_max_n);

    Sink sink(output.path);
    auto& out = sink.out();
    if (output.json) {
      Json j{{"seed", seed}, {"normalization", "gradient"}};
      Json arr = Json::array();
      for (const auto& r : runs) {
        Json rows = Json::array();
        for (const auto& row : r.rows) rows.push_back(to_json(row));
        Json entry{{"ensemble", r.ensemble}, {"rows", std::move(rows)}};
        if (r.fit_rho) {
          entry["fit_rho_v"] = to_json(*r.fit_rho);
          entry["fit_nu_c_star"] = to_json(*r.fit_nu);
        }
        arr.push_back(std::move(entry));
      }
      j["tables"] = std::move(arr);
      out << j.dump(2) << '\n';
      return kOk;
    }
    CsvWriter w(out);
    w.header({"ensemble", "N", "samples", "mean_rho_v", "stderr_rho_v", "mean_nu_c_star",
              "stderr_nu_c_star", "mean_rho_abs_v", "mean_inf_norm_v", "cancellation_ratio"});
    for (const auto& r : runs)
      for (const auto& row : r.rows)
        w.row(r.ensemble, row.n, row.samples, row.mean_rho_v, row.stderr_rho_v, row.mean_nu_c_star,
              row.stderr_nu_c_star, row.mean_rho_abs_v, row.mean_inf_norm_v, row.cancellation_ratio);
    for (const auto& r : runs)
      if (r.fit_rho)
        out << "# " << r.ensemble << " fit over N>=2: rho_v exponent=" << format_double(r.fit_rho->exponent)
            << " nu_c_star exponent=" << format_double(r.fit_nu->exponent) << '\n';
    return kOk;
  }
};

// ---------------------------------------------------------------------------
// golden

struct GoldenCommand {
  std::string data_dir = ORBITFLOW_DATA_DIR;
  int max_n = 10;
  OutputOptions output;

  int run() const {
    const auto report = golden_tables(data_dir, max_n);
    Sink sink(output.path);
    auto& out = sink.out();
    const auto failures = report.failures();
    if (output.json) {
      Json arr = Json::array();
      for (const auto& c : report.checks) arr.push_back(to_json(c));
      out << Json{{"checks", report.checks.size()}, {"failures", failures.size()}, {"results", arr}}.dump(2)
          << '\n';
    } else {
      for (const auto& c : failures)
        out << "MISMATCH " << c.table << " N=" << c.n << " " << c.column << ": expected "
            << format_double(c.expected) << " got " << format_double(c.actual) << " (tol "
            << c.tolerance << ")\n";
      out << "golden: " << report.checks.size() << " checks, " << failures.size() << " mismatches\n";
    }
    return failures.empty() ? kOk : kGoldenMismatch;
  }
};

// ---------------------------------------------------------------------------
// fit

struct FitCommand {
  std::string points;
  std::string input;
  std::string x_column = "N";
  std::string y_column;

  int run() const {
    std::vector<std::pair<double, double>> pts;
    if (!points.empty()) {
      std::stringstream ss(points);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("point must be x:y, got " + item);
        pts.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
      }
    } else if (!input.empty()) {
      const auto table = CsvTable::load(input);
      std::string y = y_column;
      if (y.empty()) {
        if (table.header().size() < 2) throw std::invalid_argument("input needs two columns");
        y = table.header()[1];
      }
      for (std::size_t r = 0; r < table.size(); ++r)
        pts.emplace_back(table.number(r, x_column), table.number(r, y));
    } else {
      throw std::invalid_argument("fit needs --points or --input");
    }
    const auto f = power_law_fit(pts);
    std::cout << "exponent," << format_double(f.exponent) << "\nprefactor," << format_double(f.prefactor)
              << '\n';
    return kOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry-reduced cubic Fourier-Galerkin diagnostics"};
  app.set_config("--config", "", "TOML file with one [subcommand] table of flag values");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: ORBITFLOW_THREADS or all cores)");

  LatticeCommand lattice;
  auto* lat = app.add_subcommand("lattice", "Orbit table of the truncated lattice");
  lat->add_option("--n", lattice.n, "Truncation radius N >= 1")->capture_default_str();
  lat->add_option("--truncation", lattice.truncation, "cube|sphere")->capture_default_str();
  lattice.output.attach(lat);

  IncidenceCommand incidence;
  auto* inc = app.add_subcommand("incidence", "Orbit-pair incidence sums S(N) and I_w(N)");
  auto* inc_n = inc->add_option("--n", incidence.n, "Single N");
  inc->add_option("--n-range", incidence.n_range, "Range a..b")->excludes(inc_n);
  inc->add_option("--truncation", incidence.truncation, "cube|sphere")->capture_default_str();
  inc->add_flag("--weighted", incidence.weighted, "Also compute the 1/|k|-weighted sum");
  inc->add_flag("--fit", incidence.fit, "Fit power-law exponents over the range");
  incidence.output.attach(inc);

  StretchCommand stretch;
  auto* str = app.add_subcommand("stretch", "Per-sample stretching-matrix diagnostics");
  str->add_option("--n", stretch.n, "Truncation radius")->capture_default_str();
  str->add_option("--samples", stretch.samples, "Number of samples")->capture_default_str();
  str->add_flag("--aggregate", stretch.aggregate, "Emit only the ensemble summary");
  stretch.ensemble.attach(str, "gradient");
  stretch.output.attach(str);

  EvolveCommand evolve_cmd;
  auto* evo = app.add_subcommand("evolve", "Time-evolve a sampled field and record diagnostics");
  evo->add_option("--n", evolve_cmd.n, "Truncation radius")->capture_default_str();
  evo->add_option("--nu", evolve_cmd.config.nu, "Viscosity")->capture_default_str();
  evo->add_option("--dt", evolve_cmd.config.dt, "Time step")->capture_default_str();
  evo->add_option("--t-end", evolve_cmd.config.t_end, "Final time")->capture_default_str();
  evo->add_option("--integrator", evolve_cmd.integrator, "rk4|etdrk4")->capture_default_str();
  evo->add_option("--output-every", evolve_cmd.config.output_every, "Steps between records")
      ->capture_default_str();
  evolve_cmd.ensemble.attach(evo, "energy");
  evolve_cmd.output.attach(evo);

  McCommand mc;
  auto* mcc = app.add_subcommand("mc", "Reproduce the ensemble tables (isotropic, Kolmogorov)");
  mcc->add_option("--max-n", mc.max_n, "Largest N of the isotropic table")->capture_default_str();
  mcc->add_option("--kolmogorov-max-n", mc.kolmogorov_max_n, "Largest N of the Kolmogorov table")
      ->capture_default_str();
  mcc->add_option("--samples", mc.samples, "Samples per N (default 2000 for N<=4, 200 beyond)");
  mcc->add_option("--seed", mc.seed, "Base seed")->capture_default_str();
  mcc->add_option("--table", mc.table, "all|isotropic|kolmogorov")->capture_default_str();
  mc.output.attach(mcc);

  GoldenCommand golden;
  auto* gold = app.add_subcommand("golden", "Regression against the exact reference tables");
  gold->add_option("--data-dir", golden.data_dir, "Directory of reference CSV tables")->capture_default_str();
  gold->add_option("--max-n", golden.max_n, "Skip rows with larger N")->capture_default_str();
  golden.output.attach(gold);

  FitCommand fit;
  auto* fitc = app.add_subcommand("fit", "Least-squares power-law exponent");
  auto* pts = fitc->add_option("--points", fit.points, "x:y pairs, comma separated");
  fitc->add_option("--input", fit.input, "CSV file")->excludes(pts);
  fitc->add_option("--x-column", fit.x_column, "Abscissa column")->capture_default_str();
  fitc->add_option("--y-column", fit.y_column, "Value column (default: second column)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  if (threads > 0) setenv("ORBITFLOW_THREADS", std::to_string(threads).c_str(), 1);

  try {
    if (*lat) return lattice.run();
    if (*inc) return incidence.run();
    if (*str) return stretch.run();
    if (*evo) return evolve_cmd.run();
    if (*mcc) return mc.run();
    if (*gold) return golden.run();
    if (*fitc) return fit.run();
  } catch (const BlowupError& e) {
    std::cerr << "orbitflow: " << e.what() << '\n';
    return kBlowup;
  } catch (const std::exception& e) {
    std::cerr << "orbitflow: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
