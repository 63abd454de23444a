// Copyright 2026 The spinsignal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// spinsignal command-line front end.
//
//   spinsignal simulate     one protocol run
//   spinsignal sweep        speed over one or two parameter axes
//   spinsignal oracle-check free-fermion route against exact evolution
//   spinsignal figure ID    built-in panel configuration
//
// Every protocol option can come from an INI file (--config); flags given
// on the command line override it. Exit codes: 0 ok, 2 config error,
// 3 numerical invariant violated.

#include "spinsignal/analysis.hpp"
#include "spinsignal/errors.hpp"
#include "spinsignal/io.hpp"
#include "spinsignal/oracles/free_fermion.hpp"
#include "spinsignal/presets.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace spinsignal;

namespace {

constexpr double kTraceDriftTol = 1e-8;
constexpr double kOracleTol = 1e-8;

// Raw option values; optional ones stay unset unless given.
struct Options {
  std::string model = "xxz";
  int n_sites = 10;
  std::string boundary = "open";
  std::optional<double> J, delta, Jz, Jx, Jy, h, h_long;
  std::string state = "vacuum";
  std::optional<double> t0;
  double theta = 0.0;
  double phi = 0.0;
  int qdp_site = 1;
  double t_max = 20.0;
  int samples = 20;
  double epsilon = kDefaultEpsilon;
  int fit_first = 3;
  int fit_last_offset = 2;
  int workers = 0;
  std::string out = "out";
  bool plot = false;

  // sweep
  std::string axis1;
  std::vector<double> values1;
  std::string axis2;
  std::vector<double> values2;

  // figure
  std::string figure;
};

void add_protocol_options(CLI::App& app, Options& o) {
  app.add_option("--model", o.model,
                 "ising-nn | ising-long-range | xxz | txy | txy-longitudinal");
  app.add_option("--N", o.n_sites, "number of sites");
  app.add_option("--boundary", o.boundary, "open | periodic");
  app.add_option("--J", o.J, "ising / xxz coupling");
  app.add_option("--delta", o.delta, "long-range exponent");
  app.add_option("--Jz", o.Jz, "xxz zz coupling");
  app.add_option("--Jx", o.Jx, "txy xx coupling");
  app.add_option("--Jy", o.Jy, "txy yy coupling");
  app.add_option("--h", o.h, "transverse field");
  app.add_option("--h-long", o.h_long, "longitudinal field");
  app.add_option("--state", o.state,
                 "vacuum | all-down | ghz | '[..] + [..]' | 'amplitudes: ...'");
  app.add_option("--t0", o.t0, "channel time (default 0.1/|J_ref|)");
  app.add_option("--theta", o.theta, "channel axis polar angle");
  app.add_option("--phi", o.phi, "channel axis azimuth");
  app.add_option("--qdp-site", o.qdp_site, "site the channel acts on");
  app.add_option("--t-max", o.t_max, "last time, in units of t0");
  app.add_option("--samples", o.samples, "grid points per t0");
  app.add_option("--epsilon", o.epsilon, "detection threshold");
  app.add_option("--fit-first", o.fit_first, "first site in the speed fit");
  app.add_option("--fit-last-offset", o.fit_last_offset,
                 "last fitted site is N minus this");
  app.add_option("--workers", o.workers, "sweep threads (0 = all cores)");
  app.add_option("--out", o.out, "output directory");
  app.add_flag("--plot", o.plot, "also write plot.svg");
}

ProtocolSpec protocol_from(const Options& o) {
  ProtocolSpec p;
  p.model.model = parse_model(o.model);
  p.model.n_sites = o.n_sites;
  p.model.boundary = parse_boundary(o.boundary);
  if (o.J) p.model.J = *o.J;
  if (o.delta) p.model.delta = *o.delta;
  if (o.Jz) p.model.Jz = *o.Jz;
  if (o.Jx) p.model.Jx = *o.Jx;
  if (o.Jy) p.model.Jy = *o.Jy;
  if (o.h) p.model.h = *o.h;
  if (o.h_long) p.model.h_long = *o.h_long;
  p.initial.expr = o.state;
  p.t0 = o.t0;
  p.axis = {o.theta, o.phi};
  p.qdp_site = o.qdp_site;
  p.grid.t_max_over_t0 = o.t_max;
  p.grid.samples_per_t0 = o.samples;
  p.validate();
  return p;
}

FitWindow window_from(const Options& o) { return {o.fit_first, o.fit_last_offset}; }

void check_epsilon(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw ConfigError("epsilon", "must be positive");
  }
}

int worker_count(const Options& o) {
  if (o.workers < 0) throw ConfigError("workers", "must be >= 0");
  if (o.workers > 0) return o.workers;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

json spec_json(const ProtocolSpec& p) {
  const auto dir = p.axis.direction();
  return {{"model", std::string(to_string(p.model.model))},
          {"N", p.model.n_sites},
          {"boundary", std::string(to_string(p.model.boundary))},
          {"J", p.model.J},
          {"delta", p.model.delta},
          {"Jz", p.model.Jz},
          {"Jx", p.model.Jx},
          {"Jy", p.model.Jy},
          {"h", p.model.h},
          {"h_long", p.model.h_long},
          {"state", p.initial.expr},
          {"t0", p.effective_t0()},
          {"axis", {{"theta", p.axis.theta}, {"phi", p.axis.phi},
                    {"direction", {dir[0], dir[1], dir[2]}}}},
          {"qdp_site", p.qdp_site},
          {"t_max_over_t0", p.grid.t_max_over_t0},
          {"samples_per_t0", p.grid.samples_per_t0}};
}

json fit_json(FitStatus status, const std::optional<SpeedFit>& fit) {
  json j = {{"status", std::string(to_string(status))}};
  if (fit) {
    j["slope"] = fit->slope;
    j["intercept"] = fit->intercept;
    j["speed"] = fit->speed();
    j["residual_rms"] = fit->residual_rms;
    j["slope_stderr"] = fit->slope_stderr;
    j["points"] = fit->points;
  }
  return j;
}

json table_json(const WaitingTimeTable& t) {
  json stars = json::array();
  for (const auto& s : t.t_star) stars.push_back(s ? json(*s) : json(nullptr));
  json j = fit_json(t.status, t.fit);
  j["epsilon"] = t.epsilon;
  j["resolution_over_t0"] = t.resolution_over_t0;
  j["fit_sites"] = {t.window.first, t.window.last(t.n_sites())};
  j["t_star_over_t0"] = stars;
  return j;
}

template <typename Writer>
void write_csv(const fs::path& path, Writer&& w) {
  std::ostringstream os;
  w(os);
  write_text_file(path, os.str());
}

void write_json(const fs::path& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

std::vector<int> sites_or_all(const std::vector<int>& sites, int n) {
  if (!sites.empty()) return sites;
  std::vector<int> all;
  for (int s = 1; s <= n; ++s) all.push_back(s);
  return all;
}

Series site_series(const DetectorTrace& tr, int n, DetectorKind kind,
                   const std::string& label) {
  const Eigen::VectorXd y = detector_series(tr, n, kind);
  return {label, tr.times_over_t0, {y.data(), y.data() + y.size()}};
}

// Runs one protocol and writes trace.csv, waiting_times.csv and summary.json.
RunResult simulate_to(const ProtocolSpec& p, double eps, FitWindow window,
                      const fs::path& out, json& summary) {
  check_epsilon(eps);
  RunResult r = run_pipeline(p, eps, window);
  const double drift = max_trace_drift(r.pair);
  if (drift > kTraceDriftTol) {
    throw InvariantViolation("trace", "trace drifted by " + format_double(drift));
  }
  write_csv(out / "trace.csv", [&](std::ostream& os) { write_trace_csv(os, r.trace); });
  write_csv(out / "waiting_times.csv",
            [&](std::ostream& os) { write_waiting_times_csv(os, r.table); });

  json max_d_bits = json::array();
  for (int n = 1; n <= r.trace.n_sites(); ++n) {
    max_d_bits.push_back(r.trace.D.col(n - 1).cwiseAbs().maxCoeff() / kLn2);
  }
  summary["parameters"] = spec_json(p);
  summary["fit"] = table_json(r.table);
  summary["max_trace_drift"] = drift;
  summary["max_abs_D_bits"] = max_d_bits;
  return r;
}

int cmd_simulate(const Options& o) {
  const ProtocolSpec p = protocol_from(o);
  const fs::path out = o.out;
  json summary = {{"command", "simulate"}};
  const RunResult r = simulate_to(p, o.epsilon, window_from(o), out, summary);
  write_json(out / "summary.json", summary);
  if (o.plot) {
    std::vector<Series> s;
    for (int n : sites_or_all({}, p.model.n_sites)) {
      s.push_back(site_series(r.trace, n, DetectorKind::F, "n=" + std::to_string(n)));
    }
    write_text_file(out / "plot.svg", svg_line_plot("F_n(t)", "t/t0", "F", s));
  }
  std::printf("status: %s\n", std::string(to_string(r.table.status)).c_str());
  if (r.table.fit) std::printf("speed: %s sites per t0\n", format_double(r.table.fit->speed()).c_str());
  return 0;
}

json sweep_json(const SweepResult& r) {
  json cells = json::array();
  for (const auto& c : r.cells) {
    json j = fit_json(c.status, c.fit);
    j["axis1"] = c.axis1;
    if (r.axis2) j["axis2"] = c.axis2;
    if (!c.error.empty()) j["error"] = c.error;
    cells.push_back(j);
  }
  json j = {{"axis1", r.axis1.name}, {"cells", cells}};
  if (r.axis2) j["axis2"] = r.axis2->name;
  return j;
}

std::string sweep_svg(const std::vector<std::pair<std::string, SweepResult>>& runs) {
  const SweepResult& first = runs.front().second;
  if (first.axis2) {
    std::vector<std::vector<double>> grid;
    for (std::size_t i = 0; i < first.axis1.values.size(); ++i) {
      std::vector<double> row;
      for (std::size_t j = 0; j < first.cols(); ++j) {
        row.push_back(first.at(i, j).speed().value_or(std::nan("")));
      }
      grid.push_back(row);
    }
    return svg_heatmap("v/v0", first.axis2->name, first.axis1.name,
                       first.axis2->values, first.axis1.values, grid);
  }
  std::vector<Series> s;
  for (const auto& [label, r] : runs) {
    Series ser{label, {}, {}};
    for (const auto& c : r.cells) {
      if (!c.speed()) continue;
      ser.x.push_back(c.axis1);
      ser.y.push_back(*c.speed());
    }
    s.push_back(ser);
  }
  return svg_line_plot("v/v0", first.axis1.name, "v/v0", s);
}

void write_sweep_outputs(const std::vector<std::pair<std::string, SweepResult>>& runs,
                         const fs::path& out, json& summary, bool plot) {
  json all = json::array();
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const auto& [state, r] = runs[k];
    const std::string suffix = runs.size() == 1 ? "" : "_" + std::to_string(k + 1);
    write_csv(out / ("sweep" + suffix + ".csv"),
              [&](std::ostream& os) { write_sweep_csv(os, r); });
    if (r.axis2) {
      write_csv(out / ("heatmap" + suffix + ".csv"),
                [&](std::ostream& os) { write_heatmap_csv(os, r); });
    }
    json j = sweep_json(r);
    j["state"] = state;
    j["file"] = "sweep" + suffix + ".csv";
    all.push_back(j);
  }
  summary["sweeps"] = all;
  if (plot) write_text_file(out / "plot.svg", sweep_svg(runs));
}

int cmd_sweep(const Options& o) {
  const ProtocolSpec p = protocol_from(o);
  check_epsilon(o.epsilon);
  if (o.axis1.empty()) throw ConfigError("axis1", "sweep needs --axis1");
  std::optional<SweepAxis> a2;
  if (!o.axis2.empty()) a2 = SweepAxis{o.axis2, o.values2};
  const SweepOptions opts{o.epsilon, window_from(o), worker_count(o)};
  const SweepResult r = sweep(p, {o.axis1, o.values1}, a2, opts);
  const fs::path out = o.out;
  json summary = {{"command", "sweep"}, {"parameters", spec_json(p)}};
  write_sweep_outputs({{p.initial.expr, r}}, out, summary, o.plot);
  write_json(out / "summary.json", summary);
  int ok = 0;
  for (const auto& c : r.cells) ok += c.status == FitStatus::Ok;
  std::printf("%d/%zu cells fitted\n", ok, r.cells.size());
  return 0;
}

int cmd_oracle_check(const Options& o) {
  ProtocolSpec p = protocol_from(o);
  if (p.model.model != ModelKind::TransverseXY) {
    throw ConfigError("model", "oracle-check compares the free-fermion route and needs txy");
  }
  if (p.model.boundary != Boundary::Open) {
    throw ConfigError("boundary", "oracle-check needs an open chain");
  }
  if (p.initial.expr != "vacuum" && p.initial.expr != "all-up") {
    throw ConfigError("state", "oracle-check starts from the vacuum");
  }
  if (p.qdp_site != 1 || p.axis.theta != 0.0) {
    throw ConfigError("axis", "oracle-check uses the z channel on site 1");
  }
  const auto ed = detector_trace(run_protocol(p));
  const auto ff = ff_protocol_F(p.model.n_sites, p.model.Jx, p.model.Jy,
                                p.model.h, p.effective_t0(), ed.times_over_t0);
  const double err = (ed.F - ff.F).cwiseAbs().maxCoeff();
  const fs::path out = o.out;
  write_json(out / "summary.json", {{"command", "oracle-check"},
                                    {"parameters", spec_json(p)},
                                    {"max_abs_F_ED_minus_F_ff", err},
                                    {"tolerance", kOracleTol}});
  std::printf("max |F_ED - F_ff| = %.3e\n", err);
  if (err > kOracleTol) {
    throw InvariantViolation("oracle", "free-fermion and exact F differ by " +
                                           format_double(err));
  }
  return 0;
}

int cmd_figure(const Options& o) {
  const FigurePreset f = figure_preset(o.figure);
  check_epsilon(o.epsilon);
  const fs::path out = o.out;
  const FitWindow window = window_from(o);
  json summary = {{"command", "figure"}, {"figure", f.id},
                  {"description", f.description}};
  std::string svg;

  switch (f.kind) {
    case FigureKind::Trace:
    case FigureKind::MultiTrace: {
      const RunResult r = simulate_to(f.spec, o.epsilon, window, out, summary);
      std::vector<Series> s;
      for (int n : sites_or_all(f.plot_sites, f.spec.model.n_sites)) {
        const std::string tag = "n=" + std::to_string(n);
        s.push_back(site_series(r.trace, n, DetectorKind::F, "F " + tag));
        if (f.kind == FigureKind::MultiTrace) {
          s.push_back(site_series(r.trace, n, DetectorKind::ReO, "Re O " + tag));
          s.push_back(site_series(r.trace, n, DetectorKind::D, "D " + tag));
        }
      }
      svg = svg_line_plot(f.description, "t/t0", "detector", s);
      break;
    }
    case FigureKind::Slopes: {
      const RunResult r = simulate_to(f.spec, o.epsilon, window, out, summary);
      const auto j0 = static_cast<Eigen::Index>(f.spec.grid.samples_per_t0);
      const double dt = f.spec.grid.spacing_over_t0();
      Series s{"t0 dF/dt", {}, {}};
      std::ostringstream os;
      os << "site,t0_dF_dt\n";
      for (int n = 2; n <= r.trace.n_sites(); ++n) {
        const double v = (r.trace.F(j0 + 1, n - 1) - r.trace.F(j0, n - 1)) / dt;
        os << n << ',' << format_double(v) << '\n';
        s.x.push_back(n);
        s.y.push_back(v);
      }
      write_text_file(out / "slopes.csv", os.str());
      svg = svg_line_plot(f.description, "n", "t0 dF/dt at t0+", {s});
      break;
    }
    case FigureKind::WaitingTimes: {
      std::ostringstream os;
      os << f.axis1->name << ",site,t_star_over_t0,detected\n";
      std::vector<Series> s;
      json per = json::array();
      for (double v : f.axis1->values) {
        ProtocolSpec p = f.spec;
        set_parameter(p, f.axis1->name, v);
        const RunResult r = run_pipeline(p, o.epsilon, window);
        Series ser{f.axis1->name + "=" + format_double(v), {}, {}};
        for (int n = 1; n <= r.table.n_sites(); ++n) {
          const auto& t = r.table.t_star[n - 1];
          os << format_double(v) << ',' << n << ','
             << (t ? format_double(*t) : "") << ',' << (t ? 1 : 0) << '\n';
          if (t) {
            ser.x.push_back(n);
            ser.y.push_back(*t);
          }
        }
        s.push_back(ser);
        json j = table_json(r.table);
        j[f.axis1->name] = v;
        per.push_back(j);
      }
      write_text_file(out / "waiting_times_by_axis.csv", os.str());
      summary["parameters"] = spec_json(f.spec);
      summary["runs"] = per;
      svg = svg_line_plot(f.description, "n", "t*/t0", s);
      break;
    }
    case FigureKind::Sweep1D:
    case FigureKind::Sweep2D: {
      const SweepOptions opts{o.epsilon, window, worker_count(o)};
      std::vector<std::string> states = f.states;
      if (states.empty()) states = {f.spec.initial.expr};
      std::vector<std::pair<std::string, SweepResult>> runs;
      for (const auto& st : states) {
        ProtocolSpec p = f.spec;
        p.initial.expr = st;
        runs.emplace_back(st, sweep(p, *f.axis1, f.axis2, opts));
      }
      summary["parameters"] = spec_json(f.spec);
      write_sweep_outputs(runs, out, summary, false);
      svg = sweep_svg(runs);
      break;
    }
  }
  write_json(out / "summary.json", summary);
  write_text_file(out / "plot.svg", svg);
  std::printf("%s: wrote %s\n", f.id.c_str(), out.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signal propagation after a local measurement on a spin chain"};
  // --h is the transverse field, so help is long-form only.
  app.set_help_flag("--help", "print help and exit");
  app.set_config("--config", "", "INI file with option values");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  add_protocol_options(app, o);

  auto* simulate = app.add_subcommand("simulate", "run one protocol");
  auto* sweep_cmd = app.add_subcommand("sweep", "fit speeds over parameter axes");
  sweep_cmd->add_option("--axis1", o.axis1, "parameter name (e.g. Jz/J, h/Jx)");
  sweep_cmd->add_option("--values1", o.values1, "comma-separated values")
      ->delimiter(',');
  sweep_cmd->add_option("--axis2", o.axis2, "second parameter name");
  sweep_cmd->add_option("--values2", o.values2, "comma-separated values")
      ->delimiter(',');
  auto* oracle = app.add_subcommand("oracle-check",
                                    "compare free-fermion and exact F (txy)");
  auto* figure = app.add_subcommand("figure", "run a built-in figure preset");
  figure->add_option("id", o.figure, "figure id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!o.out.empty()) fs::create_directories(o.out);
    if (simulate->parsed()) return cmd_simulate(o);
    if (sweep_cmd->parsed()) return cmd_sweep(o);
    if (oracle->parsed()) return cmd_oracle_check(o);
    if (figure->parsed()) return cmd_figure(o);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const InvariantViolation& e) {
    std::fprintf(stderr, "invariant violated: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
