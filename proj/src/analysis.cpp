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

#include "spinsignal/analysis.hpp"

#include "spinsignal/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace spinsignal {

Eigen::VectorXd detector_series(const DetectorTrace& trace, int n,
                                DetectorKind kind) {
  if (n < 1 || n > trace.n_sites()) {
    throw ConfigError("site", "site " + std::to_string(n) + " outside 1.." +
                                  std::to_string(trace.n_sites()));
  }
  switch (kind) {
    case DetectorKind::F: return trace.F.col(n - 1);
    case DetectorKind::ReO:
      if (!trace.has_O()) break;
      return trace.O.col(n - 1).real();
    case DetectorKind::AbsO:
      if (!trace.has_O()) break;
      return trace.O.col(n - 1).cwiseAbs();
    case DetectorKind::D:
      if (!trace.has_D()) break;
      return trace.D.col(n - 1);
  }
  throw ConfigError("detector", "trace does not carry this detector");
}

std::optional<double> waiting_time(const DetectorTrace& trace, int n,
                                   double epsilon, DetectorKind kind) {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon", "must be positive");
  const Eigen::VectorXd s = detector_series(trace, n, kind);
  for (Eigen::Index j = 0; j < s.size(); ++j) {
    if (std::abs(s(j)) > epsilon) return trace.times_over_t0[j];
  }
  return std::nullopt;
}

std::string_view to_string(FitStatus s) {
  switch (s) {
    case FitStatus::Ok: return "ok";
    case FitStatus::NoPropagation: return "no propagation";
    case FitStatus::InsufficientSites: return "insufficient sites";
    case FitStatus::NonPositiveSlope: return "non-positive slope";
    case FitStatus::Error: return "error";
  }
  return "?";
}

SpeedFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t k = x.size();
  if (k < 3 || y.size() != k) {
    throw ConfigError("fit", "need at least 3 points");
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  SpeedFit f;
  f.points = static_cast<int>(k);
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double r = y[i] - (f.slope * x[i] + f.intercept);
    ssr += r * r;
  }
  f.residual_rms = std::sqrt(ssr / k);
  f.slope_stderr = std::sqrt(ssr / double(k - 2) / sxx);
  return f;
}

WaitingTimeTable waiting_times(const DetectorTrace& trace, double epsilon,
                               FitWindow window, DetectorKind kind) {
  WaitingTimeTable t;
  t.epsilon = epsilon;
  t.window = window;
  if (trace.n_times() > 1) {
    t.resolution_over_t0 = trace.times_over_t0[1] - trace.times_over_t0[0];
  }
  for (int n = 1; n <= trace.n_sites(); ++n) {
    t.t_star.push_back(waiting_time(trace, n, epsilon, kind));
  }
  fit_speed(t);
  return t;
}

void fit_speed(WaitingTimeTable& table) {
  std::vector<double> x, y;
  const int lo = std::max(1, table.window.first);
  const int hi = std::min(table.n_sites(), table.window.last(table.n_sites()));
  for (int n = lo; n <= hi; ++n) {
    if (table.t_star[n - 1]) {
      x.push_back(n);
      y.push_back(*table.t_star[n - 1]);
    }
  }
  table.fit.reset();
  if (x.empty()) {
    table.status = FitStatus::NoPropagation;
    return;
  }
  if (x.size() < 3) {
    table.status = FitStatus::InsufficientSites;
    return;
  }
  const SpeedFit f = fit_line(x, y);
  if (!(f.slope > 0.0)) {
    table.status = FitStatus::NonPositiveSlope;
    return;
  }
  table.status = FitStatus::Ok;
  table.fit = f;
}

OnsetSpread onset_simultaneity(const DetectorTrace& trace, double epsilon,
                               int first_site, DetectorKind kind) {
  OnsetSpread s;
  double lo = 0.0, hi = 0.0;
  for (int n = std::max(1, first_site); n <= trace.n_sites(); ++n) {
    const auto t = waiting_time(trace, n, epsilon, kind);
    if (!t) {
      s.undetected.push_back(n);
      continue;
    }
    if (s.detected == 0) {
      lo = hi = *t;
    } else {
      lo = std::min(lo, *t);
      hi = std::max(hi, *t);
    }
    ++s.detected;
  }
  s.min_over_t0 = lo;
  s.max_over_t0 = hi;
  const double step = trace.n_times() > 1
                          ? trace.times_over_t0[1] - trace.times_over_t0[0]
                          : 1.0;
  s.spread_steps = (hi - lo) / step;
  return s;
}

void set_parameter(ProtocolSpec& spec, const std::string& name, double value) {
  ModelSpec& m = spec.model;
  if (name == "J") m.J = value;
  else if (name == "Jz") m.Jz = value;
  else if (name == "Jx") m.Jx = value;
  else if (name == "Jy") m.Jy = value;
  else if (name == "h") m.h = value;
  else if (name == "h_long") m.h_long = value;
  else if (name == "delta") m.delta = value;
  else if (name == "Jz/J") m.Jz = value * m.J;
  else if (name == "Jy/Jx") m.Jy = value * m.Jx;
  else if (name == "h/Jx") m.h = value * m.Jx;
  else if (name == "t0") spec.t0 = value;
  else if (name == "theta") spec.axis.theta = value;
  else throw ConfigError("axis", "unknown sweep parameter '" + name + "'");
}

RunResult run_pipeline(const ProtocolSpec& spec, double epsilon,
                       FitWindow window) {
  RunResult r;
  r.pair = run_protocol(spec);
  r.trace = detector_trace(r.pair);
  r.table = waiting_times(r.trace, epsilon, window);
  return r;
}

namespace {

void check_axis(const SweepAxis& a) {
  if (a.values.empty()) throw ConfigError("axis", a.name + " has no values");
  for (std::size_t i = 1; i < a.values.size(); ++i) {
    if (!(a.values[i] > a.values[i - 1])) {
      throw ConfigError("axis", a.name + " values must increase");
    }
  }
  ProtocolSpec probe;
  set_parameter(probe, a.name, a.values.front());
}

}  // namespace

SweepResult sweep(const ProtocolSpec& templ, SweepAxis axis1,
                  std::optional<SweepAxis> axis2, SweepOptions options) {
  check_axis(axis1);
  if (axis2) check_axis(*axis2);

  SweepResult out;
  out.templ = templ;
  out.axis1 = std::move(axis1);
  out.axis2 = std::move(axis2);
  const std::size_t rows = out.axis1.values.size();
  const std::size_t cols = out.cols();
  out.cells.resize(rows * cols);

  auto run_cell = [&](std::size_t idx) {
    SweepCell& cell = out.cells[idx];
    const std::size_t i = idx / cols, j = idx % cols;
    ProtocolSpec spec = templ;
    cell.axis1 = out.axis1.values[i];
    set_parameter(spec, out.axis1.name, cell.axis1);
    if (out.axis2) {
      cell.axis2 = out.axis2->values[j];
      set_parameter(spec, out.axis2->name, cell.axis2);
    }
    try {
      const RunResult r = run_pipeline(spec, options.epsilon, options.window);
      cell.status = r.table.status;
      cell.fit = r.table.fit;
    } catch (const std::exception& e) {
      cell.status = FitStatus::Error;
      cell.error = e.what();
    }
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    for (std::size_t idx = 0; idx < out.cells.size(); ++idx) run_cell(idx);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t idx = next++; idx < out.cells.size(); idx = next++) {
        run_cell(idx);
      }
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace spinsignal
