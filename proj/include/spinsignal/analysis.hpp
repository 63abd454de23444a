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

// Waiting times, signal-speed fits and parameter sweeps.

#pragma once

#include "spinsignal/detectors.hpp"
#include "spinsignal/protocol.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinsignal {

inline constexpr double kDefaultEpsilon = 1e-5;

enum class DetectorKind { F, ReO, AbsO, D };

/// Series for one site of one detector.
Eigen::VectorXd detector_series(const DetectorTrace& trace, int n,
                                DetectorKind kind = DetectorKind::F);

/// First grid time (units of t0) with |series| > epsilon, or nullopt.
std::optional<double> waiting_time(const DetectorTrace& trace, int n,
                                   double epsilon = kDefaultEpsilon,
                                   DetectorKind kind = DetectorKind::F);

/// Sites first..(N - last_offset) enter the fit.
struct FitWindow {
  int first = 3;
  int last_offset = 2;

  int last(int n_sites) const { return n_sites - last_offset; }
};

/// Least-squares line t*/t0 = slope * n + intercept.
struct SpeedFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  double slope_stderr = 0.0;
  int points = 0;

  /// v / v0 = 1 / slope.
  double speed() const { return 1.0 / slope; }
};

enum class FitStatus {
  Ok,
  NoPropagation,
  InsufficientSites,
  NonPositiveSlope,
  Error
};

std::string_view to_string(FitStatus s);

struct WaitingTimeTable {
  double epsilon = kDefaultEpsilon;
  double resolution_over_t0 = 0.0;
  FitWindow window;
  /// Index n-1 holds site n; nullopt means never detected.
  std::vector<std::optional<double>> t_star;
  FitStatus status = FitStatus::InsufficientSites;
  std::optional<SpeedFit> fit;

  int n_sites() const { return static_cast<int>(t_star.size()); }
  std::optional<double> speed() const {
    return fit ? std::optional<double>(fit->speed()) : std::nullopt;
  }
};

WaitingTimeTable waiting_times(const DetectorTrace& trace,
                               double epsilon = kDefaultEpsilon,
                               FitWindow window = {},
                               DetectorKind kind = DetectorKind::F);

/// Fits detected sites in the table's window. Fills status and fit.
void fit_speed(WaitingTimeTable& table);

/// Plain least squares over (x, y); needs at least 3 points.
SpeedFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct OnsetSpread {
  /// (max t* - min t*) / grid spacing over detected sites.
  double spread_steps = 0.0;
  double min_over_t0 = 0.0;
  double max_over_t0 = 0.0;
  int detected = 0;
  std::vector<int> undetected;
};

OnsetSpread onset_simultaneity(const DetectorTrace& trace,
                               double epsilon = kDefaultEpsilon,
                               int first_site = 2,
                               DetectorKind kind = DetectorKind::F);

/// A sweep axis names a ModelSpec coupling (J, Jz, Jx, Jy, h, h_long,
/// delta), a ratio (Jz/J, Jy/Jx, h/Jx), or t0 / theta.
struct SweepAxis {
  std::string name;
  std::vector<double> values;
};

/// Sets one named parameter on a copy of the template. Ratios scale by the
/// current denominator.
void set_parameter(ProtocolSpec& spec, const std::string& name, double value);

struct SweepCell {
  double axis1 = 0.0;
  double axis2 = 0.0;
  FitStatus status = FitStatus::InsufficientSites;
  std::string error;  // non-empty when the cell's pipeline threw
  std::optional<SpeedFit> fit;

  std::optional<double> speed() const {
    return fit ? std::optional<double>(fit->speed()) : std::nullopt;
  }
};

struct SweepOptions {
  double epsilon = kDefaultEpsilon;
  FitWindow window;
  int workers = 1;
};

struct SweepResult {
  ProtocolSpec templ;
  SweepAxis axis1;
  std::optional<SweepAxis> axis2;
  /// Row-major: axis1 outer, axis2 inner.
  std::vector<SweepCell> cells;

  std::size_t cols() const { return axis2 ? axis2->values.size() : 1; }
  const SweepCell& at(std::size_t i, std::size_t j = 0) const {
    return cells[i * cols() + j];
  }
};

/// Runs build -> protocol -> trace -> waiting times -> fit per cell. Cell
/// failures are recorded, never thrown. Throws ConfigError for a bad axis.
SweepResult sweep(const ProtocolSpec& templ, SweepAxis axis1,
                  std::optional<SweepAxis> axis2 = std::nullopt,
                  SweepOptions options = {});

/// The full single-run pipeline.
struct RunResult {
  TrajectoryPair pair;
  DetectorTrace trace;
  WaitingTimeTable table;
};

RunResult run_pipeline(const ProtocolSpec& spec, double epsilon = kDefaultEpsilon,
                       FitWindow window = {});

}  // namespace spinsignal
