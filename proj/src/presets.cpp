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

#include "spinsignal/presets.hpp"

#include "spinsignal/errors.hpp"

#include <numbers>

namespace spinsignal {

namespace {

constexpr int kFigureSites = 10;

ProtocolSpec base(ModelKind model) {
  ProtocolSpec s;
  s.model.model = model;
  s.model.n_sites = kFigureSites;
  return s;
}

ProtocolSpec xxz(double J, double Jz, const char* state) {
  ProtocolSpec s = base(ModelKind::XXZ);
  s.model.J = J;
  s.model.Jz = Jz;
  s.initial.expr = state;
  return s;
}

ProtocolSpec txy(double Jx, double Jy, double h, const char* state) {
  ProtocolSpec s = base(ModelKind::TransverseXY);
  s.model.Jx = Jx;
  s.model.Jy = Jy;
  s.model.h = h;
  s.initial.expr = state;
  return s;
}

std::vector<double> range(double lo, double hi, double step) {
  std::vector<double> v;
  const int k = static_cast<int>(std::lround((hi - lo) / step));
  for (int i = 0; i <= k; ++i) v.push_back(lo + step * i);
  return v;
}

// Sweeps look further out in time: slow cells have t* beyond 20 t0.
constexpr double kSweepTMax = 60.0;

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {
      "fig2a", "fig2b", "fig2c", "fig2d", "fig3a", "fig3b", "fig3c",
      "fig3d", "fig4",  "fig5a", "fig5b", "fig5c", "fig5d", "fig6"};
  return ids;
}

FigurePreset figure_preset(std::string_view id) {
  FigurePreset p;
  p.id = std::string(id);

  if (id == "fig2a") {
    p.description = "nearest-neighbour Ising, J=1, vacuum: only site 2 responds";
    p.spec = base(ModelKind::IsingNN);
    p.plot_sites = {2, 3, 4};
  } else if (id == "fig2b" || id == "fig2c" || id == "fig2d") {
    p.spec = base(ModelKind::IsingLongRange);
    p.spec.model.delta = 1.0;
    if (id == "fig2c") {
      p.description =
          "long-range Ising, delta=1, (|10..0> + |0010..0>)/sqrt2: site 3 "
          "stays silent";
      p.spec.initial.expr = "[1] + [3]";
    } else if (id == "fig2b") {
      p.description = "long-range Ising, delta=1, vacuum: every site responds at t0";
    } else {
      p.description = "long-range Ising, delta=1: initial slope t0 dF/dt against n";
      p.kind = FigureKind::Slopes;
    }
  } else if (id == "fig3a") {
    p.description = "isotropic XXZ J=Jz=1, (|0..0> + |110..0>)/sqrt2";
    p.spec = xxz(1.0, 1.0, kEvenPairState);
    p.plot_sites = {2, 4, 6, 8};
  } else if (id == "fig3b") {
    p.description =
        "isotropic XXZ J=Jz=1, (|10..0> + |010..0>)/sqrt2, periodic chain";
    p.spec = xxz(1.0, 1.0, "[1] + [2]");
    p.spec.model.boundary = Boundary::Periodic;
    p.plot_sites = {2, 3, 4, 5, 6};
  } else if (id == "fig3c") {
    p.description = "XXZ waiting times t*/t0 against n for J in {0.5, 1, 2}";
    p.kind = FigureKind::WaitingTimes;
    p.spec = xxz(1.0, 1.0, kEvenPairState);
    p.axis1 = SweepAxis{"J", {0.5, 1.0, 2.0}};
  } else if (id == "fig3d") {
    p.description = "XXZ speed v/v0 against Jz/J";
    p.kind = FigureKind::Sweep1D;
    p.spec = xxz(1.0, 0.0, kEvenPairState);
    p.spec.grid.t_max_over_t0 = kSweepTMax;
    p.axis1 = SweepAxis{"Jz/J", range(-4.0, 4.0, 0.5)};
  } else if (id == "fig4") {
    p.description =
        "XXZ J=1, Jz=0.5, axis tilted by theta=pi/3 toward x: F, Re O, D";
    p.kind = FigureKind::MultiTrace;
    p.spec = xxz(1.0, 0.5, kEvenPairState);
    p.spec.axis = {std::numbers::pi / 3.0, 0.0};
    p.plot_sites = {2, 4, 8};
  } else if (id == "fig5a") {
    p.description = "transverse XY Jx=0.7, Jy=0.3, h=1, vacuum";
    p.spec = txy(0.7, 0.3, 1.0, "vacuum");
    p.plot_sites = {2, 4, 6, 8};
  } else if (id == "fig5b") {
    p.description = "transverse XY speed over Jy/Jx and h/Jx";
    p.kind = FigureKind::Sweep2D;
    p.spec = txy(1.0, 0.0, 0.0, kEvenPairState);
    p.spec.grid.t_max_over_t0 = kSweepTMax;
    p.axis1 = SweepAxis{"h/Jx", range(0.0, 2.0, 0.5)};
    p.axis2 = SweepAxis{"Jy/Jx", range(0.0, 1.0, 0.25)};
  } else if (id == "fig5c") {
    p.description =
        "transverse XY Jx=0.7, Jy=0.3, h=1, (|0..0> + |110..0>)/sqrt2";
    p.spec = txy(0.7, 0.3, 1.0, kEvenPairState);
    p.plot_sites = {2, 4, 6, 8};
  } else if (id == "fig5d") {
    p.description = "transverse XY, Jy=0: speed against h/Jx for two states";
    p.kind = FigureKind::Sweep1D;
    p.spec = txy(1.0, 0.0, 0.0, kEvenPairState);
    p.spec.grid.t_max_over_t0 = kSweepTMax;
    p.axis1 = SweepAxis{"h/Jx", {0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0,
                                 3.0, 4.0}};
    p.states = {kEvenPairState, "vacuum"};
  } else if (id == "fig6") {
    p.description =
        "XY with transverse h=1 and longitudinal h'=1 fields, Jx=0.7, Jy=0.3, "
        "vacuum";
    p.spec = txy(0.7, 0.3, 1.0, "vacuum");
    p.spec.model.model = ModelKind::TransverseXYLong;
    p.spec.model.h_long = 1.0;
    p.plot_sites = {2, 4, 6, 8};
  } else {
    std::string valid;
    for (const auto& v : figure_ids()) valid += (valid.empty() ? "" : ", ") + v;
    throw ConfigError("figure", "unknown figure id '" + std::string(id) +
                                    "'; valid ids: " + valid);
  }
  return p;
}

}  // namespace spinsignal
