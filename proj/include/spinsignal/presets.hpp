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

// Built-in run configurations for each reproduced figure panel.

#pragma once

#include "spinsignal/analysis.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinsignal {

enum class FigureKind {
  Trace,         // F_n(t) curves
  MultiTrace,    // F, Re O and D curves
  Slopes,        // t0 dF_n/dt at t0+ against n
  WaitingTimes,  // t*_n / t0 against n, one curve per axis value
  Sweep1D,       // v / v0 against one parameter, one curve per state
  Sweep2D        // v / v0 heatmap
};

struct FigurePreset {
  std::string id;
  std::string description;
  FigureKind kind = FigureKind::Trace;
  ProtocolSpec spec;
  std::optional<SweepAxis> axis1;
  std::optional<SweepAxis> axis2;
  /// Initial states compared in a Sweep1D panel; empty means spec.initial.
  std::vector<std::string> states;
  /// Sites drawn in trace panels; empty means all.
  std::vector<int> plot_sites;
};

const std::vector<std::string>& figure_ids();

/// Throws ConfigError("figure", ...) listing the valid ids.
FigurePreset figure_preset(std::string_view id);

/// Two-magnon superposition (|0..0> + |110..0>)/sqrt2.
inline constexpr const char* kEvenPairState = "[] + [1,2]";

}  // namespace spinsignal
