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

// CSV tables and self-contained SVG plots.

#pragma once

#include "spinsignal/analysis.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace spinsignal {

/// 17 significant digits, so values round-trip exactly.
std::string format_double(double v);

/// Header t_over_t0,site,F,O_re,O_im,D. D is in nats; columns the trace does
/// not carry are written as 0.
void write_trace_csv(std::ostream& os, const DetectorTrace& trace);

/// Header site,t_star_over_t0,detected. Undetected sites leave the time
/// empty and write detected=0.
void write_waiting_times_csv(std::ostream& os, const WaitingTimeTable& table);

/// Long format axis1,axis2,speed,status. A 1D sweep leaves axis2 empty;
/// failed cells leave speed empty.
void write_sweep_csv(std::ostream& os, const SweepResult& result);

/// Wide grid: first column axis1 values, one column per axis2 value.
void write_heatmap_csv(std::ostream& os, const SweepResult& result);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

std::string svg_line_plot(const std::string& title, const std::string& xlabel,
                          const std::string& ylabel,
                          const std::vector<Series>& series);

/// grid[i][j] at (xs[j], ys[i]); NaN cells are drawn grey.
std::string svg_heatmap(const std::string& title, const std::string& xlabel,
                        const std::string& ylabel, const std::vector<double>& xs,
                        const std::vector<double>& ys,
                        const std::vector<std::vector<double>>& grid);

void write_text_file(const std::filesystem::path& path,
                     const std::string& contents);

}  // namespace spinsignal
