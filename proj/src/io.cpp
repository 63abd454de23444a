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

#include "spinsignal/io.hpp"

#include "spinsignal/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace spinsignal {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trace_csv(std::ostream& os, const DetectorTrace& trace) {
  os << "t_over_t0,site,F,O_re,O_im,D\n";
  for (std::size_t j = 0; j < trace.n_times(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    for (int n = 1; n <= trace.n_sites(); ++n) {
      const Complex o = trace.has_O() ? trace.O(jj, n - 1) : Complex(0.0);
      const double d = trace.has_D() ? trace.D(jj, n - 1) : 0.0;
      os << format_double(trace.times_over_t0[j]) << ',' << n << ','
         << format_double(trace.F(jj, n - 1)) << ',' << format_double(o.real())
         << ',' << format_double(o.imag()) << ',' << format_double(d) << '\n';
    }
  }
}

void write_waiting_times_csv(std::ostream& os, const WaitingTimeTable& table) {
  os << "site,t_star_over_t0,detected\n";
  for (int n = 1; n <= table.n_sites(); ++n) {
    const auto& t = table.t_star[n - 1];
    os << n << ',' << (t ? format_double(*t) : std::string()) << ','
       << (t ? 1 : 0) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << "axis1,axis2,speed,status\n";
  for (const auto& c : result.cells) {
    os << format_double(c.axis1) << ','
       << (result.axis2 ? format_double(c.axis2) : std::string()) << ','
       << (c.fit ? format_double(c.fit->speed()) : std::string()) << ','
       << to_string(c.status) << '\n';
  }
}

void write_heatmap_csv(std::ostream& os, const SweepResult& result) {
  os << result.axis1.name;
  if (result.axis2) {
    for (double v : result.axis2->values) os << ',' << format_double(v);
  } else {
    os << ",speed";
  }
  os << '\n';
  for (std::size_t i = 0; i < result.axis1.values.size(); ++i) {
    os << format_double(result.axis1.values[i]);
    for (std::size_t j = 0; j < result.cols(); ++j) {
      const auto& c = result.at(i, j);
      os << ',' << (c.fit ? format_double(c.fit->speed()) : std::string());
    }
    os << '\n';
  }
}

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 150, kTop = 40, kBottom = 50;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
    if (hi == lo) {
      const double pad = lo == 0.0 ? 1.0 : 0.05 * std::abs(lo);
      lo -= pad;
      hi += pad;
    }
  }
};

void frame(std::ostringstream& s, const std::string& title,
           const std::string& xlabel, const std::string& ylabel,
           const Range& xr, const Range& yr) {
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
    << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" "
    << "font-size=\"12\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" "
    << "font-size=\"14\">" << escape(title) << "</text>\n"
    << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
    << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double fx = kLeft + pw * k / 4.0;
    const double fy = kTop + ph - ph * k / 4.0;
    s << "<text x=\"" << fx << "\" y=\"" << kTop + ph + 16
      << "\" text-anchor=\"middle\">" << num(xr.lo + (xr.hi - xr.lo) * k / 4.0)
      << "</text>\n"
      << "<text x=\"" << kLeft - 6 << "\" y=\"" << fy + 4
      << "\" text-anchor=\"end\">" << num(yr.lo + (yr.hi - yr.lo) * k / 4.0)
      << "</text>\n";
  }
  s << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 10
    << "\" text-anchor=\"middle\">" << escape(xlabel) << "</text>\n"
    << "<text transform=\"translate(16," << kTop + ph / 2
    << ") rotate(-90)\" text-anchor=\"middle\">" << escape(ylabel)
    << "</text>\n";
}

const char* palette(std::size_t i) {
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                 "#bcbd22", "#17becf"};
  return colors[i % 10];
}

}  // namespace

std::string svg_line_plot(const std::string& title, const std::string& xlabel,
                          const std::string& ylabel,
                          const std::vector<Series>& series) {
  Range xr, yr;
  for (const auto& s : series) {
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  xr.finish();
  yr.finish();
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + pw * (v - xr.lo) / (xr.hi - xr.lo); };
  auto py = [&](double v) {
    return kTop + ph - ph * (v - yr.lo) / (yr.hi - yr.lo);
  };

  std::ostringstream s;
  frame(s, title, xlabel, ylabel, xr, yr);
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& ser = series[k];
    s << "<polyline fill=\"none\" stroke=\"" << palette(k)
      << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < std::min(ser.x.size(), ser.y.size()); ++i) {
      if (!std::isfinite(ser.x[i]) || !std::isfinite(ser.y[i])) continue;
      s << num(px(ser.x[i])) << ',' << num(py(ser.y[i])) << ' ';
    }
    s << "\"/>\n";
    const double ly = kTop + 14 + 16.0 * k;
    s << "<line x1=\"" << kWidth - kRight + 10 << "\" y1=\"" << ly - 4
      << "\" x2=\"" << kWidth - kRight + 30 << "\" y2=\"" << ly - 4
      << "\" stroke=\"" << palette(k) << "\" stroke-width=\"2\"/>\n"
      << "<text x=\"" << kWidth - kRight + 34 << "\" y=\"" << ly << "\">"
      << escape(ser.label) << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string svg_heatmap(const std::string& title, const std::string& xlabel,
                        const std::string& ylabel, const std::vector<double>& xs,
                        const std::vector<double>& ys,
                        const std::vector<std::vector<double>>& grid) {
  Range xr, yr, zr;
  for (double v : xs) xr.add(v);
  for (double v : ys) yr.add(v);
  for (const auto& row : grid) {
    for (double v : row) zr.add(v);
  }
  xr.finish();
  yr.finish();
  zr.finish();
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  const double cw = pw / std::max<std::size_t>(1, xs.size());
  const double ch = ph / std::max<std::size_t>(1, ys.size());

  std::ostringstream s;
  frame(s, title, xlabel, ylabel, xr, yr);
  for (std::size_t i = 0; i < ys.size() && i < grid.size(); ++i) {
    for (std::size_t j = 0; j < xs.size() && j < grid[i].size(); ++j) {
      const double v = grid[i][j];
      std::string fill = "#cccccc";
      if (std::isfinite(v)) {
        const double f = (v - zr.lo) / (zr.hi - zr.lo);
        const int r = static_cast<int>(255 * f);
        const int b = static_cast<int>(255 * (1.0 - f));
        char buf[16];
        std::snprintf(buf, sizeof buf, "#%02x40%02x", r, b);
        fill = buf;
      }
      s << "<rect x=\"" << num(kLeft + cw * j) << "\" y=\""
        << num(kTop + ph - ch * (i + 1)) << "\" width=\"" << num(cw)
        << "\" height=\"" << num(ch) << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  s << "<text x=\"" << kWidth - kRight + 10 << "\" y=\"" << kTop + 14
    << "\">max " << num(zr.hi) << "</text>\n"
    << "<text x=\"" << kWidth - kRight + 10 << "\" y=\"" << kTop + 30
    << "\">min " << num(zr.lo) << "</text>\n"
    << "</svg>\n";
  return s.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("output", "cannot write " + path.string());
  f << contents;
  if (!f) throw ConfigError("output", "write failed for " + path.string());
}

}  // namespace spinsignal
