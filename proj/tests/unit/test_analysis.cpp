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
#include "spinsignal/presets.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>

using namespace spinsignal;

namespace {

DetectorTrace synthetic(int n_sites, double spacing, double t_max,
                        const std::function<double(int, double)>& f) {
  DetectorTrace tr;
  tr.t0 = 1.0;
  for (double t = 0.0; t <= t_max + 1e-12; t += spacing) tr.times_over_t0.push_back(t);
  tr.F.resize(static_cast<Eigen::Index>(tr.times_over_t0.size()), n_sites);
  for (std::size_t j = 0; j < tr.times_over_t0.size(); ++j) {
    for (int n = 1; n <= n_sites; ++n) tr.F(j, n - 1) = f(n, tr.times_over_t0[j]);
  }
  return tr;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("waiting time is the first grid point past the threshold") {
  const auto tr = synthetic(3, 0.1, 5.0, [](int, double t) {
    return t < 2.0 - 1e-9 ? 0.0 : 1e-3;
  });
  const auto t = waiting_time(tr, 2);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(2.0));
  CHECK_FALSE(waiting_time(tr, 2, 1e-2).has_value());
  CHECK_THROWS_AS(waiting_time(tr, 4), ConfigError);
  CHECK_THROWS_AS(waiting_time(tr, 1, 0.0), ConfigError);
}

TEST_CASE("exact synthetic line gives the exact speed") {
  const auto tr = synthetic(10, 0.5, 30.0, [](int n, double t) {
    return t >= 2.0 * n - 1e-9 ? 1.0 : 0.0;
  });
  const auto table = waiting_times(tr);
  REQUIRE(table.status == FitStatus::Ok);
  CHECK(table.fit->slope == doctest::Approx(2.0));
  CHECK(table.fit->speed() == doctest::Approx(0.5));
  CHECK(table.fit->residual_rms < 1e-12);
  CHECK(table.fit->points == 6);  // sites 3..8
}

TEST_CASE("fit failure modes") {
  auto tr = synthetic(10, 0.5, 10.0, [](int, double) { return 0.0; });
  CHECK(waiting_times(tr).status == FitStatus::NoPropagation);

  tr = synthetic(10, 0.5, 10.0, [](int n, double) { return n <= 4 ? 1.0 : 0.0; });
  const auto t = waiting_times(tr);
  CHECK(t.status == FitStatus::InsufficientSites);
  CHECK_FALSE(t.speed().has_value());
  CHECK_FALSE(t.t_star[6].has_value());

  tr = synthetic(10, 0.5, 10.0, [](int, double) { return 1.0; });
  CHECK(waiting_times(tr).status == FitStatus::NonPositiveSlope);
}

TEST_CASE("nearest-neighbour Ising never reaches site 4") {
  const auto tr = detector_trace(run_protocol(figure_preset("fig2a").spec));
  CHECK_FALSE(waiting_time(tr, 4).has_value());
  CHECK(waiting_time(tr, 2).has_value());
}

TEST_CASE("XXZ waiting times increase with distance") {
  const auto r = run_pipeline(figure_preset("fig3a").spec);
  for (int n = 3; n < 8; ++n) {
    REQUIRE(r.table.t_star[n - 1].has_value());
    REQUIRE(r.table.t_star[n].has_value());
    CHECK(*r.table.t_star[n] > *r.table.t_star[n - 1]);
  }
  REQUIRE(r.table.status == FitStatus::Ok);
  CHECK(r.table.fit->residual_rms < 0.5 * r.table.fit->slope);
}

TEST_CASE("raising epsilon never brings a detection earlier") {
  const auto tr = detector_trace(run_protocol(figure_preset("fig5c").spec));
  for (int n = 2; n <= 10; ++n) {
    std::optional<double> prev;
    for (double eps : {1e-9, 1e-7, 1e-5, 1e-3, 1e-2}) {
      const auto t = waiting_time(tr, n, eps);
      if (!t) break;
      if (prev) CHECK(*t >= *prev);
      prev = t;
    }
  }
}

TEST_CASE("fit window: dropping the last site changes v by under 5%") {
  ProtocolSpec p = figure_preset("fig3a").spec;
  p.model.n_sites = 12;
  p.grid.t_max_over_t0 = 40.0;
  const auto tr = detector_trace(run_protocol(p));
  const auto full = waiting_times(tr, kDefaultEpsilon, {3, 2});
  const auto trimmed = waiting_times(tr, kDefaultEpsilon, {3, 3});
  REQUIRE(full.status == FitStatus::Ok);
  REQUIRE(trimmed.status == FitStatus::Ok);
  const double rel = std::abs(full.fit->speed() - trimmed.fit->speed()) /
                     full.fit->speed();
  CHECK(rel < 0.05);
}

TEST_CASE("onset spread: instantaneous long-range, spread-out XXZ") {
  const auto lr = detector_trace(run_protocol(figure_preset("fig2b").spec));
  const auto s = onset_simultaneity(lr);
  CHECK(s.detected == 9);
  CHECK(s.spread_steps <= 1.0);

  double prev = -1.0;
  for (int n : {8, 10}) {
    ProtocolSpec p = figure_preset("fig3a").spec;
    p.model.n_sites = n;
    const auto sp = onset_simultaneity(detector_trace(run_protocol(p)));
    CHECK(sp.spread_steps > 10.0);
    CHECK(sp.spread_steps > prev);
    prev = sp.spread_steps;
  }
}

TEST_CASE("sweep records per-cell status and is deterministic") {
  ProtocolSpec p = figure_preset("fig3a").spec;
  p.model.n_sites = 8;
  const SweepAxis axis{"Jz/J", {-1.0, 0.0, 1.0}};
  SweepOptions serial;
  SweepOptions parallel;
  parallel.workers = 3;
  const auto a = sweep(p, axis, std::nullopt, serial);
  const auto b = sweep(p, axis, std::nullopt, parallel);
  REQUIRE(a.cells.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a.cells[i].status == b.cells[i].status);
    REQUIRE(a.cells[i].fit.has_value());
    CHECK(a.cells[i].fit->slope == b.cells[i].fit->slope);
    CHECK(a.cells[i].fit->residual_rms == b.cells[i].fit->residual_rms);
  }
  CHECK(a.at(1).axis1 == 0.0);
}

TEST_CASE("sweep never throws for a failing cell") {
  ProtocolSpec p;
  p.model.model = ModelKind::IsingNN;
  p.model.n_sites = 6;
  const auto r = sweep(p, {"J", {0.0, 1.0}});
  CHECK(r.cells[0].status == FitStatus::Error);  // J = 0 leaves t0 undefined
  CHECK_FALSE(r.cells[0].error.empty());
  CHECK(r.cells[1].status == FitStatus::NoPropagation);
}

TEST_CASE("sweep axis validation") {
  ProtocolSpec p;
  CHECK_THROWS_AS(sweep(p, {"Jq", {1.0}}), ConfigError);
  CHECK_THROWS_AS(sweep(p, {"J", {}}), ConfigError);
  CHECK_THROWS_AS(sweep(p, {"J", {1.0, 0.5}}), ConfigError);
}

TEST_CASE("ratio parameters scale by the denominator") {
  ProtocolSpec p;
  p.model.J = 2.0;
  p.model.Jx = 0.5;
  set_parameter(p, "Jz/J", -1.5);
  set_parameter(p, "Jy/Jx", 0.5);
  set_parameter(p, "h/Jx", 4.0);
  CHECK(p.model.Jz == -3.0);
  CHECK(p.model.Jy == 0.25);
  CHECK(p.model.h == 2.0);
}

TEST_CASE("line fit standard error") {
  const auto f = fit_line({1, 2, 3, 4}, {1.0, 2.1, 2.9, 4.0});
  CHECK(f.slope == doctest::Approx(0.98));
  CHECK(f.slope_stderr > 0.0);
  CHECK_THROWS_AS(fit_line({1, 2}, {1, 2}), ConfigError);
}

}  // TEST_SUITE
