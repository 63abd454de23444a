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

#include "reference.hpp"

#include "spinsignal/detectors.hpp"
#include "spinsignal/errors.hpp"
#include "spinsignal/oracles/bessel.hpp"
#include "spinsignal/oracles/ising.hpp"
#include "spinsignal/oracles/magnon.hpp"
#include "spinsignal/presets.hpp"

#include <doctest.h>

#include <cmath>

using namespace spinsignal;

TEST_SUITE("oracles") {

TEST_CASE("Bessel J against trapezoid integral and power series") {
  double worst_trap = 0.0, worst_series = 0.0;
  for (int n = -60; n <= 60; n += 3) {
    for (double x : {0.0, 0.3, 1.0, 2.0, 5.5, 10.0, 17.3, 30.0, 50.0}) {
      const double j = bessel_j(n, x);
      worst_trap = std::max(worst_trap, std::abs(j - testing::bessel_trapezoid(n, x)));
      if (x <= 10.0) {
        worst_series = std::max(worst_series, std::abs(j - testing::bessel_series(n, x)));
      }
    }
  }
  CHECK(worst_trap < 1e-12);
  CHECK(worst_series < 1e-12);
}

TEST_CASE("Bessel symmetry in order and argument") {
  for (int n = -5; n <= 5; ++n) {
    CHECK(bessel_j(n, -2.5) ==
          doctest::Approx(((n % 2) ? -1.0 : 1.0) * bessel_j(n, 2.5)));
    CHECK(bessel_j(-n, 3.1) ==
          doctest::Approx(((n % 2) ? -1.0 : 1.0) * bessel_j(n, 3.1)));
  }
}

TEST_CASE("propagator examples") {
  CHECK(bessel_propagator(4, 4, 0.0) == Complex(1.0));
  CHECK(bessel_propagator(1, 2, 0.0) == Complex(0.0));
  // i^{-2} J_{-2}(2) = -J_2(2)
  const Complex g = bessel_propagator(1, 3, 2.0);
  CHECK(g.real() == doctest::Approx(-testing::bessel_series(2, 2.0)).epsilon(1e-14));
  CHECK(std::abs(g.imag()) < 1e-16);
}

TEST_CASE("propagator unitarity over a wide window") {
  for (double tau : {0.5, 3.0, 12.0, 40.0}) {
    double s = 0.0;
    for (int n = -200; n <= 200; ++n) s += std::norm(bessel_propagator(0, n, tau));
    CHECK(std::abs(s - 1.0) < 1e-8);
  }
}

TEST_CASE("one-magnon F at the epoch") {
  CHECK(std::abs(one_magnon_F(5, 0.1, 0.1)) < 1e-15);
  for (int n = 3; n <= 12; ++n) CHECK(std::abs(one_magnon_F(n, 0.2, 0.2, 0.7)) < 1e-15);
  CHECK_THROWS_AS(one_magnon_F(3, 0.05, 0.1), ConfigError);
}

TEST_CASE("one-magnon F against a 200-site hopping chain") {
  const double J = 1.0, t0 = 0.1;
  const testing::MagnonChain chain(200, J);
  double worst = 0.0;
  // Front moves 2 sites per unit Bessel time; tau <= 16 stays far from the
  // chain ends.
  for (double r = 1.0; r <= 40.0; r += 0.35) {
    for (int n = -20; n <= 30; ++n) {
      worst = std::max(worst, std::abs(one_magnon_F(n, r * t0, t0, J) -
                                       chain.F(n, r * t0, t0)));
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("coherent and incoherent sums agree on the infinite chain") {
  for (double r : {1.5, 4.0, 9.0, 23.0}) {
    for (int n = -3; n <= 9; ++n) {
      const double t0 = 0.1, t = r * t0, tau = 4 * t, tau0 = 4 * t0;
      double inc = 0.0;
      for (int x = 1; x <= 2; ++x) {
        const Complex g = bessel_propagator(x, n, tau);
        const Complex k = bessel_propagator(x, 1, tau0) *
                          bessel_propagator(1, n, tau - tau0);
        inc += std::norm(g) - std::norm(g - k) - std::norm(k);
      }
      CHECK(std::abs(one_magnon_F(n, t, t0) - inc) < 1e-12);
    }
  }
}

TEST_CASE("one-magnon light cone with a two-site margin") {
  const double t0 = 0.1;
  double worst = 0.0;
  for (double r = 1.0; r <= 30.0; r += 0.05) {
    const double reach = 2.0 + 2.0 * 4.0 * (r - 1.0) * t0;
    for (int n = static_cast<int>(std::floor(reach)) + 3; n <= 80; ++n) {
      worst = std::max(worst, std::abs(one_magnon_F(n, r * t0, t0)));
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("long-range Ising magnetization examples") {
  CHECK(longrange_ising_sz(3, 0.0, 10, 1.0, 1.0) == 1.0);
  CHECK(longrange_ising_sz(1, 0.37, 2, 1.2, 1.0) ==
        doctest::Approx(std::cos(2 * 1.2 * 0.37)));
}

TEST_CASE("long-range Ising magnetization matches exact evolution") {
  const auto spec = figure_preset("fig2b").spec;
  const auto pair = run_protocol(spec);
  double worst = 0.0;
  for (std::size_t j = 0; j < pair.size(); ++j) {
    const double t = pair.times_over_t0[j] * pair.t0;
    for (int n = 1; n <= 10; ++n) {
      worst = std::max(worst,
                       std::abs(expectation_sigma_z(pair.without_at(j), n) -
                                longrange_ising_sz(n, t, 10, 1.0, 1.0)));
    }
  }
  CHECK(worst < 1e-10);
}

}  // TEST_SUITE

TEST_SUITE("light_cone") {

// The cone n > 2 + 2 (tau - tau0) exactly as stated. Just after t0 the
// response of the nearest sites grows as a power of (tau - tau0), so sites
// right outside the cone still exceed 1e-6 (about 1e-3 at site 3 near
// t = 2.2 t0).
TEST_CASE("one-magnon light cone at the stated speed") {
  const double t0 = 0.1;
  double worst = 0.0;
  for (double r = 1.0; r <= 30.0; r += 0.05) {
    const double reach = 2.0 + 2.0 * 4.0 * (r - 1.0) * t0;
    for (int n = static_cast<int>(std::floor(reach)) + 1; n <= 80; ++n) {
      worst = std::max(worst, std::abs(one_magnon_F(n, r * t0, t0)));
    }
  }
  CHECK(worst < 1e-6);
}

}  // TEST_SUITE
