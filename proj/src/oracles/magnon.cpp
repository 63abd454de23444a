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

#include "spinsignal/oracles/magnon.hpp"

#include "spinsignal/errors.hpp"
#include "spinsignal/oracles/bessel.hpp"

#include <array>
#include <string>

namespace spinsignal {

namespace {

Complex i_power(int k) {
  static constexpr std::array<Complex, 4> cycle = {
      Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
  return cycle[((k % 4) + 4) % 4];
}

}  // namespace

Complex bessel_propagator(int x, int n, double tau) {
  return i_power(x - n) * bessel_j(x - n, tau);
}

double one_magnon_F(int n, double t, double t0, double J) {
  if (t < t0) {
    throw ConfigError("t", "one-magnon detector needs t >= t0, got t = " +
                               std::to_string(t));
  }
  const double tau = 4.0 * J * t;
  const double tau0 = 4.0 * J * t0;
  const double after = tau - tau0;

  // Coherent sums over the two source sites x = 1, 2. K is the part that sat
  // on site 1 at t0; H = G - K is the rest.
  Complex g = 0.0, k = 0.0;
  for (int x = 1; x <= 2; ++x) {
    g += bessel_propagator(x, n, tau);
    k += bessel_propagator(x, 1, tau0) * bessel_propagator(1, n, after);
  }
  const Complex h = g - k;
  return std::norm(g) - std::norm(h) - std::norm(k);
}

}  // namespace spinsignal
