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

// Single-magnon propagation on the infinite XXZ chain. One flipped spin hops
// with amplitude 2J, so amplitudes are Bessel functions of tau = 4 J t.

#pragma once

#include "spinsignal/state.hpp"

namespace spinsignal {

/// G_x^n(tau) = i^{x-n} J_{x-n}(tau): amplitude to go from site x to site n
/// in Bessel time tau.
Complex bessel_propagator(int x, int n, double tau);

/// F_n(t) for psi0 = (|10..0> + |010..0>)/sqrt2, channel along z on site 1
/// at t0. Times are absolute; J sets tau = 4 J t. Throws ConfigError for
/// t < t0.
double one_magnon_F(int n, double t, double t0, double J = 1.0);

}  // namespace spinsignal
