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

#include "spinsignal/oracles/bessel.hpp"

#include <cmath>
#include <cstdlib>

namespace spinsignal {

double bessel_j(int order, double x) {
  // J_{-n}(x) = (-1)^n J_n(x) = J_n(-x)
  const bool odd = std::abs(order) & 1;
  double sign = 1.0;
  if (order < 0 && odd) sign = -sign;
  if (x < 0.0 && odd) sign = -sign;
  return sign * std::cyl_bessel_j(double(std::abs(order)), std::abs(x));
}

}  // namespace spinsignal
