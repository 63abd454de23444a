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

#pragma once

namespace spinsignal {

/// <sz_n>(t) = prod_{k != n} cos(2 J t / |n-k|^delta) for the long-range
/// Ising chain started in |0..0>.
double longrange_ising_sz(int n, double t, int n_sites, double J,
                          double delta);

}  // namespace spinsignal
