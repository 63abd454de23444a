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

#include "spinsignal/protocol.hpp"

#include <Eigen/Core>

#include <vector>

namespace spinsignal {

/// Detector values on a (time x site) grid. Column n-1 holds site n.
///   F = <sz>~ - <sz>,  O = <s+>~ - <s+>,  D = S(rho~_n) - S(rho_n) [nats]
struct DetectorTrace {
  double t0 = 0.0;
  std::vector<double> times_over_t0;
  Eigen::MatrixXd F;
  Eigen::MatrixXcd O;
  Eigen::MatrixXd D;

  int n_sites() const { return static_cast<int>(F.cols()); }
  std::size_t n_times() const { return times_over_t0.size(); }
  bool has_O() const { return O.size() > 0; }
  bool has_D() const { return D.size() > 0; }

  /// Column for 1-based site n; throws ConfigError when out of range.
  Eigen::VectorXd F_site(int n) const;
};

struct DetectorValues {
  double F = 0.0;
  Complex O = 0.0;
  double D = 0.0;
};

DetectorValues detectors_at(const BranchEnsemble& without,
                            const BranchEnsemble& with_qdp, int site);

DetectorTrace detector_trace(const TrajectoryPair& pair);

/// F_n at an arbitrary time t (absolute units), evaluated exactly rather
/// than looked up on a grid.
double detector_F_at(const ProtocolSpec& spec, const SpectralHamiltonian& h,
                     int n, double t);

}  // namespace spinsignal
