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

#include "spinsignal/detectors.hpp"

#include "spinsignal/errors.hpp"

namespace spinsignal {

Eigen::VectorXd DetectorTrace::F_site(int n) const {
  if (n < 1 || n > n_sites()) {
    throw ConfigError("site", "site " + std::to_string(n) + " outside 1.." +
                                  std::to_string(n_sites()));
  }
  return F.col(n - 1);
}

DetectorValues detectors_at(const BranchEnsemble& without,
                            const BranchEnsemble& with_qdp, int site) {
  const QubitReducedDM a = reduced_qubit_dm(without, site);
  const QubitReducedDM b = reduced_qubit_dm(with_qdp, site);
  return {(b.m00 - b.m11) - (a.m00 - a.m11), b.m01 - a.m01,
          von_neumann_entropy(b) - von_neumann_entropy(a)};
}

DetectorTrace detector_trace(const TrajectoryPair& pair) {
  const int n = pair.n_sites;
  const auto m = static_cast<Eigen::Index>(pair.size());
  DetectorTrace tr;
  tr.t0 = pair.t0;
  tr.times_over_t0 = pair.times_over_t0;
  tr.F = Eigen::MatrixXd::Zero(m, n);
  tr.O = Eigen::MatrixXcd::Zero(m, n);
  tr.D = Eigen::MatrixXd::Zero(m, n);

  for (Eigen::Index j = 0; j < m; ++j) {
    // Before the epoch both trajectories hold the same vector; skip the
    // arithmetic so the zeros are exact.
    if (pair.times_over_t0[j] < 1.0) continue;
    const BranchEnsemble without(n, {pair.without_qdp.col(j)});
    const BranchEnsemble with_qdp(
        n, {pair.with_qdp[0].col(j), pair.with_qdp[1].col(j)});
    for (int site = 1; site <= n; ++site) {
      const DetectorValues d = detectors_at(without, with_qdp, site);
      tr.F(j, site - 1) = d.F;
      tr.O(j, site - 1) = d.O;
      tr.D(j, site - 1) = d.D;
    }
  }
  return tr;
}

double detector_F_at(const ProtocolSpec& spec, const SpectralHamiltonian& h,
                     int n, double t) {
  const auto [without, with_qdp] = protocol_at(spec, h, t);
  const QubitReducedDM a = reduced_qubit_dm(without, n);
  const QubitReducedDM b = reduced_qubit_dm(with_qdp, n);
  return (b.m00 - b.m11) - (a.m00 - a.m11);
}

}  // namespace spinsignal
