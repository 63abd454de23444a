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

// Exact spectral evolution, the single-site projective channel and the
// three-stage protocol (evolve to t0, measure one site, keep evolving).

#pragma once

#include "spinsignal/hamiltonian.hpp"
#include "spinsignal/state.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinsignal {

/// Uniform grid t/t0 = j / samples_per_t0, j = 0..t_max_over_t0*samples.
/// Integer sampling keeps t0 itself on the grid.
struct TimeGrid {
  double t_max_over_t0 = 20.0;
  int samples_per_t0 = 20;

  std::vector<double> over_t0() const;
  double spacing_over_t0() const { return 1.0 / samples_per_t0; }
  void validate() const;
};

/// Initial-state expression:
///   vacuum | all-down | ghz
///   [] + [1,2]        equal superposition of basis states by magnon sites
///   amplitudes: a0, a1, ...   explicit real amplitudes (normalized here)
struct InitialState {
  std::string expr = "vacuum";

  PureState build(int n_sites) const;
};

struct ProtocolSpec {
  ModelSpec model;
  InitialState initial;
  /// Unset means 0.1 / |reference coupling|.
  std::optional<double> t0;
  MeasurementAxis axis = MeasurementAxis::z();
  int qdp_site = 1;
  TimeGrid grid;

  double effective_t0() const;
  void validate(int max_sites = kDefaultMaxSites) const;
};

/// V e^{-i E dt} V^T psi. dt may be zero or negative.
StateVector evolve(const SpectralHamiltonian& h, const StateVector& psi,
                   double dt);
PureState evolve(const SpectralHamiltonian& h, const PureState& state,
                 double dt);

/// Column j holds psi evolved by times[j]; one GEMM pair for the batch.
Eigen::MatrixXcd evolve_batch(const SpectralHamiltonian& h,
                              const StateVector& psi,
                              const std::vector<double>& times);

/// Branches P_0 psi, P_1 psi with P_{0,1} = (1 +- sigma_site . n) / 2.
/// A branch annihilated by its projector is kept as a zero vector.
BranchEnsemble apply_channel(const PureState& state, int site,
                             const MeasurementAxis& axis);

/// sigma . n acting on one site.
StateVector apply_sigma_n(const StateVector& psi, int site,
                          const MeasurementAxis& axis);

/// Trajectories on the grid: without[:, j] = U(t_j) psi0; with_qdp[b][:, j]
/// equals without[:, j] for t_j < t0 and U(t_j - t0) P_b U(t0) psi0 after.
struct TrajectoryPair {
  int n_sites = 0;
  double t0 = 0.0;
  std::vector<double> times_over_t0;
  Eigen::MatrixXcd without_qdp;
  std::array<Eigen::MatrixXcd, 2> with_qdp;

  std::size_t size() const { return times_over_t0.size(); }
  BranchEnsemble without_at(std::size_t j) const;
  BranchEnsemble with_at(std::size_t j) const;
};

TrajectoryPair run_protocol(const ProtocolSpec& spec);
TrajectoryPair run_protocol(const ProtocolSpec& spec,
                            const SpectralHamiltonian& h);

/// Single-time version of run_protocol for an arbitrary t (units of t).
std::pair<BranchEnsemble, BranchEnsemble> protocol_at(
    const ProtocolSpec& spec, const SpectralHamiltonian& h, double t);

/// Largest |trace - 1| across both trajectories.
double max_trace_drift(const TrajectoryPair& pair);

}  // namespace spinsignal
