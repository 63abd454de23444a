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

// Independent reference implementations used only by tests. None of these
// share code paths with the library routes they check.

#pragma once

#include "spinsignal/hamiltonian.hpp"
#include "spinsignal/state.hpp"

#include <Eigen/Core>

#include <vector>

namespace spinsignal::testing {

// --- Dense Pauli algebra --------------------------------------------------

/// Single-site operator o on `site` of an N-site chain, built by Kronecker
/// products with site 1 as the rightmost factor.
Eigen::MatrixXcd site_operator(int n_sites, int site, const Eigen::Matrix2cd& o);

Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();

/// Hamiltonian assembled from Pauli products.
Eigen::MatrixXcd kron_hamiltonian(const ModelSpec& spec);

/// exp(-i H t) by Eigen's matrix exponential.
Eigen::MatrixXcd dense_propagator(const Eigen::MatrixXcd& h, double t);

struct DenseDetectors {
  double F = 0.0;
  Complex O = 0.0;
  double D = 0.0;
};

/// Full protocol with explicit 2^N x 2^N density matrices. Returns detectors
/// for every site at absolute time t.
std::vector<DenseDetectors> density_matrix_protocol(
    const ModelSpec& spec, const StateVector& psi0, double t0, double t,
    const MeasurementAxis& axis, int qdp_site = 1);

// --- One-magnon tight-binding chain ---------------------------------------

/// A long open chain with hopping 2J and the physical sites 1, 2, ... placed
/// at its middle. Exact evolution from a dense eigendecomposition.
class MagnonChain {
 public:
  MagnonChain(int length, double J);

  /// F_n(t) for the (|1> + |2>)/sqrt2 magnon state, z channel on site 1.
  double F(int n, double t, double t0) const;

 private:
  Eigen::VectorXcd evolve(const Eigen::VectorXcd& psi, double t) const;
  int index(int site) const { return origin_ + site - 1; }

  int origin_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd vectors_;
};

// --- Bessel references ----------------------------------------------------

/// (1/2pi) integral over a full period of cos(n tau - x sin tau), trapezoid.
double bessel_trapezoid(int n, double x, int points = 1024);

/// Power series in long double; accurate for moderate x.
double bessel_series(int n, double x);

// --- Majorana operators as explicit matrices ------------------------------

/// a_p (1-based) = K_l sx_l or K_l sy_l as a dense 2^N matrix.
Eigen::MatrixXcd majorana_matrix(int n_sites, int p);

}  // namespace spinsignal::testing
