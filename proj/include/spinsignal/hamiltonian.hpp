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

#include "spinsignal/state.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <optional>
#include <string>
#include <string_view>

namespace spinsignal {

enum class ModelKind {
  IsingNN,          // J sum sx_i sx_{i+1}
  IsingLongRange,   // sum_{i<k} J/|i-k|^delta sx_i sx_k
  XXZ,              // J sum (sx sx + sy sy) + Jz sum sz sz
  TransverseXY,     // sum (Jx sx sx + Jy sy sy) + h sum sz
  TransverseXYLong  // transverse XY plus h' sum sx
};

enum class Boundary { Open, Periodic };

std::string_view to_string(ModelKind m);
std::string_view to_string(Boundary b);
ModelKind parse_model(std::string_view name);
Boundary parse_boundary(std::string_view name);

/// Model choice plus couplings. Only the couplings relevant to `model` are
/// read; the others keep their defaults.
struct ModelSpec {
  ModelKind model = ModelKind::IsingNN;
  int n_sites = 10;
  Boundary boundary = Boundary::Open;

  double J = 1.0;
  double delta = 1.0;
  double Jz = 0.0;
  double Jx = 1.0;
  double Jy = 0.0;
  double h = 0.0;
  double h_long = 0.0;

  /// Throws ConfigError naming the first bad field.
  void validate(int max_sites = kDefaultMaxSites) const;

  /// Energy scale that sets the default epoch t0 = 0.1 / |J_ref|: J for the
  /// Ising and XXZ models, Jx for the XY models.
  double reference_coupling() const;
};

/// Real symmetric Hamiltonian in the computational basis. Every model here
/// has real matrix elements (sy sy is real).
Eigen::SparseMatrix<double> sparse_hamiltonian(const ModelSpec& spec);

/// Hermitian operator with a cached eigendecomposition H = V diag(E) V^T.
class SpectralHamiltonian {
 public:
  /// Diagonalizes an explicit real symmetric matrix of dimension 2^n_sites.
  SpectralHamiltonian(int n_sites, Eigen::MatrixXd matrix);

  static SpectralHamiltonian build(const ModelSpec& spec,
                                   int max_sites = kDefaultMaxSites);

  int n_sites() const { return n_sites_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }

  /// max |H - H^T|
  double hermiticity_error() const;
  /// max |H V - V diag(E)|
  double eigen_residual() const;

 private:
  int n_sites_;
  Eigen::MatrixXd matrix_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

/// max |[H, O]| for O diagonal in the computational basis, given by its
/// diagonal as a function of the basis code.
template <typename DiagonalFn>
double commutator_with_diagonal(const Eigen::SparseMatrix<double>& h,
                                DiagonalFn&& diag) {
  double worst = 0.0;
  for (Eigen::Index col = 0; col < h.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(h, col); it; ++it) {
      const double d =
          it.value() * (diag(static_cast<std::uint64_t>(it.col())) -
                        diag(static_cast<std::uint64_t>(it.row())));
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

/// [H, (-1)^{magnon number}] vanishes within 1e-10.
bool conserves_parity(const ModelSpec& spec);

/// [H, sum_l sz_l] vanishes within 1e-10.
bool conserves_total_sz(const ModelSpec& spec);

/// Every nonzero element connects basis states of equal magnon number.
bool is_magnon_block_diagonal(const Eigen::SparseMatrix<double>& h);

}  // namespace spinsignal
