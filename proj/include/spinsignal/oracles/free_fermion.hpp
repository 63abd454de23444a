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

// Jordan-Wigner free-fermion solver for the open transverse XY chain.
//
// Majoranas (1-based): a_{2l-1} = K_l sx_l, a_{2l} = K_l sy_l with the string
// K_l = prod_{m<l} sz_m. Then sz_l = -i a_{2l-1} a_{2l} and the Hamiltonian is
// H = (i/4) a^T A a with A real antisymmetric, so a(t) = exp(A t) a.
// Dirac fermions c_l = (a_{2l-1} + i a_{2l}) / 2 have n_l = (1 - sz_l) / 2.

#pragma once

#include "spinsignal/detectors.hpp"

#include <Eigen/Core>

#include <vector>

namespace spinsignal {

/// The 2N x 2N antisymmetric coupling matrix A (0-based storage).
Eigen::MatrixXd majorana_coupling(int n_sites, double Jx, double Jy, double h);

/// R(t) = exp(A t), computed from the eigendecomposition of the Hermitian
/// matrix iA. Real orthogonal.
class MajoranaPropagator {
 public:
  explicit MajoranaPropagator(const Eigen::MatrixXd& A);

  Eigen::MatrixXd at(double t) const;

 private:
  Eigen::VectorXd lambda_;
  Eigen::MatrixXcd vectors_;
};

/// Gaussian state described by M_pq = <a_p a_q>.
class FermionCovariance {
 public:
  explicit FermionCovariance(Eigen::MatrixXcd majorana_two_point);

  /// |0...0>, which is the fermion vacuum.
  static FermionCovariance vacuum(int n_sites);

  int n_sites() const { return static_cast<int>(m_.rows() / 2); }
  const Eigen::MatrixXcd& majorana() const { return m_; }

  /// State after Heisenberg evolution a -> R a.
  FermionCovariance evolved(const Eigen::MatrixXd& R) const;

  /// <c_i^dag c_j>
  Eigen::MatrixXcd normal() const;
  /// <c_i c_j>
  Eigen::MatrixXcd anomalous() const;

  /// <o_1 ... o_k> for o_i = sum_p ops[i](p) a_p, by Wick contraction.
  /// Odd k gives 0.
  Complex wick(const std::vector<Eigen::VectorXcd>& ops) const;

 private:
  Eigen::MatrixXcd m_;
};

/// Pfaffian of an even-dimensional antisymmetric matrix (Parlett-Reid
/// elimination with pivoting).
Complex pfaffian(Eigen::MatrixXcd a);

/// F_n on the time grid for psi0 = |0..0>, channel along z on site 1.
/// Only the F block of the returned trace is filled.
DetectorTrace ff_protocol_F(int n_sites, double Jx, double Jy, double h,
                            double t0, const std::vector<double>& times_over_t0);

/// Bogoliubov mode of the periodic transverse XY chain at momentum q.
/// eps = 2((Jx+Jy) cos q + h), Delta = 2(Jx-Jy) sin q,
/// omega = sqrt(eps^2 + Delta^2), u^2 = 1/2 + eps/(2 omega), v = sqrt(1-u^2).
struct BogoliubovMode {
  double q = 0.0;
  double u = 1.0;
  double v = 0.0;
  double omega = 0.0;
  double eps = 0.0;
  double delta = 0.0;
};

BogoliubovMode txy_dispersion(double q, double Jx, double Jy, double h);

/// BdG block in the (c_q, c_{-q}^dag) basis: [[eps, -i Delta], [i Delta, -eps]].
/// Its positive-energy eigenvector is (u, i sgn(Delta) v).
Eigen::Matrix2cd bdg_block(double q, double Jx, double Jy, double h);

/// Antiperiodic momenta pi (2m+1) / N, m = 0..N-1, wrapped into (-pi, pi].
std::vector<double> antiperiodic_momenta(int n_sites);

/// Even-parity spectrum of the periodic chain from quasiparticle sums,
/// -1/2 sum_q omega_q + sum_{q in S} omega_q over even-sized S, sorted.
std::vector<double> periodic_even_sector_spectrum(int n_sites, double Jx,
                                                  double Jy, double h);

}  // namespace spinsignal
