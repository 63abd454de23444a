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

// Basis conventions, pure states, two-branch mixed states and single-site
// marginals.
//
// Sites are numbered 1..N. Bit (i-1) of a basis code holds site i, so site 1
// is the least significant bit. Bit value 0 is |0> (sigma^z = +1, spin up),
// bit value 1 is |1> (sigma^z = -1, a magnon).
//
// sigma^+ = |1><0| creates a magnon. With this choice <sigma^+> is exactly the
// (0,1) element of the single-site reduced density matrix.

#pragma once

#include <Eigen/Core>

#include <array>
#include <bit>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <span>
#include <vector>

namespace spinsignal {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;

/// Amplitudes with modulus below this count as zero for parity
/// classification.
inline constexpr double kAmplitudeZero = 1e-12;

/// Largest supported chain length by default (dense 2^N eigensolve).
inline constexpr int kDefaultMaxSites = 14;

struct BasisIndex {
  std::uint64_t code = 0;

  int magnons() const { return std::popcount(code); }
  int parity() const { return magnons() & 1; }
  bool is_down(int site) const { return (code >> (site - 1)) & 1U; }

  /// Basis state with magnons at the given 1-based sites.
  static BasisIndex with_magnons(std::span<const int> sites);
};

inline constexpr std::uint64_t site_mask(int site) {
  return std::uint64_t{1} << (site - 1);
}

inline constexpr std::size_t hilbert_dim(int n_sites) {
  return std::size_t{1} << n_sites;
}

class PureState {
 public:
  /// Takes ownership of `amplitudes`; its length must be 2^n_sites. No
  /// normalization is applied.
  PureState(int n_sites, StateVector amplitudes);

  /// The basis state with magnons at `down_sites`.
  static PureState basis(int n_sites, std::span<const int> down_sites);
  static PureState basis(int n_sites, std::initializer_list<int> down_sites);

  /// Equal-weight normalized superposition of basis states, each given by
  /// its magnon sites.
  static PureState superposition(int n_sites,
                                 const std::vector<std::vector<int>>& terms);

  int n_sites() const { return n_sites_; }
  const StateVector& amplitudes() const { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

 private:
  int n_sites_;
  StateVector amplitudes_;
};

enum class MagnonParity { EvenOnly, OddOnly, Mixed };

const char* to_string(MagnonParity p);

MagnonParity magnon_parity(const PureState& state);

/// rho = sum_b |b><b| over unnormalized branches. Never materializes the
/// 2^N x 2^N density matrix.
class BranchEnsemble {
 public:
  BranchEnsemble(int n_sites, std::vector<StateVector> branches);

  static BranchEnsemble pure(const PureState& state);

  int n_sites() const { return n_sites_; }
  const std::vector<StateVector>& branches() const { return branches_; }
  std::size_t size() const { return branches_.size(); }

  double trace() const;

 private:
  int n_sites_;
  std::vector<StateVector> branches_;
};

/// Single-site density matrix in the sigma^z basis; m10 = conj(m01).
struct QubitReducedDM {
  double m00 = 1.0;
  double m11 = 0.0;
  Complex m01 = 0.0;

  /// Ascending eigenvalues of the 2x2 matrix.
  std::array<double, 2> eigenvalues() const;
};

/// Axis n = (sin(theta) cos(phi), sin(theta) sin(phi), cos(theta)).
struct MeasurementAxis {
  double theta = 0.0;
  double phi = 0.0;

  std::array<double, 3> direction() const;

  static MeasurementAxis z() { return {}; }
  static MeasurementAxis x() { return {0.5 * std::numbers::pi, 0.0}; }
};

QubitReducedDM reduced_qubit_dm(const BranchEnsemble& rho, int site);
QubitReducedDM reduced_qubit_dm(const PureState& state, int site);

double expectation_sigma_z(const BranchEnsemble& rho, int site);
Complex expectation_sigma_plus(const BranchEnsemble& rho, int site);

/// Natural-log entropy of a qubit marginal; 0 log 0 = 0. Throws
/// InvariantViolation("positivity") for an eigenvalue below -1e-10.
double von_neumann_entropy(const QubitReducedDM& dm);

inline constexpr double kLn2 = 0.69314718055994530942;

inline double nats_to_bits(double s) { return s / kLn2; }

}  // namespace spinsignal
