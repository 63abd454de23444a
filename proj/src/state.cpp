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

#include "spinsignal/state.hpp"

#include "spinsignal/errors.hpp"

#include <cmath>
#include <string>

namespace spinsignal {

namespace {

void check_site(int n_sites, int site) {
  if (site < 1 || site > n_sites) {
    throw ConfigError("site", "site " + std::to_string(site) +
                                  " outside 1.." + std::to_string(n_sites));
  }
}

void check_sites(int n_sites) {
  if (n_sites < 1 || n_sites > 62) {
    throw ConfigError("n_sites", "unsupported chain length " +
                                     std::to_string(n_sites));
  }
}

}  // namespace

BasisIndex BasisIndex::with_magnons(std::span<const int> sites) {
  BasisIndex b;
  for (int s : sites) b.code |= site_mask(s);
  return b;
}

PureState::PureState(int n_sites, StateVector amplitudes)
    : n_sites_(n_sites), amplitudes_(std::move(amplitudes)) {
  check_sites(n_sites);
  if (static_cast<std::size_t>(amplitudes_.size()) != hilbert_dim(n_sites)) {
    throw ConfigError("amplitudes",
                      "expected " + std::to_string(hilbert_dim(n_sites)) +
                          " amplitudes, got " +
                          std::to_string(amplitudes_.size()));
  }
}

PureState PureState::basis(int n_sites, std::span<const int> down_sites) {
  check_sites(n_sites);
  for (int s : down_sites) check_site(n_sites, s);
  StateVector v = StateVector::Zero(hilbert_dim(n_sites));
  v(BasisIndex::with_magnons(down_sites).code) = 1.0;
  return PureState(n_sites, std::move(v));
}

PureState PureState::basis(int n_sites, std::initializer_list<int> down_sites) {
  return basis(n_sites, std::span<const int>(down_sites.begin(),
                                             down_sites.size()));
}

PureState PureState::superposition(int n_sites,
                                   const std::vector<std::vector<int>>& terms) {
  check_sites(n_sites);
  if (terms.empty()) throw ConfigError("initial_state", "empty superposition");
  StateVector v = StateVector::Zero(hilbert_dim(n_sites));
  for (const auto& t : terms) {
    for (int s : t) check_site(n_sites, s);
    v(BasisIndex::with_magnons(t).code) += 1.0;
  }
  const double norm = v.norm();
  if (norm == 0.0) throw ConfigError("initial_state", "zero vector");
  v /= norm;
  return PureState(n_sites, std::move(v));
}

const char* to_string(MagnonParity p) {
  switch (p) {
    case MagnonParity::EvenOnly: return "even-only";
    case MagnonParity::OddOnly: return "odd-only";
    case MagnonParity::Mixed: return "mixed";
  }
  return "?";
}

MagnonParity magnon_parity(const PureState& state) {
  bool even = false;
  bool odd = false;
  const auto& a = state.amplitudes();
  for (Eigen::Index c = 0; c < a.size(); ++c) {
    if (std::abs(a(c)) < kAmplitudeZero) continue;
    if (std::popcount(static_cast<std::uint64_t>(c)) & 1) {
      odd = true;
    } else {
      even = true;
    }
  }
  if (even && odd) return MagnonParity::Mixed;
  return odd ? MagnonParity::OddOnly : MagnonParity::EvenOnly;
}

BranchEnsemble::BranchEnsemble(int n_sites, std::vector<StateVector> branches)
    : n_sites_(n_sites), branches_(std::move(branches)) {
  check_sites(n_sites);
  for (const auto& b : branches_) {
    if (static_cast<std::size_t>(b.size()) != hilbert_dim(n_sites)) {
      throw ConfigError("branches", "branch dimension mismatch");
    }
  }
}

BranchEnsemble BranchEnsemble::pure(const PureState& state) {
  return BranchEnsemble(state.n_sites(), {state.amplitudes()});
}

double BranchEnsemble::trace() const {
  double t = 0.0;
  for (const auto& b : branches_) t += b.squaredNorm();
  return t;
}

std::array<double, 2> QubitReducedDM::eigenvalues() const {
  const double mid = 0.5 * (m00 + m11);
  const double half_gap = 0.5 * (m00 - m11);
  const double r = std::sqrt(half_gap * half_gap + std::norm(m01));
  return {mid - r, mid + r};
}

std::array<double, 3> MeasurementAxis::direction() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

namespace {

void accumulate_marginal(const StateVector& psi, std::uint64_t mask,
                         double& m00, double& m11, Complex& m01) {
  const auto dim = static_cast<std::uint64_t>(psi.size());
  const Complex* a = psi.data();
  for (std::uint64_t c = 0; c < dim; ++c) {
    if (c & mask) continue;
    const Complex up = a[c];
    const Complex down = a[c | mask];
    m00 += std::norm(up);
    m11 += std::norm(down);
    m01 += up * std::conj(down);
  }
}

}  // namespace

QubitReducedDM reduced_qubit_dm(const BranchEnsemble& rho, int site) {
  check_site(rho.n_sites(), site);
  QubitReducedDM dm{0.0, 0.0, 0.0};
  const auto mask = site_mask(site);
  for (const auto& b : rho.branches()) {
    accumulate_marginal(b, mask, dm.m00, dm.m11, dm.m01);
  }
  return dm;
}

QubitReducedDM reduced_qubit_dm(const PureState& state, int site) {
  check_site(state.n_sites(), site);
  QubitReducedDM dm{0.0, 0.0, 0.0};
  accumulate_marginal(state.amplitudes(), site_mask(site), dm.m00, dm.m11,
                      dm.m01);
  return dm;
}

double expectation_sigma_z(const BranchEnsemble& rho, int site) {
  const auto dm = reduced_qubit_dm(rho, site);
  return dm.m00 - dm.m11;
}

Complex expectation_sigma_plus(const BranchEnsemble& rho, int site) {
  return reduced_qubit_dm(rho, site).m01;
}

double von_neumann_entropy(const QubitReducedDM& dm) {
  double s = 0.0;
  for (double lambda : dm.eigenvalues()) {
    if (lambda < -1e-10) {
      throw InvariantViolation("positivity",
                               "negative marginal eigenvalue " +
                                   std::to_string(lambda));
    }
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

}  // namespace spinsignal
