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

#include "spinsignal/hamiltonian.hpp"

#include "spinsignal/errors.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace spinsignal {

std::string_view to_string(ModelKind m) {
  switch (m) {
    case ModelKind::IsingNN: return "ising-nn";
    case ModelKind::IsingLongRange: return "ising-long-range";
    case ModelKind::XXZ: return "xxz";
    case ModelKind::TransverseXY: return "txy";
    case ModelKind::TransverseXYLong: return "txy-longitudinal";
  }
  return "?";
}

std::string_view to_string(Boundary b) {
  return b == Boundary::Open ? "open" : "periodic";
}

ModelKind parse_model(std::string_view name) {
  for (auto m : {ModelKind::IsingNN, ModelKind::IsingLongRange, ModelKind::XXZ,
                 ModelKind::TransverseXY, ModelKind::TransverseXYLong}) {
    if (name == to_string(m)) return m;
  }
  throw ConfigError("model", "unknown model '" + std::string(name) +
                                 "' (ising-nn, ising-long-range, xxz, txy, "
                                 "txy-longitudinal)");
}

Boundary parse_boundary(std::string_view name) {
  if (name == "open") return Boundary::Open;
  if (name == "periodic") return Boundary::Periodic;
  throw ConfigError("boundary", "expected open or periodic, got '" +
                                    std::string(name) + "'");
}

void ModelSpec::validate(int max_sites) const {
  if (n_sites < 2) throw ConfigError("N", "need at least 2 sites");
  if (n_sites > max_sites) {
    throw ConfigError("N", "N = " + std::to_string(n_sites) +
                               " exceeds the dense-eigensolve cap of " +
                               std::to_string(max_sites));
  }
  auto finite = [](const char* field, double v) {
    if (!std::isfinite(v)) throw ConfigError(field, "must be finite");
  };
  finite("J", J);
  finite("delta", delta);
  finite("Jz", Jz);
  finite("Jx", Jx);
  finite("Jy", Jy);
  finite("h", h);
  finite("h_long", h_long);
  if (model == ModelKind::IsingLongRange && !(delta > 0.0)) {
    throw ConfigError("delta", "long-range exponent must be positive");
  }
  if (boundary == Boundary::Periodic && model == ModelKind::IsingLongRange) {
    throw ConfigError("boundary",
                      "long-range Ising already couples every pair; use open");
  }
  if (boundary == Boundary::Periodic && n_sites < 3) {
    throw ConfigError("boundary", "periodic chain needs N >= 3");
  }
}

double ModelSpec::reference_coupling() const {
  switch (model) {
    case ModelKind::TransverseXY:
    case ModelKind::TransverseXYLong: return Jx;
    default: return J;
  }
}

namespace {

using Triplet = Eigen::Triplet<double>;

struct Builder {
  std::uint64_t dim;
  std::vector<Triplet> entries;
  std::vector<double> diagonal;

  explicit Builder(int n) : dim(hilbert_dim(n)), diagonal(dim, 0.0) {
    entries.reserve(dim * static_cast<std::uint64_t>(n + 1));
  }

  // cxx sx_i sx_k + cyy sy_i sy_k. Both flip sites i and k; sy sy carries
  // -1 when the two bits agree and +1 when they differ.
  void flip_pair(int i, int k, double cxx, double cyy) {
    const std::uint64_t m = site_mask(i) | site_mask(k);
    for (std::uint64_t c = 0; c < dim; ++c) {
      const bool same = ((c >> (i - 1)) & 1U) == ((c >> (k - 1)) & 1U);
      const double v = cxx + (same ? -cyy : cyy);
      if (v != 0.0) entries.emplace_back(c ^ m, c, v);
    }
  }

  void zz(int i, int k, double c_zz) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      const bool same = ((c >> (i - 1)) & 1U) == ((c >> (k - 1)) & 1U);
      diagonal[c] += same ? c_zz : -c_zz;
    }
  }

  void z(int i, double coef) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      diagonal[c] += ((c >> (i - 1)) & 1U) ? -coef : coef;
    }
  }

  void x(int i, double coef) {
    const std::uint64_t m = site_mask(i);
    for (std::uint64_t c = 0; c < dim; ++c) entries.emplace_back(c ^ m, c, coef);
  }

  Eigen::SparseMatrix<double> finish() {
    for (std::uint64_t c = 0; c < dim; ++c) {
      if (diagonal[c] != 0.0) entries.emplace_back(c, c, diagonal[c]);
    }
    Eigen::SparseMatrix<double> h(static_cast<Eigen::Index>(dim),
                                  static_cast<Eigen::Index>(dim));
    h.setFromTriplets(entries.begin(), entries.end());
    h.prune(0.0);
    return h;
  }
};

}  // namespace

Eigen::SparseMatrix<double> sparse_hamiltonian(const ModelSpec& spec) {
  spec.validate(std::max(spec.n_sites, 2));
  const int n = spec.n_sites;
  Builder b(n);

  // Nearest-neighbour bonds, with the (N,1) bond on a ring.
  std::vector<std::pair<int, int>> bonds;
  for (int i = 1; i < n; ++i) bonds.emplace_back(i, i + 1);
  if (spec.boundary == Boundary::Periodic) bonds.emplace_back(n, 1);

  switch (spec.model) {
    case ModelKind::IsingNN:
      for (auto [i, k] : bonds) b.flip_pair(i, k, spec.J, 0.0);
      break;
    case ModelKind::IsingLongRange:
      for (int i = 1; i <= n; ++i) {
        for (int k = i + 1; k <= n; ++k) {
          b.flip_pair(i, k, spec.J / std::pow(double(k - i), spec.delta), 0.0);
        }
      }
      break;
    case ModelKind::XXZ:
      for (auto [i, k] : bonds) {
        b.flip_pair(i, k, spec.J, spec.J);
        b.zz(i, k, spec.Jz);
      }
      break;
    case ModelKind::TransverseXY:
    case ModelKind::TransverseXYLong:
      for (auto [i, k] : bonds) b.flip_pair(i, k, spec.Jx, spec.Jy);
      for (int i = 1; i <= n; ++i) b.z(i, spec.h);
      if (spec.model == ModelKind::TransverseXYLong && spec.h_long != 0.0) {
        for (int i = 1; i <= n; ++i) b.x(i, spec.h_long);
      }
      break;
  }
  return b.finish();
}

SpectralHamiltonian::SpectralHamiltonian(int n_sites, Eigen::MatrixXd matrix)
    : n_sites_(n_sites), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() ||
      static_cast<std::size_t>(matrix_.rows()) != hilbert_dim(n_sites)) {
    throw ConfigError("hamiltonian", "matrix must be 2^N x 2^N");
  }
  const lapack_int n = static_cast<lapack_int>(matrix_.rows());
  eigenvectors_ = matrix_;
  eigenvalues_.resize(n);
  // Column-major, lower triangle; dsyevd overwrites with eigenvectors.
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, eigenvectors_.data(), n,
                     eigenvalues_.data());
  if (info != 0) {
    throw InvariantViolation("eigensolve",
                             "dsyevd failed with info " + std::to_string(info));
  }
}

SpectralHamiltonian SpectralHamiltonian::build(const ModelSpec& spec,
                                               int max_sites) {
  spec.validate(max_sites);
  return SpectralHamiltonian(spec.n_sites,
                             Eigen::MatrixXd(sparse_hamiltonian(spec)));
}

double SpectralHamiltonian::hermiticity_error() const {
  return (matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff();
}

double SpectralHamiltonian::eigen_residual() const {
  return (matrix_ * eigenvectors_ -
          eigenvectors_ * eigenvalues_.asDiagonal())
      .cwiseAbs()
      .maxCoeff();
}

bool conserves_parity(const ModelSpec& spec) {
  const auto h = sparse_hamiltonian(spec);
  return commutator_with_diagonal(h, [](std::uint64_t c) {
           return (std::popcount(c) & 1) ? -1.0 : 1.0;
         }) < 1e-10;
}

bool conserves_total_sz(const ModelSpec& spec) {
  const auto h = sparse_hamiltonian(spec);
  const int n = spec.n_sites;
  return commutator_with_diagonal(h, [n](std::uint64_t c) {
           return double(n - 2 * std::popcount(c));
         }) < 1e-10;
}

bool is_magnon_block_diagonal(const Eigen::SparseMatrix<double>& h) {
  for (Eigen::Index col = 0; col < h.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(h, col); it; ++it) {
      if (std::popcount(static_cast<std::uint64_t>(it.row())) !=
          std::popcount(static_cast<std::uint64_t>(it.col()))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace spinsignal
