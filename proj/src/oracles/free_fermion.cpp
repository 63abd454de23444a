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

#include "spinsignal/oracles/free_fermion.hpp"

#include "spinsignal/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spinsignal {

Eigen::MatrixXd majorana_coupling(int n_sites, double Jx, double Jy,
                                  double h) {
  if (n_sites < 1) throw ConfigError("N", "need at least one site");
  const int m = 2 * n_sites;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
  auto set = [&A](int p, int q, double v) {  // 1-based Majorana labels
    A(p - 1, q - 1) += v;
    A(q - 1, p - 1) -= v;
  };
  for (int l = 1; l <= n_sites; ++l) {
    set(2 * l - 1, 2 * l, -2.0 * h);  // h sz_l = -i h a_{2l-1} a_{2l}
    if (l < n_sites) {
      set(2 * l, 2 * l + 1, -2.0 * Jx);     // sx sx = -i a_{2l} a_{2l+1}
      set(2 * l - 1, 2 * l + 2, 2.0 * Jy);  // sy sy = i a_{2l-1} a_{2l+2}
    }
  }
  return A;
}

MajoranaPropagator::MajoranaPropagator(const Eigen::MatrixXd& A) {
  const Eigen::MatrixXcd iA = Complex(0.0, 1.0) * A.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(iA);
  lambda_ = es.eigenvalues();
  vectors_ = es.eigenvectors();
}

Eigen::MatrixXd MajoranaPropagator::at(double t) const {
  // exp(A t) = exp(-i (iA) t)
  Eigen::VectorXcd phase(lambda_.size());
  for (Eigen::Index k = 0; k < lambda_.size(); ++k) {
    phase(k) = std::polar(1.0, -lambda_(k) * t);
  }
  return (vectors_ * phase.asDiagonal() * vectors_.adjoint()).real();
}

FermionCovariance::FermionCovariance(Eigen::MatrixXcd majorana_two_point)
    : m_(std::move(majorana_two_point)) {
  if (m_.rows() != m_.cols() || m_.rows() % 2 != 0) {
    throw ConfigError("covariance", "need a square 2N x 2N matrix");
  }
}

FermionCovariance FermionCovariance::vacuum(int n_sites) {
  const int m = 2 * n_sites;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(m, m);
  for (int l = 0; l < n_sites; ++l) {
    M(2 * l, 2 * l + 1) = Complex(0.0, 1.0);
    M(2 * l + 1, 2 * l) = Complex(0.0, -1.0);
  }
  return FermionCovariance(std::move(M));
}

FermionCovariance FermionCovariance::evolved(const Eigen::MatrixXd& R) const {
  const Eigen::MatrixXcd Rc = R.cast<Complex>();
  return FermionCovariance(Rc * m_ * Rc.transpose());
}

Eigen::MatrixXcd FermionCovariance::normal() const {
  const int n = n_sites();
  const Complex i(0.0, 1.0);
  Eigen::MatrixXcd out(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int p = 2 * a, q = 2 * b;
      out(a, b) = 0.25 * (m_(p, q) + i * m_(p, q + 1) - i * m_(p + 1, q) +
                          m_(p + 1, q + 1));
    }
  }
  return out;
}

Eigen::MatrixXcd FermionCovariance::anomalous() const {
  const int n = n_sites();
  const Complex i(0.0, 1.0);
  Eigen::MatrixXcd out(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int p = 2 * a, q = 2 * b;
      out(a, b) = 0.25 * (m_(p, q) + i * m_(p, q + 1) + i * m_(p + 1, q) -
                          m_(p + 1, q + 1));
    }
  }
  return out;
}

Complex FermionCovariance::wick(const std::vector<Eigen::VectorXcd>& ops) const {
  const auto k = static_cast<Eigen::Index>(ops.size());
  if (k == 0) return 1.0;
  if (k % 2 != 0) return 0.0;
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Eigen::RowVectorXcd left = ops[i].transpose() * m_;
    for (Eigen::Index j = i + 1; j < k; ++j) {
      c(i, j) = left * ops[j];
      c(j, i) = -c(i, j);
    }
  }
  return pfaffian(std::move(c));
}

Complex pfaffian(Eigen::MatrixXcd a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw ConfigError("pfaffian", "matrix must be square");
  if (n % 2 != 0) return 0.0;
  Complex pf = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index kp = k + 1;
    a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&kp);
    kp += k + 1;
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    if (a(k + 1, k) == 0.0) return 0.0;
    pf *= a(k, k + 1);
    if (k + 2 < n) {
      const Eigen::Index r = n - k - 2;
      const Eigen::VectorXcd tau = a.row(k).tail(r).transpose() / a(k, k + 1);
      const Eigen::VectorXcd col = a.col(k + 1).tail(r);
      a.bottomRightCorner(r, r) +=
          tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

DetectorTrace ff_protocol_F(int n_sites, double Jx, double Jy, double h,
                            double t0, const std::vector<double>& times_over_t0) {
  if (!(t0 > 0.0)) throw ConfigError("t0", "epoch must be positive");
  const int m = 2 * n_sites;
  const MajoranaPropagator prop(majorana_coupling(n_sites, Jx, Jy, h));
  const FermionCovariance at_t0 =
      FermionCovariance::vacuum(n_sites).evolved(prop.at(t0));

  Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(m);
  Eigen::VectorXcd e2 = Eigen::VectorXcd::Zero(m);
  e1(0) = 1.0;
  e2(1) = 1.0;
  const Complex minus_i(0.0, -1.0);

  DetectorTrace tr;
  tr.t0 = t0;
  tr.times_over_t0 = times_over_t0;
  tr.F = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(times_over_t0.size()),
                               n_sites);
  for (std::size_t j = 0; j < times_over_t0.size(); ++j) {
    if (times_over_t0[j] < 1.0) continue;
    const Eigen::MatrixXd R = prop.at((times_over_t0[j] - 1.0) * t0);
    for (int n = 1; n <= n_sites; ++n) {
      // sz_n(s) = -i b c with b = a_{2n-1}(s), c = a_{2n}(s)
      const Eigen::VectorXcd b = R.row(2 * n - 2).transpose().cast<Complex>();
      const Eigen::VectorXcd c = R.row(2 * n - 1).transpose().cast<Complex>();
      const Complex plain = minus_i * at_t0.wick({b, c});
      // sz_1 sz_n(s) sz_1 = (-i)^3 a1 a2 b c a1 a2
      const Complex sandwiched =
          minus_i * minus_i * minus_i * at_t0.wick({e1, e2, b, c, e1, e2});
      // Dephasing along z averages the two: (<O> + <sz_1 O sz_1>) / 2.
      tr.F(static_cast<Eigen::Index>(j), n - 1) =
          0.5 * (sandwiched.real() - plain.real());
    }
  }
  return tr;
}

BogoliubovMode txy_dispersion(double q, double Jx, double Jy, double h) {
  BogoliubovMode mode;
  mode.q = q;
  mode.eps = 2.0 * ((Jx + Jy) * std::cos(q) + h);
  mode.delta = 2.0 * (Jx - Jy) * std::sin(q);
  mode.omega = std::hypot(mode.eps, mode.delta);
  if (mode.omega == 0.0) {
    mode.u = mode.v = std::numbers::sqrt2 / 2.0;
    return mode;
  }
  const double u2 = std::clamp(0.5 + mode.eps / (2.0 * mode.omega), 0.0, 1.0);
  mode.u = std::sqrt(u2);
  mode.v = std::sqrt(1.0 - u2);
  return mode;
}

Eigen::Matrix2cd bdg_block(double q, double Jx, double Jy, double h) {
  const BogoliubovMode m = txy_dispersion(q, Jx, Jy, h);
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd b;
  b << m.eps, -i * m.delta, i * m.delta, -m.eps;
  return b;
}

std::vector<double> antiperiodic_momenta(int n_sites) {
  std::vector<double> qs;
  qs.reserve(n_sites);
  for (int m = 0; m < n_sites; ++m) {
    double q = std::numbers::pi * (2 * m + 1) / n_sites;
    if (q > std::numbers::pi) q -= 2.0 * std::numbers::pi;
    qs.push_back(q);
  }
  return qs;
}

std::vector<double> periodic_even_sector_spectrum(int n_sites, double Jx,
                                                  double Jy, double h) {
  if (n_sites < 1 || n_sites > 20) {
    throw ConfigError("N", "mode enumeration supports 1..20 sites");
  }
  std::vector<double> w;
  double zero_point = 0.0;
  for (double q : antiperiodic_momenta(n_sites)) {
    w.push_back(txy_dispersion(q, Jx, Jy, h).omega);
    zero_point -= 0.5 * w.back();
  }
  std::vector<double> energies;
  const std::uint32_t subsets = std::uint32_t{1} << n_sites;
  for (std::uint32_t s = 0; s < subsets; ++s) {
    if (std::popcount(s) & 1) continue;
    double e = zero_point;
    for (int k = 0; k < n_sites; ++k) {
      if (s & (1U << k)) e += w[k];
    }
    energies.push_back(e);
  }
  std::sort(energies.begin(), energies.end());
  return energies;
}

}  // namespace spinsignal
