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

#include "spinsignal/protocol.hpp"

#include "spinsignal/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace spinsignal {

std::vector<double> TimeGrid::over_t0() const {
  validate();
  const int last =
      static_cast<int>(std::llround(t_max_over_t0 * samples_per_t0));
  std::vector<double> out(static_cast<std::size_t>(last) + 1);
  for (int j = 0; j <= last; ++j) out[j] = double(j) / samples_per_t0;
  return out;
}

void TimeGrid::validate() const {
  if (samples_per_t0 < 1) {
    throw ConfigError("samples_per_t0", "must be a positive integer");
  }
  if (!(t_max_over_t0 >= 1.0) || !std::isfinite(t_max_over_t0)) {
    throw ConfigError("t_max", "grid must extend to at least t0");
  }
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view s, const char* field) {
  const std::string t = trim(s);
  double v = 0.0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size()) {
    throw ConfigError(field, "cannot parse number '" + t + "'");
  }
  return v;
}

std::vector<std::vector<int>> parse_terms(std::string_view expr) {
  std::vector<std::vector<int>> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < expr.size() && (expr[pos] == ' ' || expr[pos] == '\t')) ++pos;
  };
  while (true) {
    skip_ws();
    if (pos >= expr.size() || expr[pos] != '[') {
      throw ConfigError("initial_state",
                        "expected '[' in '" + std::string(expr) + "'");
    }
    const auto close = expr.find(']', pos);
    if (close == std::string_view::npos) {
      throw ConfigError("initial_state", "unterminated '['");
    }
    std::vector<int> sites;
    std::string_view body = expr.substr(pos + 1, close - pos - 1);
    while (!trim(body).empty()) {
      const auto comma = body.find(',');
      const std::string tok = trim(body.substr(0, comma));
      sites.push_back(static_cast<int>(parse_double(tok, "initial_state")));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    terms.push_back(std::move(sites));
    pos = close + 1;
    skip_ws();
    if (pos >= expr.size()) break;
    if (expr[pos] != '+') {
      throw ConfigError("initial_state", "expected '+' between terms");
    }
    ++pos;
  }
  return terms;
}

}  // namespace

PureState InitialState::build(int n_sites) const {
  const std::string e = trim(expr);
  if (e == "vacuum" || e == "all-up") return PureState::basis(n_sites, {});
  if (e == "all-down" || e == "ghz") {
    std::vector<int> all(n_sites);
    std::iota(all.begin(), all.end(), 1);
    if (e == "all-down") return PureState::basis(n_sites, all);
    return PureState::superposition(n_sites, {{}, all});
  }
  if (e.rfind("amplitudes:", 0) == 0) {
    std::string_view rest(e);
    rest.remove_prefix(11);
    std::vector<double> a;
    while (!trim(rest).empty()) {
      const auto comma = rest.find(',');
      a.push_back(parse_double(rest.substr(0, comma), "initial_state"));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (a.size() != hilbert_dim(n_sites)) {
      throw ConfigError("initial_state",
                        "need " + std::to_string(hilbert_dim(n_sites)) +
                            " amplitudes, got " + std::to_string(a.size()));
    }
    StateVector v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v(i) = a[i];
    const double nrm = v.norm();
    if (nrm == 0.0) throw ConfigError("initial_state", "zero vector");
    return PureState(n_sites, v / nrm);
  }
  if (!e.empty() && e.front() == '[') {
    const auto terms = parse_terms(e);
    for (const auto& t : terms) {
      for (int site : t) {
        if (site < 1 || site > n_sites) {
          throw ConfigError("initial_state",
                            "site " + std::to_string(site) + " outside 1.." +
                                std::to_string(n_sites));
        }
      }
    }
    return PureState::superposition(n_sites, terms);
  }
  throw ConfigError("initial_state", "unrecognized state '" + e + "'");
}

double ProtocolSpec::effective_t0() const {
  if (t0) return *t0;
  const double j = std::abs(model.reference_coupling());
  if (j == 0.0) {
    throw ConfigError("t0", "reference coupling is zero; set t0 explicitly");
  }
  return 0.1 / j;
}

void ProtocolSpec::validate(int max_sites) const {
  model.validate(max_sites);
  grid.validate();
  if (t0 && !(*t0 > 0.0 && std::isfinite(*t0))) {
    throw ConfigError("t0", "epoch must be a positive finite time");
  }
  if (qdp_site < 1 || qdp_site > model.n_sites) {
    throw ConfigError("qdp_site", "outside 1.." + std::to_string(model.n_sites));
  }
  if (!std::isfinite(axis.theta) || !std::isfinite(axis.phi)) {
    throw ConfigError("theta", "axis angles must be finite");
  }
  effective_t0();
}

StateVector evolve(const SpectralHamiltonian& h, const StateVector& psi,
                   double dt) {
  if (psi.size() != h.dim()) {
    throw ConfigError("state", "dimension does not match the Hamiltonian");
  }
  if (dt == 0.0) return psi;
  const auto& v = h.eigenvectors();
  const auto& e = h.eigenvalues();
  // Real V: rotate real and imaginary parts separately.
  Eigen::VectorXcd c(e.size());
  c.real() = v.transpose() * psi.real();
  c.imag() = v.transpose() * psi.imag();
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    c(k) *= std::polar(1.0, -e(k) * dt);
  }
  StateVector out(psi.size());
  out.real() = v * c.real();
  out.imag() = v * c.imag();
  return out;
}

PureState evolve(const SpectralHamiltonian& h, const PureState& state,
                 double dt) {
  return PureState(state.n_sites(), evolve(h, state.amplitudes(), dt));
}

Eigen::MatrixXcd evolve_batch(const SpectralHamiltonian& h,
                              const StateVector& psi,
                              const std::vector<double>& times) {
  if (psi.size() != h.dim()) {
    throw ConfigError("state", "dimension does not match the Hamiltonian");
  }
  const auto& v = h.eigenvectors();
  const auto& e = h.eigenvalues();
  const Eigen::Index m = static_cast<Eigen::Index>(times.size());
  Eigen::VectorXcd c(e.size());
  c.real() = v.transpose() * psi.real();
  c.imag() = v.transpose() * psi.imag();

  Eigen::MatrixXd re(e.size(), m);
  Eigen::MatrixXd im(e.size(), m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < e.size(); ++k) {
      const Complex z = c(k) * std::polar(1.0, -e(k) * times[j]);
      re(k, j) = z.real();
      im(k, j) = z.imag();
    }
  }
  Eigen::MatrixXcd out(psi.size(), m);
  out.real() = v * re;
  out.imag() = v * im;
  // Exact copies where no evolution happens.
  for (Eigen::Index j = 0; j < m; ++j) {
    if (times[j] == 0.0) out.col(j) = psi;
  }
  return out;
}

StateVector apply_sigma_n(const StateVector& psi, int site,
                          const MeasurementAxis& axis) {
  const auto [nx, ny, nz] = axis.direction();
  const std::uint64_t mask = site_mask(site);
  const auto dim = static_cast<std::uint64_t>(psi.size());
  const Complex i(0.0, 1.0);
  StateVector out(psi.size());
  for (std::uint64_t c = 0; c < dim; ++c) {
    const Complex a = psi(c);
    const Complex flipped = psi(c ^ mask);
    const bool down = c & mask;
    // <c|sigma_y|c^mask>: sigma_y|0> = i|1>, sigma_y|1> = -i|0>.
    const Complex y = down ? i * flipped : -i * flipped;
    out(c) = nz * (down ? -a : a) + nx * flipped + ny * y;
  }
  return out;
}

BranchEnsemble apply_channel(const PureState& state, int site,
                             const MeasurementAxis& axis) {
  if (site < 1 || site > state.n_sites()) {
    throw ConfigError("qdp_site", "site " + std::to_string(site) +
                                      " outside 1.." +
                                      std::to_string(state.n_sites()));
  }
  const StateVector& psi = state.amplitudes();
  const StateVector sn = apply_sigma_n(psi, site, axis);
  return BranchEnsemble(state.n_sites(),
                        {0.5 * (psi + sn), 0.5 * (psi - sn)});
}

BranchEnsemble TrajectoryPair::without_at(std::size_t j) const {
  return BranchEnsemble(n_sites, {without_qdp.col(j)});
}

BranchEnsemble TrajectoryPair::with_at(std::size_t j) const {
  return BranchEnsemble(n_sites, {with_qdp[0].col(j), with_qdp[1].col(j)});
}

TrajectoryPair run_protocol(const ProtocolSpec& spec) {
  spec.validate();
  return run_protocol(spec, SpectralHamiltonian::build(spec.model));
}

TrajectoryPair run_protocol(const ProtocolSpec& spec,
                            const SpectralHamiltonian& h) {
  spec.validate(std::max(spec.model.n_sites, kDefaultMaxSites));
  const int n = spec.model.n_sites;
  if (h.n_sites() != n) {
    throw ConfigError("N", "Hamiltonian and protocol disagree on N");
  }
  const double t0 = spec.effective_t0();
  const PureState psi0 = spec.initial.build(n);

  TrajectoryPair pair;
  pair.n_sites = n;
  pair.t0 = t0;
  pair.times_over_t0 = spec.grid.over_t0();
  const std::size_t m = pair.size();

  std::vector<double> times(m);
  for (std::size_t j = 0; j < m; ++j) times[j] = pair.times_over_t0[j] * t0;
  pair.without_qdp = evolve_batch(h, psi0.amplitudes(), times);

  // Grid points at or after the epoch, as offsets from t0.
  const auto first_after =
      std::lower_bound(pair.times_over_t0.begin(), pair.times_over_t0.end(),
                       1.0) -
      pair.times_over_t0.begin();
  std::vector<double> offsets;
  for (std::size_t j = first_after; j < m; ++j) {
    offsets.push_back((pair.times_over_t0[j] - 1.0) * t0);
  }

  const PureState at_t0 = evolve(h, psi0, t0);
  const BranchEnsemble split = apply_channel(at_t0, spec.qdp_site, spec.axis);
  for (int b = 0; b < 2; ++b) {
    auto& w = pair.with_qdp[b];
    w.resize(pair.without_qdp.rows(), static_cast<Eigen::Index>(m));
    // Branch 0 carries the pre-epoch state; branch 1 is empty before t0.
    for (std::size_t j = 0; j < static_cast<std::size_t>(first_after); ++j) {
      if (b == 0) {
        w.col(j) = pair.without_qdp.col(j);
      } else {
        w.col(j).setZero();
      }
    }
    if (!offsets.empty()) {
      w.rightCols(static_cast<Eigen::Index>(offsets.size())) =
          evolve_batch(h, split.branches()[b], offsets);
    }
  }
  return pair;
}

std::pair<BranchEnsemble, BranchEnsemble> protocol_at(
    const ProtocolSpec& spec, const SpectralHamiltonian& h, double t) {
  const int n = spec.model.n_sites;
  const double t0 = spec.effective_t0();
  const PureState psi0 = spec.initial.build(n);
  BranchEnsemble without(n, {evolve(h, psi0.amplitudes(), t)});
  if (t < t0) return {without, BranchEnsemble(n, {without.branches()[0]})};
  const BranchEnsemble split =
      apply_channel(evolve(h, psi0, t0), spec.qdp_site, spec.axis);
  BranchEnsemble with(n, {evolve(h, split.branches()[0], t - t0),
                          evolve(h, split.branches()[1], t - t0)});
  return {without, with};
}

double max_trace_drift(const TrajectoryPair& pair) {
  double worst = 0.0;
  for (std::size_t j = 0; j < pair.size(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    worst = std::max(worst,
                     std::abs(pair.without_qdp.col(jj).squaredNorm() - 1.0));
    worst = std::max(worst, std::abs(pair.with_qdp[0].col(jj).squaredNorm() +
                                     pair.with_qdp[1].col(jj).squaredNorm() -
                                     1.0));
  }
  return worst;
}

}  // namespace spinsignal
