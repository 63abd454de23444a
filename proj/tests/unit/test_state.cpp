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

#include "spinsignal/errors.hpp"
#include "spinsignal/state.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace spinsignal;

TEST_SUITE("state") {

TEST_CASE("basis index bit layout") {
  const std::vector<int> sites = {1, 3};
  const BasisIndex b = BasisIndex::with_magnons(sites);
  CHECK(b.code == 0b101);
  CHECK(b.magnons() == 2);
  CHECK(b.parity() == 0);
  CHECK(b.is_down(1));
  CHECK_FALSE(b.is_down(2));
  CHECK(hilbert_dim(4) == 16);
}

TEST_CASE("magnon parity examples") {
  CHECK(magnon_parity(PureState::basis(3, {})) == MagnonParity::EvenOnly);
  CHECK(magnon_parity(PureState::superposition(3, {{}, {1, 2}})) ==
        MagnonParity::EvenOnly);
  CHECK(magnon_parity(PureState::superposition(3, {{}, {1}})) ==
        MagnonParity::Mixed);
  CHECK(magnon_parity(PureState::superposition(3, {{1}, {2}})) ==
        MagnonParity::OddOnly);
}

TEST_CASE("parity ignores amplitudes below threshold") {
  StateVector v = StateVector::Zero(4);
  v(0) = 1.0;
  v(1) = 1e-13;
  CHECK(magnon_parity(PureState(2, v)) == MagnonParity::EvenOnly);
}

TEST_CASE("reduced density matrix examples") {
  // |0> on site 1 times an arbitrary state of site 2
  StateVector v = StateVector::Zero(4);
  v(0) = 0.6;
  v(2) = Complex(0.0, 0.8);
  auto dm = reduced_qubit_dm(PureState(2, v), 1);
  CHECK(dm.m00 == doctest::Approx(1.0));
  CHECK(std::abs(dm.m01) < 1e-15);

  const auto bell = PureState::superposition(2, {{}, {1, 2}});
  dm = reduced_qubit_dm(bell, 2);
  CHECK(dm.m00 == doctest::Approx(0.5));
  CHECK(dm.m11 == doctest::Approx(0.5));
  CHECK(std::abs(dm.m01) < 1e-15);
}

TEST_CASE("off-diagonal element matches a direct four-amplitude trace") {
  // (|00> + |10>)/sqrt2 in the paper's left-to-right order puts the
  // superposition on site 1; site 2 is |0>.
  const auto s = PureState::superposition(2, {{}, {1}});
  const auto dm = reduced_qubit_dm(s, 1);
  // <0|rho_1|1> = sum_r psi(0,r) conj(psi(1,r)) over the other site
  const auto& a = s.amplitudes();
  const Complex direct = a(0b00) * std::conj(a(0b01)) +
                         a(0b10) * std::conj(a(0b11));
  CHECK(std::abs(dm.m01 - direct) < 1e-15);
  CHECK(dm.m01.real() == doctest::Approx(0.5));

  // Tensoring another factor onto the rest leaves it unchanged.
  StateVector big = StateVector::Zero(8);
  big(0b000) = big(0b001) = 0.5;
  big(0b100) = big(0b101) = 0.5;
  CHECK(reduced_qubit_dm(PureState(3, big), 1).m01.real() ==
        doctest::Approx(0.5));
}

TEST_CASE("sigma z expectations") {
  const auto all_down = PureState::basis(3, {1, 2, 3});
  const auto rho = BranchEnsemble::pure(all_down);
  for (int n = 1; n <= 3; ++n) CHECK(expectation_sigma_z(rho, n) == -1.0);

  const auto s = BranchEnsemble::pure(PureState::superposition(3, {{}, {1, 2}}));
  CHECK(std::abs(expectation_sigma_z(s, 1)) < 1e-15);
  CHECK(expectation_sigma_z(s, 3) == doctest::Approx(1.0));
}

TEST_CASE("sigma plus is the (0,1) element") {
  // (|0> + i|1>)/sqrt2 on one site: <sigma^+> = <psi|1><0|psi> = conj(b) a
  StateVector v(2);
  v << 1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0));
  const auto rho = BranchEnsemble::pure(PureState(1, v));
  const Complex sp = expectation_sigma_plus(rho, 1);
  CHECK(sp.real() == doctest::Approx(0.0));
  CHECK(sp.imag() == doctest::Approx(-0.5));
}

TEST_CASE("entropy examples") {
  CHECK(von_neumann_entropy({1.0, 0.0, 0.0}) == 0.0);
  CHECK(von_neumann_entropy({0.5, 0.5, 0.0}) == doctest::Approx(kLn2));
  const double expect = -0.75 * std::log(0.75) - 0.25 * std::log(0.25);
  CHECK(von_neumann_entropy({0.75, 0.25, 0.0}) == doctest::Approx(expect));
  CHECK(nats_to_bits(kLn2) == doctest::Approx(1.0));
}

TEST_CASE("entropy rejects a non-positive marginal") {
  CHECK_THROWS_AS(von_neumann_entropy({0.5, 0.5, 0.6}), InvariantViolation);
}

TEST_CASE("site range is checked") {
  const auto rho = BranchEnsemble::pure(PureState::basis(3, {}));
  CHECK_THROWS_AS(reduced_qubit_dm(rho, 0), ConfigError);
  CHECK_THROWS_AS(reduced_qubit_dm(rho, 4), ConfigError);
  CHECK_THROWS_AS(PureState::basis(3, {4}), ConfigError);
}

TEST_CASE("measurement axis is a unit vector") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int k = 0; k < 100; ++k) {
    const auto d = MeasurementAxis{u(rng), u(rng)}.direction();
    CHECK(d[0] * d[0] + d[1] * d[1] + d[2] * d[2] == doctest::Approx(1.0));
  }
}

namespace {

StateVector random_state(std::mt19937& rng, int n) {
  std::normal_distribution<double> g;
  StateVector v(hilbert_dim(n));
  for (auto& a : v) a = Complex(g(rng), g(rng));
  return v / v.norm();
}

}  // namespace

TEST_CASE("marginal invariants on random states") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 6;
    const PureState s(n, random_state(rng, n));
    for (int site = 1; site <= n; ++site) {
      const auto dm = reduced_qubit_dm(s, site);
      CHECK(std::abs(dm.m00 + dm.m11 - 1.0) < 1e-12);
      CHECK(std::norm(dm.m01) <= dm.m00 * dm.m11 + 1e-12);
      const double S = von_neumann_entropy(dm);
      CHECK(S >= -1e-15);
      CHECK(S <= kLn2 + 1e-12);
    }
  }
}

TEST_CASE("product states: the marginal depends on its own factor only") {
  std::mt19937 rng(3);
  const StateVector a = random_state(rng, 2);  // sites 1, 2
  for (int trial = 0; trial < 5; ++trial) {
    const StateVector b = random_state(rng, 3);  // sites 3..5
    StateVector v(32);
    for (int hi = 0; hi < 8; ++hi) {
      for (int lo = 0; lo < 4; ++lo) v(hi * 4 + lo) = a(lo) * b(hi);
    }
    const auto big = reduced_qubit_dm(PureState(5, v), 2);
    const auto small = reduced_qubit_dm(PureState(2, a), 2);
    CHECK(std::abs(big.m00 - small.m00) < 1e-14);
    CHECK(std::abs(big.m01 - small.m01) < 1e-14);
  }
}

TEST_CASE("pure parity states have no sigma plus") {
  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  for (int parity = 0; parity < 2; ++parity) {
    StateVector v = StateVector::Zero(64);
    for (std::uint64_t c = 0; c < 64; ++c) {
      if ((std::popcount(c) & 1) == parity) v(c) = Complex(g(rng), g(rng));
    }
    const PureState s(6, v / v.norm());
    for (int site = 1; site <= 6; ++site) {
      CHECK(std::abs(reduced_qubit_dm(s, site).m01) < 1e-15);
    }
  }
}

TEST_CASE("branch ensemble sums marginals over branches") {
  StateVector a = StateVector::Zero(2), b = StateVector::Zero(2);
  a(0) = std::sqrt(0.3);
  b(1) = std::sqrt(0.7);
  const BranchEnsemble rho(1, {a, b});
  CHECK(rho.trace() == doctest::Approx(1.0));
  CHECK(expectation_sigma_z(rho, 1) == doctest::Approx(-0.4));
}

}  // TEST_SUITE
