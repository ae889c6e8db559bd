// Copyright 2026 The Trispin Authors
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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "trispin/dynamics.hpp"

using namespace trispin;
using namespace trispin::dynamics;
using opalg::Axis;
using sequences::Delay;
using sequences::HardPulse;
using sequences::PulseSequence;
using sequences::ShapedEvolution;

namespace {

ComplexMatrix random_hermitian(std::mt19937_64& rng, Eigen::Index dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix x(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) x(r, c) = Complex(u(rng), u(rng));
  return (x + x.adjoint()) / 2.0;
}

double spectral_norm(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

ComplexMatrix chain_drift_oracle(double j12, double j23, const Eigen::Vector3d& nu) {
  return oracle::kPi * 2 *
         (j12 * oracle::product("zzi") + j23 * oracle::product("izz") +
          nu(0) * oracle::product("zii") + nu(1) * oracle::product("izi") +
          nu(2) * oracle::product("iiz"));
}

}  // namespace

TEST_CASE("spin systems validate their inputs") {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(3, 3);
  j(0, 1) = 1.0;
  CHECK_THROWS_AS(SpinSystem(j, Eigen::VectorXd::Zero(3)), ContractViolation);
  j(1, 0) = 1.0;
  CHECK_NOTHROW(SpinSystem(j, Eigen::VectorXd::Zero(3)));
  CHECK_THROWS_AS(SpinSystem(j, Eigen::VectorXd::Zero(2)), ContractViolation);
  j(2, 2) = 0.5;
  CHECK_THROWS_AS(SpinSystem(j, Eigen::VectorXd::Zero(3)), ContractViolation);

  const auto sys = SpinSystem::three_spin_chain(2.0);
  CHECK(sys.spins() == 3);
  CHECK(sys.dim() == 8);
  CHECK(sys.coupling(1, 2) == 2.0);
  CHECK(sys.coupling(3, 2) == 2.0);
  CHECK(sys.coupling(1, 3) == 0.0);
  CHECK(sys.coupled_pairs() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK_THROWS_AS(sys.coupling(0, 1), IndexError);
  CHECK_THROWS_AS(sys.offset(4), IndexError);
}

TEST_CASE("drift Hamiltonian of the three-spin chain") {
  const auto h = drift_hamiltonian(SpinSystem::three_spin_chain(1.0));
  // |000>: 2pi (1/4 + 1/4)
  CHECK(std::abs(h(0, 0) - Complex(oracle::kPi)) <= 1e-15);
  CHECK(std::abs(h.trace()) <= 1e-15);
  CHECK(max_abs(h - ComplexMatrix(h.diagonal().asDiagonal())) == 0.0);
  CHECK(max_abs(h - chain_drift_oracle(1.0, 1.0, Eigen::Vector3d::Zero())) <= 1e-14);
}

TEST_CASE("drift Hamiltonian includes offsets and honours decoupled pairs") {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(3, 3);
  j(0, 1) = j(1, 0) = 3.0;
  j(1, 2) = j(2, 1) = -1.5;
  const Eigen::Vector3d nu(10.0, -4.0, 0.25);
  const SpinSystem sys(j, nu);
  CHECK(max_abs(drift_hamiltonian(sys) - chain_drift_oracle(3.0, -1.5, nu)) <= 1e-12);

  const std::vector<sequences::SpinPair> off{{2, 3}};
  CHECK(max_abs(drift_hamiltonian(sys, off) - chain_drift_oracle(3.0, 0.0, nu)) <= 1e-12);
  const std::vector<sequences::SpinPair> bad{{1, 4}};
  CHECK_THROWS_AS(drift_hamiltonian(sys, bad), IndexError);
}

TEST_CASE("uncoupled drift vanishes") {
  CHECK(drift_hamiltonian(SpinSystem::uncoupled(2)) == ComplexMatrix::Zero(4, 4));
}

TEST_CASE("control Hamiltonian") {
  const std::vector<RfField> one{{2, Axis::x, 0.3}};
  CHECK(max_abs(control_hamiltonian(one, 3) - 2 * oracle::kPi * 0.3 * oracle::product("ixi")) <=
        1e-15);
  CHECK(control_hamiltonian({}, 2) == ComplexMatrix::Zero(4, 4));
  const std::vector<RfField> two{{1, Axis::x, 0.4}, {1, Axis::x, -1.1}};
  CHECK(max_abs(control_hamiltonian(two, 2) - 2 * oracle::kPi * (-0.7) * oracle::product("xi")) <=
        1e-15);
  const std::vector<RfField> mixed{{1, Axis::y, 1.0}, {3, Axis::x, 2.0}};
  CHECK(max_abs(control_hamiltonian(mixed, 3) -
                2 * oracle::kPi * (oracle::product("yii") + 2.0 * oracle::product("iix"))) <=
        1e-14);
  const std::vector<RfField> zaxis{{1, Axis::z, 1.0}};
  CHECK_THROWS_AS(control_hamiltonian(zaxis, 2), ContractViolation);
}

TEST_CASE("expm of a spin rotation has period 4pi") {
  const ComplexMatrix h = 2 * kPi * opalg::pauli(Axis::z);
  CHECK(max_abs(expm(h, 2.0).matrix - ComplexMatrix::Identity(2, 2)) <= 1e-14);
  const ComplexMatrix hx = 2 * kPi * opalg::pauli(Axis::x);
  CHECK(max_abs(expm(hx, 2.0).matrix - ComplexMatrix::Identity(2, 2)) <= 1e-13);
  CHECK(max_abs(expm(hx, 1.0).matrix + ComplexMatrix::Identity(2, 2)) <= 1e-13);
}

TEST_CASE("expm of zero is the identity") {
  CHECK(expm(ComplexMatrix::Zero(8, 8), 3.7).matrix == ComplexMatrix::Identity(8, 8));
  const auto p = expm(ComplexMatrix::Zero(4, 4), 0.0);
  CHECK(p.duration == 0.0);
}

TEST_CASE("expm of the diagonal drift is entrywise") {
  const auto sys = SpinSystem::three_spin_chain(1.0);
  const auto u = expm(drift_hamiltonian(sys), 0.5).matrix;
  const auto ref = oracle::diagonal_unitary(3, [](int b) {
    return 2 * oracle::kPi * 0.5 *
           (oracle::mz(b, 1, 3) * oracle::mz(b, 2, 3) + oracle::mz(b, 2, 3) * oracle::mz(b, 3, 3));
  });
  CHECK(max_abs(u - ref) <= 1e-12);
  CHECK(max_abs(u - oracle::eig_expm(drift_hamiltonian(sys), 0.5)) <= 1e-12);
}

TEST_CASE("expm matches both reference exponentials up to |Ht| = 1e3") {
  std::mt19937_64 rng(kDefaultSeed);
  for (double target_norm : {1e-6, 0.1, 1.0, 7.0, 50.0, 300.0, 1000.0}) {
    for (int trial = 0; trial < 3; ++trial) {
      const Eigen::Index dim = trial == 0 ? 2 : (trial == 1 ? 4 : 8);
      ComplexMatrix h = random_hermitian(rng, dim);
      h *= target_norm / spectral_norm(h);
      const auto u = expm(h, 1.0).matrix;
      INFO("norm " << target_norm << " dim " << dim);
      CHECK(max_abs(u - oracle::taylor_expm_ld(h, 1.0)) <= 1e-10);
      CHECK(max_abs(u - oracle::eig_expm(h, 1.0)) <= 1e-10);
      CHECK(max_abs(u.adjoint() * u - ComplexMatrix::Identity(dim, dim)) <= 1e-10);
    }
  }
}

TEST_CASE("expm is additive in time") {
  std::mt19937_64 rng(kDefaultSeed + 1);
  std::uniform_real_distribution<double> ut(0.0, 10.0), un(0.0, 100.0);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix h = random_hermitian(rng, 8);
    h *= un(rng) / spectral_norm(h);
    const double t1 = ut(rng), t2 = ut(rng);
    const auto whole = expm(h, t1 + t2).matrix;
    const ComplexMatrix split = expm(h, t1).matrix * expm(h, t2).matrix;
    CHECK(max_abs(whole - split) <= 1e-10);
  }
}

TEST_CASE("expm rejects non-Hermitian input") {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 1) = 1.0;
  CHECK_THROWS_AS(expm(h, 1.0), ContractViolation);
  h(1, 0) = Complex(1.0, 1e-6);
  CHECK_THROWS_AS(expm(h, 1.0), ContractViolation);
}

TEST_CASE("diagonal fast path agrees with the general path") {
  std::mt19937_64 rng(kDefaultSeed + 2);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix h = ComplexMatrix::Zero(8, 8);
    for (int k = 0; k < 8; ++k) h(k, k) = u(rng);
    const double t = 0.1 * (trial + 1);
    const auto fast = expm(h, t).matrix;
    const auto general = exp_matrix(Complex(0.0, -t) * h);
    CHECK(max_abs(fast - general) <= 1e-12);
  }
}

TEST_CASE("exp_matrix of a general generator") {
  ComplexMatrix g(2, 2);
  g << 0.0, 1.0, 0.0, 0.0;  // nilpotent
  ComplexMatrix expected(2, 2);
  expected << 1.0, 1.0, 0.0, 1.0;
  CHECK(max_abs(exp_matrix(g) - expected) <= 1e-15);
  CHECK_THROWS_AS(exp_matrix(ComplexMatrix::Zero(2, 3)), DimensionMismatch);
}

TEST_CASE("hard pulses equal exp(-i angle I_k,axis)") {
  for (Axis a : {Axis::x, Axis::y, Axis::z})
    for (int k = 1; k <= 3; ++k)
      for (double angle : {-kPi / 2, kPi / 3, kPi, 2.5}) {
        const auto ref = oracle::eig_expm(opalg::embed(a, k, 3), angle);
        CHECK(max_abs(hard_pulse(a, k, 3, angle) - ref) <= 1e-14);
      }
  CHECK(max_abs(hard_pulse(Axis::x, 1, 1, 4 * kPi) - ComplexMatrix::Identity(2, 2)) <= 1e-15);
  CHECK_THROWS_AS(hard_pulse(Axis::identity, 1, 2, 1.0), ContractViolation);
}

TEST_CASE("evolve of an empty sequence") {
  const auto p = evolve(PulseSequence{3, "empty", {}, {}}, SpinSystem::three_spin_chain(1.0));
  CHECK(p.matrix == ComplexMatrix::Identity(8, 8));
  CHECK(p.duration == 0.0);
}

TEST_CASE("a half-J delay on a coupled pair") {
  const SpinSystem pair = SpinSystem::chain(2, 1.0);
  const auto p = evolve(PulseSequence{2, "d", {Delay{0.5, {}}}, {}}, pair);
  const auto ref = oracle::eig_expm(2 * oracle::kPi * oracle::product("zz"), 0.5);
  CHECK(max_abs(p.matrix - ref) <= 1e-14);
  CHECK(p.duration == 0.5);
  // phases -+pi/4 on the diagonal give |tr| / 4 = cos(pi/4)
  CHECK(std::abs(fidelity(ComplexMatrix::Identity(4, 4), p.matrix) - std::sqrt(0.5)) <= 1e-14);
}

TEST_CASE("evolve orders events in time and sums durations") {
  const auto sys = SpinSystem::three_spin_chain(1.0);
  const PulseSequence a{3, "a", {HardPulse{1, Axis::x, 0.7}, Delay{0.3, {}}}, {}};
  const PulseSequence b{3, "b", {ShapedEvolution{0.2, {{2, Axis::y, 1.5}}}, HardPulse{3, Axis::z, 1.1}}, {}};
  const auto ua = evolve(a, sys), ub = evolve(b, sys);
  const auto ab = evolve(sequences::concat(a, b), sys);
  CHECK(max_abs(ab.matrix - ub.matrix * ua.matrix) <= 1e-13);
  CHECK(ab.duration == ua.duration + ub.duration);

  const auto p1 = hard_pulse(Axis::x, 1, 3, 0.7);
  const auto d = oracle::eig_expm(drift_hamiltonian(sys), 0.3);
  CHECK(max_abs(ua.matrix - d * p1) <= 1e-13);

  const PulseSequence single{3, "s", {HardPulse{2, Axis::y, 0.4}}, {}};
  const auto chained = evolve(sequences::concat(single, PulseSequence{3, "t", {HardPulse{1, Axis::x, 0.9}}, {}}), sys);
  CHECK(chained.matrix == hard_pulse(Axis::x, 1, 3, 0.9) * hard_pulse(Axis::y, 2, 3, 0.4));
}

TEST_CASE("commuting events can be reordered") {
  const auto sys = SpinSystem::three_spin_chain(1.3);
  const PulseSequence fwd{3, "f", {Delay{0.4, {}}, HardPulse{1, Axis::z, 0.8}, Delay{0.1, {{1, 2}}}}, {}};
  const PulseSequence rev{3, "r", {Delay{0.1, {{1, 2}}}, HardPulse{1, Axis::z, 0.8}, Delay{0.4, {}}}, {}};
  CHECK(max_abs(evolve(fwd, sys).matrix - evolve(rev, sys).matrix) <= 1e-10);
}

TEST_CASE("evolve checks spins and dimensions") {
  const auto sys = SpinSystem::three_spin_chain(1.0);
  CHECK_THROWS_AS(evolve(PulseSequence{3, "x", {HardPulse{4, Axis::x, 1.0}}, {}}, sys), IndexError);
  CHECK_THROWS_AS(evolve(PulseSequence{2, "x", {}, {}}, sys), DimensionMismatch);
  CHECK_THROWS_AS(evolve(PulseSequence{3, "x", {Delay{-1.0, {}}}, {}}, sys), ContractViolation);
  CHECK_THROWS_AS(evolve(PulseSequence{3, "x", {ShapedEvolution{1.0, {{1, Axis::z, 1.0}}}}, {}}, sys),
                  ContractViolation);
}

TEST_CASE("propagators are unitary") {
  const auto sys = SpinSystem::three_spin_chain(1.0);
  const PulseSequence s{3, "u", {ShapedEvolution{2.0, {{1, Axis::x, 3.0}, {2, Axis::y, -1.0}}},
                                 HardPulse{2, Axis::x, 1.0}, Delay{7.0, {}}}, {}};
  const auto u = evolve(s, sys).matrix;
  CHECK(max_abs(u.adjoint() * u - ComplexMatrix::Identity(8, 8)) <= 1e-10);
}

TEST_CASE("fidelity properties") {
  std::mt19937_64 rng(kDefaultSeed + 3);
  const auto u = expm(random_hermitian(rng, 8), 1.0).matrix;
  const auto v = expm(random_hermitian(rng, 8), 1.0).matrix;
  CHECK(std::abs(fidelity(u, u) - 1.0) <= 1e-14);
  CHECK(fidelity(u, v) == fidelity(v, u));
  for (double phi : {0.3, 2.0, -1.7}) {
    const Complex ph = std::exp(Complex(0.0, phi));
    CHECK(std::abs(fidelity(u, ph * u) - 1.0) <= 1e-14);
    CHECK(std::abs(fidelity(ph * u, v) - fidelity(u, v)) <= 1e-15);
  }
  CHECK(std::abs(fidelity(u, v) - oracle::fidelity(u, v)) <= 1e-15);
  CHECK_THROWS_AS(fidelity(u, ComplexMatrix::Identity(4, 4)), DimensionMismatch);
}
