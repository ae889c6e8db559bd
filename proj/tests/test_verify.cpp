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

#include <cmath>

#include "oracles.hpp"
#include "trispin/opalg.hpp"
#include "trispin/sequences.hpp"
#include "trispin/verify.hpp"

using namespace trispin;
using namespace trispin::verify;
using dynamics::evolve;
using sequences::canonical_system;

namespace {

ComplexMatrix skew(const char* ops, double scale) {
  return Complex(0.0, -scale) * oracle::product(ops);
}

ComplexMatrix evolved(const sequences::PulseSequence& seq) {
  return evolve(seq, canonical_system(1.0)).matrix;
}

double worst(const std::vector<Residual>& rs) {
  double w = 0.0;
  for (const auto& r : rs) w = std::max(w, r.value);
  return w;
}

}  // namespace

TEST_CASE("verify_sequence examples") {
  const auto sys = canonical_system(1.0);
  const auto geo = verify_sequence(sequences::build_geodesic(kTwoPi, 1.0), sys,
                                   oracle::trilinear_zzz(kTwoPi));
  CHECK(geo.passed);
  CHECK(geo.achieved >= 1 - 1e-9);
  CHECK(geo.duration_s == Catch::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));

  const auto empty = verify_sequence(sequences::PulseSequence{3, "empty", {}, {}}, sys,
                                     ComplexMatrix::Identity(8, 8));
  CHECK(empty.passed);
  CHECK(empty.achieved == 1.0);

  const auto conv = verify_sequence(sequences::build_conventional(kPi, 1.0), sys,
                                    oracle::trilinear_zzz(kPi));
  CHECK(conv.passed);
  REQUIRE(conv.residuals.size() == 1);
  CHECK(conv.residuals[0].name == "phase_aligned_maxabs");
  CHECK(conv.residuals[0].value <= 1e-9);

  const auto wrong = verify_sequence(sequences::PulseSequence{3, "id", {}, {}}, sys, oracle::swap13());
  CHECK_FALSE(wrong.passed);
  CHECK(wrong.achieved < 0.9);

  CHECK_THROWS_AS(verify_sequence(sequences::PulseSequence{3, "x", {}, {}}, sys,
                                  ComplexMatrix::Identity(4, 4)),
                  DimensionMismatch);
}

TEST_CASE("report pass rule and JSON layout") {
  VerificationReport r{"r", 0.9, 0.95, 1.5, false, {{"a", 0.1, 0.2}}};
  r.finalize();
  CHECK(r.passed);
  r.residuals.push_back({"b", 0.3, 0.2});
  r.finalize();
  CHECK_FALSE(r.passed);
  r.residuals.pop_back();
  r.achieved = 0.8;
  r.finalize();
  CHECK_FALSE(r.passed);

  const auto j = to_json(VerificationReport{"lbl", 0.5, 0.75, 2.0, true, {{"x", 0.25, 1.0}}});
  CHECK(j.dump() ==
        R"({"label":"lbl","passed":true,"achieved":0.75,"target_fidelity":0.5,)"
        R"("duration_s":2.0,"residuals":{"x":0.25}})");

  const auto rr = residual_report("s", {{"p", 1e-3, 1e-2}, {"q", 1e-4, 1e-3}});
  CHECK(rr.passed);
  CHECK(rr.achieved == 1.0 - 1e-3);
  CHECK(rr.target_fidelity == 1.0 - 1e-3);
}

TEST_CASE("coherence transfer check") {
  CHECK(check_coherence_transfer(evolved(sequences::build_vf(1.0))).passed);
  CHECK(check_coherence_transfer(evolved(sequences::build_swap13(1.0))).passed);
  const auto id = check_coherence_transfer(ComplexMatrix::Identity(8, 8));
  CHECK_FALSE(id.passed);
  CHECK(id.residuals[0].value == Catch::Approx(0.5));
  CHECK_THROWS_AS(check_coherence_transfer(ComplexMatrix::Identity(4, 4)), DimensionMismatch);
}

TEST_CASE("swap check") {
  const auto u = evolved(sequences::build_swap13(1.0));
  const auto r = check_swap(u);
  CHECK(r.passed);
  CHECK(worst(r.residuals) <= 1e-9);
  CHECK_FALSE(check_swap(ComplexMatrix::Identity(8, 8)).passed);
  const auto exact = check_swap(oracle::swap13());
  CHECK(exact.passed);
  // Kronecker factors multiply in a different order on the two sides, so
  // only the basis-state residual is exactly zero.
  CHECK(exact.residuals[0].value <= 1e-15);
  CHECK(exact.residuals[1].value == 0.0);
  CHECK(check_swap(u, 12345).passed);
  CHECK_THROWS_AS(check_swap(ComplexMatrix::Identity(2, 2)), DimensionMismatch);
}

TEST_CASE("swap and coherence-transfer checks agree on swap13") {
  const auto u = evolved(sequences::build_swap13(1.0));
  CHECK(check_swap(u).passed == check_coherence_transfer(u).passed);
}

TEST_CASE("checks are deterministic for a fixed seed") {
  const auto u = evolved(sequences::build_swap13(1.0));
  const auto a = check_swap(u, 99), b = check_swap(u, 99);
  REQUIRE(a.residuals.size() == b.residuals.size());
  for (std::size_t k = 0; k < a.residuals.size(); ++k)
    CHECK(a.residuals[k].value == b.residuals[k].value);
  CHECK(period_identity_vectors(5, 7) == period_identity_vectors(5, 7));
  CHECK(period_identity_vectors(5, 7) != period_identity_vectors(5, 8));
}

TEST_CASE("geodesic generators match their product-operator forms") {
  const auto& g = geodesic_generators();
  CHECK(max_abs(g.a - skew("zxi", 1.0) - skew("ixz", 1.0)) <= 1e-15);
  CHECK(max_abs(g.b - skew("zyi", 1.0) - skew("iyz", 1.0)) <= 1e-15);
  CHECK(max_abs(g.c - skew("zzz", 2.0) - skew("izi", 0.5)) <= 1e-15);
  CHECK(max_abs(g.d - skew("zzz", 4.0)) <= 1e-15);
}

TEST_CASE("so(3) relations") {
  const auto& g = geodesic_generators();
  const auto rs = check_so3_relations(g.a, g.b, g.c, g.d);
  REQUIRE(rs.size() == 5);
  for (const auto& r : rs) {
    INFO(r.name);
    CHECK(r.value <= 1e-12);
  }
  const auto triple = check_so3_relations(skew("xii", 1.0), skew("yzz", 4.0), skew("zzz", 4.0));
  REQUIRE(triple.size() == 3);
  CHECK(worst(triple) <= 1e-12);
  const ComplexMatrix zero = ComplexMatrix::Zero(8, 8);
  CHECK(worst(check_so3_relations(zero, zero, zero)) == 0.0);
  CHECK_THROWS_AS(check_so3_relations(zero, ComplexMatrix::Zero(4, 4), zero), DimensionMismatch);
}

TEST_CASE("period identity") {
  CHECK(check_period_identity({kTwoPi, 0.0, 0.0}) <= 1e-9);
  CHECK(check_period_identity({0.0, kTwoPi, 0.0}) <= 1e-9);
  CHECK(check_period_identity({0.0, 0.0, kTwoPi}) <= 1e-9);
  CHECK(check_period_identity({1.0, 2.0, 3.0}) <= 1e-9);  // rescaled internally
  CHECK_THROWS_AS(check_period_identity({0.0, 0.0, 0.0}), ContractViolation);

  const auto vs = period_identity_vectors(20);
  REQUIRE(vs.size() == 20);
  for (const auto& v : vs) {
    const double norm2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    CHECK(std::abs(norm2 - kTwoPi * kTwoPi) <= 1e-12 * kTwoPi * kTwoPi);
    CHECK(check_period_identity(v) <= 1e-9);
  }
}

TEST_CASE("period identity oracle") {
  // exp(2pi C) exp(alpha . (A,B,C)) evaluated with the eigendecomposition oracle.
  const auto& g = geodesic_generators();
  for (const auto& v : period_identity_vectors(5, 3)) {
    const ComplexMatrix gen = v[0] * g.a + v[1] * g.b + v[2] * g.c;
    const ComplexMatrix lhs = oracle::eig_expm(kI * kTwoPi * g.c, 1.0) *
                              oracle::eig_expm(kI * gen, 1.0);
    CHECK(oracle::max_abs(lhs - ComplexMatrix::Identity(8, 8)) <= 1e-9);
  }
}

TEST_CASE("listed commutation relations") {
  const auto r = check_listed_commutators();
  REQUIRE(r.listed.size() == 3);
  CHECK(r.listed[0].holds);
  CHECK(r.listed[0].residual <= 1e-12);
  CHECK_FALSE(r.listed[0].duplicate_of.has_value());
  CHECK_FALSE(r.listed[1].duplicate_of.has_value());
  REQUIRE(r.listed[2].duplicate_of.has_value());
  CHECK(*r.listed[2].duplicate_of == 1);
  CHECK(r.completing.holds);
  CHECK(r.completing.text == "[2I2yI3z, 4I1zI2zI3z] = i2I1zI2x");
  REQUIRE(r.sandwich.size() == 5);
  for (const auto& [theta, res] : r.sandwich) CHECK(res <= 1e-9);
  CHECK(r.passed);
}

TEST_CASE("sandwich identity against the oracle") {
  for (double theta : {kPi / 3, kTwoPi}) {
    const auto outer = oracle::eig_expm(oracle::product("zxi"), kPi);
    const auto inner = oracle::eig_expm(oracle::product("iyz"), theta / 2);
    CHECK(oracle::max_abs(outer * inner * outer.adjoint() - oracle::trilinear_zzz(theta)) <= 1e-12);
  }
}

TEST_CASE("extremal conditions at theta = 2pi") {
  const auto r = check_extremal(kTwoPi, 1.0, 10000);
  CHECK(r.passed);
  CHECK_FALSE(r.skipped);
  CHECK(r.costate_residual <= 1e-5);
  CHECK(r.trajectory_residual <= 1e-5);
  CHECK(r.control_law_residual <= 1e-10);
  CHECK(r.endpoint_fidelity >= 1 - 1e-9);
  CHECK(r.coset_fidelity >= 1 - 1e-9);
  CHECK(r.step == Catch::Approx(std::sqrt(3.0) / 2 / 10000).epsilon(1e-12));
  CHECK(r.costate_constant == Catch::Approx(r.costate_residual / (r.step * r.step)));
}

TEST_CASE("extremal residuals are second order in the step") {
  for (double theta : {kPi / 2, kTwoPi, 3 * kPi}) {
    const auto coarse = check_extremal(theta, 1.0, 2000);
    const auto fine = check_extremal(theta, 1.0, 4000);
    INFO("theta " << theta);
    CHECK(coarse.costate_residual / fine.costate_residual >= 3.0);
    CHECK(coarse.trajectory_residual / fine.trajectory_residual >= 3.0);
    CHECK(fine.endpoint_fidelity >= 1 - 1e-9);
  }
}

TEST_CASE("extremal check edge cases") {
  const auto r = check_extremal(0.0, 1.0, 1000);
  CHECK(r.skipped);
  CHECK(r.passed);
  CHECK_THROWS_AS(check_extremal(kTwoPi, 1.0, 999), ContractViolation);
  const auto a = check_extremal(kPi, 2.0, 1000), b = check_extremal(kPi, 2.0, 1000);
  CHECK(a.costate_residual == b.costate_residual);
  CHECK(a.trajectory_residual == b.trajectory_residual);
  // h = T/1000 is too coarse for the 1e-5 finite-difference bound.
  CHECK(a.costate_residual > 1e-5);
  CHECK_FALSE(a.passed);
  CHECK(check_extremal(kPi, 2.0, 1000, 1e-3).passed);
}

TEST_CASE("decoupling identity") {
  const auto sys = canonical_system(1.0);
  CHECK(check_decoupling_identity(sys, 3, 0.5) <= 1e-9);
  CHECK(check_decoupling_identity(sys, 1, 1.7) <= 1e-9);
  CHECK(check_decoupling_identity(sys, 2, 0.3) <= 1e-9);

  Eigen::MatrixXd j(4, 4);
  j << 0, 2.0, 0.5, 0, 2.0, 0, 1.0, -3.0, 0.5, 1.0, 0, 0.7, 0, -3.0, 0.7, 0;
  const dynamics::SpinSystem net(j, Eigen::Vector4d(3.0, 0.0, -1.0, 0.0));
  CHECK(check_decoupling_identity(net, 2, 0.41) <= 1e-9);
  CHECK(check_decoupling_identity(net, 4, 0.9) <= 1e-9);
}
