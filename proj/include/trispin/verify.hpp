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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "trispin/dynamics.hpp"
#include "trispin/pulse_sequence.hpp"

/// Numerical checks of propagators, conjugation properties and the
/// extremality conditions of the geodesic control law. All pseudo-random
/// inputs derive from an explicit seed (kDefaultSeed unless given).
namespace trispin::verify {

struct Residual {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;

  bool ok() const { return value <= tolerance; }
};

/// passed == (achieved >= target_fidelity && every residual ok()).
/// For conjugation-only checks achieved is 1 - (largest residual) and
/// target_fidelity is 1 - tol, so the same rule applies.
struct VerificationReport {
  std::string label;
  double target_fidelity = 0.0;
  double achieved = 0.0;
  double duration_s = 0.0;
  bool passed = false;
  std::vector<Residual> residuals;

  /// Recomputes passed from the other fields.
  void finalize();
};

/// {label, passed, achieved, target_fidelity, duration_s, residuals:{name: value}}
nlohmann::ordered_json to_json(const VerificationReport& report);

/// Evolves seq and compares with target (fidelity >= 1 - tol). Also reports
/// the max-abs entry error after aligning global phase (tolerance sqrt(tol)).
VerificationReport verify_sequence(const sequences::PulseSequence& seq,
                                   const dynamics::SpinSystem& sys,
                                   const ComplexMatrix& target,
                                   double tol = 1e-9);

/// |U I1x U^dag - I3x|, |U I1y U^dag - I3y| (max-abs), each <= tol.
VerificationReport check_coherence_transfer(const ComplexMatrix& u,
                                            double tol = 1e-9);

/// U (A (x) B (x) C) U^dag = C (x) B (x) A for 10 seeded Hermitian triples,
/// and U|abc> proportional to |cba> for the 8 computational basis states.
VerificationReport check_swap(const ComplexMatrix& u,
                              unsigned long long seed = kDefaultSeed,
                              double tol = 1e-9);

/// A = -i(I1zI2x + I2xI3z), B = -i(I1zI2y + I2yI3z),
/// C = -i(2 I1zI2zI3z + I2z/2), D = -4i I1zI2zI3z.
struct GeodesicGenerators {
  ComplexMatrix a, b, c, d;
};
const GeodesicGenerators& geodesic_generators();

/// |exp(2pi C) exp(a1 A + a2 B + a3 C) - 1|max after rescaling alpha to
/// Euclidean norm 2pi. Throws ContractViolation for a zero vector.
double check_period_identity(const std::array<double, 3>& alpha);

/// Seeded alpha vectors of norm 2pi for the period identity battery.
std::vector<std::array<double, 3>> period_identity_vectors(
    int count, unsigned long long seed = kDefaultSeed);

/// Residuals of [A,B]-C, [B,C]-A, [C,A]-B, and with D given also
/// [A,D]+B and [B,D]-A.
std::vector<Residual> check_so3_relations(const ComplexMatrix& a,
                                          const ComplexMatrix& b,
                                          const ComplexMatrix& c,
                                          const std::optional<ComplexMatrix>& d =
                                              std::nullopt,
                                          double tol = 1e-12);

struct ListedRelation {
  std::string text;
  double residual = 0.0;
  bool holds = false;
  /// Index of an earlier identical relation, when the listing repeats one.
  std::optional<std::size_t> duplicate_of;
};

struct CommutatorReport {
  std::vector<ListedRelation> listed;
  /// Closing relation of the so(3) triple, absent from the listed ones.
  ListedRelation completing;
  /// (theta, residual) of exp(-i pi I1zI2x) exp(-i theta I2yI3z/2)
  /// exp(i pi I1zI2x) - exp(-i theta I1zI2zI3z), max-abs.
  std::vector<std::pair<double, double>> sandwich;
  bool passed = false;
};

/// The commutators behind the decoupling construction, evaluated as listed
/// (one of them twice), plus the sandwich identity on a theta grid.
CommutatorReport check_listed_commutators(const std::vector<double>& thetas = {
    kPi / 2, kPi, 2 * kPi, 3 * kPi, 4 * kPi});

struct ExtremalReport {
  double theta = 0.0;
  double j_hz = 0.0;
  int n_steps = 0;
  double step = 0.0;      // h = T / n_steps
  double duration = 0.0;  // T
  bool skipped = false;   // T == 0

  /// max_k |(M(t+h) - M(t-h)) / 2h - [H(t), M(t)]|
  double costate_residual = 0.0;
  double costate_constant = 0.0;  // residual / h^2
  /// max_k |(P(t+h) - P(t-h)) / 2h - H(t) P(t)|
  double trajectory_residual = 0.0;
  double trajectory_constant = 0.0;
  /// max_k |2pi J exp(-beta C t/T) A exp(beta C t/T) - H(t)|
  double control_law_residual = 0.0;
  double endpoint_fidelity = 0.0;  // fidelity(P(T), exp(theta C / 2))
  double coset_fidelity = 0.0;     // fidelity(exp(i theta I2z/4) P(T), U_F)
  bool passed = false;
};

/// Checks the geodesic control law H(t) = 2pi J (A cos(beta t/T) - B sin(beta t/T)),
/// costate M(t) = -H(t) - (beta/T) D and trajectory
/// P(t) = exp(-beta C t/T) exp((beta C/T + 2pi J A) t) on t_k = k T / n_steps.
/// Finite-difference residuals must be <= fd_tol, endpoint fidelities
/// >= 1 - fid_tol. Throws ContractViolation for n_steps < 1000.
ExtremalReport check_extremal(double theta, double j_hz, int n_steps,
                              double fd_tol = 1e-5, double fid_tol = 1e-9);

/// exp(-i H t/2) k^-1 exp(-i H t/2) k versus exp(-i H_A t), k = pi_x on spin m,
/// H_A the drift without spin m's couplings. Returns 1 - fidelity.
double check_decoupling_identity(const dynamics::SpinSystem& sys, int spin,
                                 double t);

/// Named scalar checks as a report, e.g. for the self-test.
VerificationReport residual_report(std::string label,
                                   std::vector<Residual> residuals,
                                   double duration_s = 0.0);

}  // namespace trispin::verify
