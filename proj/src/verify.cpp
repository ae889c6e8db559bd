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

#include "trispin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "trispin/opalg.hpp"
#include "trispin/sequences.hpp"

namespace trispin::verify {

using dynamics::exp_matrix;
using dynamics::expm;
using opalg::Axis;
using opalg::commutator;
using opalg::embed;

namespace {

ComplexMatrix op(std::string_view text) {
  return opalg::realize(opalg::parse_term(text, 3));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void require_dim(const ComplexMatrix& u, Eigen::Index dim, const char* who) {
  if (u.rows() != dim || u.cols() != dim)
    throw DimensionMismatch(std::string(who) + ": expected an " +
                            std::to_string(dim) + "x" + std::to_string(dim) +
                            " matrix");
}

double phase_aligned_error(const ComplexMatrix& u, const ComplexMatrix& target) {
  const Complex overlap = (target.adjoint() * u).trace();
  const Complex phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
  return max_abs(u / phase - target);
}

ComplexMatrix random_hermitian_2x2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix x(2, 2);
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) {
      const double re = dist(rng);
      const double im = dist(rng);
      x(i, j) = Complex(re, im);
    }
  return (x + x.adjoint()) / 2.0;
}

}  // namespace

void VerificationReport::finalize() {
  passed = achieved >= target_fidelity &&
           std::all_of(residuals.begin(), residuals.end(),
                       [](const Residual& r) { return r.ok(); });
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json out;
  out["label"] = report.label;
  out["passed"] = report.passed;
  out["achieved"] = report.achieved;
  out["target_fidelity"] = report.target_fidelity;
  out["duration_s"] = report.duration_s;
  nlohmann::ordered_json residuals = nlohmann::ordered_json::object();
  for (const auto& r : report.residuals) residuals[r.name] = r.value;
  out["residuals"] = std::move(residuals);
  return out;
}

VerificationReport residual_report(std::string label,
                                   std::vector<Residual> residuals,
                                   double duration_s) {
  VerificationReport r;
  r.label = std::move(label);
  r.duration_s = duration_s;
  double worst = 0.0;
  double tightest = 1.0;
  for (const auto& res : residuals) {
    worst = std::max(worst, res.value);
    tightest = std::min(tightest, res.tolerance);
  }
  r.residuals = std::move(residuals);
  r.achieved = 1.0 - worst;
  r.target_fidelity = 1.0 - tightest;
  r.finalize();
  return r;
}

VerificationReport verify_sequence(const sequences::PulseSequence& seq,
                                   const dynamics::SpinSystem& sys,
                                   const ComplexMatrix& target, double tol) {
  require_dim(target, sys.dim(), "verify_sequence");
  const auto u = dynamics::evolve(seq, sys);
  VerificationReport r;
  r.label = seq.label;
  r.target_fidelity = 1.0 - tol;
  r.achieved = dynamics::fidelity(u.matrix, target);
  r.duration_s = u.duration;
  r.residuals.push_back(
      {"phase_aligned_maxabs", phase_aligned_error(u.matrix, target), std::sqrt(tol)});
  r.finalize();
  return r;
}

VerificationReport check_coherence_transfer(const ComplexMatrix& u, double tol) {
  require_dim(u, 8, "check_coherence_transfer");
  const ComplexMatrix i1x = embed(Axis::x, 1, 3), i1y = embed(Axis::y, 1, 3);
  const ComplexMatrix i3x = embed(Axis::x, 3, 3), i3y = embed(Axis::y, 3, 3);
  const ComplexMatrix i1m = i1x - kI * i1y, i3m = i3x - kI * i3y;
  return residual_report(
      "coherence_transfer",
      {{"transfer_x", max_abs(u * i1x * u.adjoint() - i3x), tol},
       {"transfer_y", max_abs(u * i1y * u.adjoint() - i3y), tol},
       {"transfer_minus", max_abs(u * i1m * u.adjoint() - i3m), tol}});
}

VerificationReport check_swap(const ComplexMatrix& u, unsigned long long seed,
                              double tol) {
  require_dim(u, 8, "check_swap");
  std::mt19937_64 rng(seed);
  double conjugation = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = random_hermitian_2x2(rng);
    const ComplexMatrix b = random_hermitian_2x2(rng);
    const ComplexMatrix c = random_hermitian_2x2(rng);
    const ComplexMatrix lhs = u * kron(kron(a, b), c) * u.adjoint();
    conjugation = std::max(conjugation, max_abs(lhs - kron(kron(c, b), a)));
  }

  double basis = 0.0;
  for (int s = 0; s < 8; ++s) {
    const int a = (s >> 2) & 1, b = (s >> 1) & 1, c = s & 1;
    const int t = (c << 2) | (b << 1) | a;
    const Eigen::VectorXcd column = u.col(s);
    const Complex amp = column(t);
    Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(8);
    expected(t) = std::abs(amp) > 0.0 ? amp / std::abs(amp) : Complex(1.0, 0.0);
    basis = std::max(basis, (column - expected).cwiseAbs().maxCoeff());
  }
  return residual_report("swap13", {{"conjugation_maxabs", conjugation, tol},
                                    {"basis_state_maxabs", basis, tol}});
}

const GeodesicGenerators& geodesic_generators() {
  static const GeodesicGenerators g = [] {
    const ComplexMatrix zxi = op("0.5 I1z I2x"), ixz = op("0.5 I2x I3z");
    const ComplexMatrix zyi = op("0.5 I1z I2y"), iyz = op("0.5 I2y I3z");
    const ComplexMatrix zzz = op("0.25 I1z I2z I3z");
    const ComplexMatrix i2z = embed(Axis::z, 2, 3);
    return GeodesicGenerators{-kI * (zxi + ixz), -kI * (zyi + iyz),
                              -kI * (2.0 * zzz + i2z / 2.0), -kI * (4.0 * zzz)};
  }();
  return g;
}

double check_period_identity(const std::array<double, 3>& alpha) {
  const double norm =
      std::sqrt(alpha[0] * alpha[0] + alpha[1] * alpha[1] + alpha[2] * alpha[2]);
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw ContractViolation("check_period_identity: alpha must be a nonzero vector");
  const double s = kTwoPi / norm;
  const auto& g = geodesic_generators();
  const ComplexMatrix gen = (s * alpha[0]) * g.a + (s * alpha[1]) * g.b +
                            (s * alpha[2]) * g.c;
  const ComplexMatrix prod = exp_matrix(kTwoPi * g.c) * exp_matrix(gen);
  return max_abs(prod - ComplexMatrix::Identity(8, 8));
}

std::vector<std::array<double, 3>> period_identity_vectors(int count,
                                                        unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<std::array<double, 3>> out;
  while (static_cast<int>(out.size()) < count) {
    std::array<double, 3> v{};
    for (auto& x : v) x = dist(rng);
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (norm < 1e-3) continue;
    for (auto& x : v) x *= kTwoPi / norm;
    out.push_back(v);
  }
  return out;
}

std::vector<Residual> check_so3_relations(const ComplexMatrix& a,
                                          const ComplexMatrix& b,
                                          const ComplexMatrix& c,
                                          const std::optional<ComplexMatrix>& d,
                                          double tol) {
  std::vector<Residual> out{
      {"[A,B]-C", max_abs(commutator(a, b) - c), tol},
      {"[B,C]-A", max_abs(commutator(b, c) - a), tol},
      {"[C,A]-B", max_abs(commutator(c, a) - b), tol},
  };
  if (d) {
    out.push_back({"[A,D]+B", max_abs(commutator(a, *d) + b), tol});
    out.push_back({"[B,D]-A", max_abs(commutator(b, *d) - a), tol});
  }
  return out;
}

CommutatorReport check_listed_commutators(const std::vector<double>& thetas) {
  constexpr double kRelationTol = 1e-12;
  constexpr double kSandwichTol = 1e-9;
  const ComplexMatrix x = op("1 I1z I2x");        // 2 I1zI2x
  const ComplexMatrix y = op("1 I2y I3z");        // 2 I2yI3z
  const ComplexMatrix z = op("1 I1z I2z I3z");    // 4 I1zI2zI3z

  auto relation = [&](std::string text, const ComplexMatrix& lhs,
                      const ComplexMatrix& rhs) {
    ListedRelation r{std::move(text), max_abs(lhs - rhs), false, std::nullopt};
    r.holds = r.residual <= kRelationTol;
    return r;
  };

  CommutatorReport report;
  report.listed.push_back(relation("[2I1zI2x, 2I2yI3z] = i4I1zI2zI3z",
                                    commutator(x, y), kI * z));
  report.listed.push_back(relation("[4I1zI2zI3z, 2I1zI2x] = i2I2yI3z",
                                    commutator(z, x), kI * y));
  report.listed.push_back(relation("[4I1zI2zI3z, 2I1zI2x] = i2I2yI3z",
                                    commutator(z, x), kI * y));
  for (std::size_t i = 0; i < report.listed.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (report.listed[i].text == report.listed[j].text) {
        report.listed[i].duplicate_of = j;
        break;
      }
  report.completing = relation("[2I2yI3z, 4I1zI2zI3z] = i2I1zI2x",
                               commutator(y, z), kI * x);

  // exp(-i pi I1zI2x) = exp(-i (pi/2) X)
  const ComplexMatrix outer = expm((kPi / 2) * x, 1.0).matrix;
  bool sandwich_ok = true;
  for (double theta : thetas) {
    const ComplexMatrix inner = expm((theta / 4) * y, 1.0).matrix;
    const ComplexMatrix lhs = outer * inner * outer.adjoint();
    const ComplexMatrix rhs = expm((theta / 4) * z, 1.0).matrix;
    const double res = max_abs(lhs - rhs);
    sandwich_ok = sandwich_ok && res <= kSandwichTol;
    report.sandwich.emplace_back(theta, res);
  }

  report.passed = sandwich_ok && report.completing.holds &&
                  std::all_of(report.listed.begin(), report.listed.end(),
                              [](const ListedRelation& r) { return r.holds; });
  return report;
}

ExtremalReport check_extremal(double theta, double j_hz, int n_steps,
                              double fd_tol, double fid_tol) {
  if (n_steps < 1000)
    throw ContractViolation("check_extremal: n_steps must be >= 1000");
  const auto params = sequences::GeodesicParams::from_theta(theta, j_hz);

  ExtremalReport r;
  r.theta = theta;
  r.j_hz = j_hz;
  r.n_steps = n_steps;
  r.duration = params.duration;
  if (params.duration == 0.0) {
    r.skipped = true;
    r.passed = true;
    return r;
  }

  const auto& g = geodesic_generators();
  const double big_t = params.duration;
  const double beta = params.beta;
  const double rate = beta / big_t;
  const double h = big_t / n_steps;
  const double coupling = kTwoPi * j_hz;
  r.step = h;

  auto control = [&](double t) -> ComplexMatrix {
    return coupling * (g.a * std::cos(rate * t) - g.b * std::sin(rate * t));
  };
  auto costate = [&](double t) -> ComplexMatrix {
    return -control(t) - rate * g.d;
  };
  const ComplexMatrix drift_gen = rate * g.c + coupling * g.a;
  auto trajectory = [&](double t) -> ComplexMatrix {
    return exp_matrix((-rate * t) * g.c) * exp_matrix(t * drift_gen);
  };

  std::vector<ComplexMatrix> p(static_cast<std::size_t>(n_steps) + 1);
  for (int k = 0; k <= n_steps; ++k) p[static_cast<std::size_t>(k)] = trajectory(k * h);

  for (int k = 1; k < n_steps; ++k) {
    const double t = k * h;
    const ComplexMatrix hbar = control(t);
    const ComplexMatrix m_dot = (costate(t + h) - costate(t - h)) / (2 * h);
    r.costate_residual =
        std::max(r.costate_residual, max_abs(m_dot - commutator(hbar, costate(t))));

    const auto idx = static_cast<std::size_t>(k);
    const ComplexMatrix p_dot = (p[idx + 1] - p[idx - 1]) / (2 * h);
    r.trajectory_residual =
        std::max(r.trajectory_residual, max_abs(p_dot - hbar * p[idx]));
  }
  for (int k = 0; k <= n_steps; k += std::max(1, n_steps / 100)) {
    const double t = k * h;
    const ComplexMatrix rotated = coupling * exp_matrix((-rate * t) * g.c) * g.a *
                                  exp_matrix((rate * t) * g.c);
    r.control_law_residual =
        std::max(r.control_law_residual, max_abs(rotated - control(t)));
  }
  r.costate_constant = r.costate_residual / (h * h);
  r.trajectory_constant = r.trajectory_residual / (h * h);

  const ComplexMatrix& endpoint = p.back();
  r.endpoint_fidelity = dynamics::fidelity(endpoint, exp_matrix((theta / 2) * g.c));
  const ComplexMatrix k_local =
      dynamics::hard_pulse(Axis::z, 2, 3, -theta / 4);  // exp(i theta I2z / 4)
  r.coset_fidelity = dynamics::fidelity(
      k_local * endpoint,
      sequences::trilinear_target(theta, {Axis::z, Axis::z, Axis::z}));

  r.passed = r.costate_residual <= fd_tol && r.trajectory_residual <= fd_tol &&
             r.control_law_residual <= 1e-10 * std::max(1.0, coupling) &&
             r.endpoint_fidelity >= 1.0 - fid_tol &&
             r.coset_fidelity >= 1.0 - fid_tol;
  return r;
}

double check_decoupling_identity(const dynamics::SpinSystem& sys, int spin,
                                 double t) {
  const int n = sys.spins();
  const ComplexMatrix k = dynamics::hard_pulse(Axis::x, spin, n, kPi);
  const ComplexMatrix half = expm(dynamics::drift_hamiltonian(sys), t / 2).matrix;
  const ComplexMatrix u = half * k.adjoint() * half * k;

  std::vector<sequences::SpinPair> touching;
  for (const auto& p : sys.coupled_pairs())
    if (p.first == spin || p.second == spin) touching.push_back(p);
  const ComplexMatrix reduced =
      expm(dynamics::drift_hamiltonian(sys, touching), t).matrix;
  return 1.0 - dynamics::fidelity(u, reduced);
}

}  // namespace trispin::verify
