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

#include "trispin/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace trispin::dynamics {

using opalg::Axis;

namespace {

// m_k = +1/2 for bit 0, -1/2 for bit 1; spin 1 is the most significant bit.
double spin_z(Eigen::Index state, int k, int n) {
  return ((state >> (n - k)) & 1) ? -0.5 : 0.5;
}

bool is_off(std::span<const sequences::SpinPair> off_pairs, int i, int j) {
  return std::any_of(off_pairs.begin(), off_pairs.end(),
                     [&](const sequences::SpinPair& p) {
                       return (p.first == i && p.second == j) ||
                              (p.first == j && p.second == i);
                     });
}

}  // namespace

ComplexMatrix drift_hamiltonian(const SpinSystem& sys) {
  return drift_hamiltonian(sys, {});
}

ComplexMatrix drift_hamiltonian(
    const SpinSystem& sys, std::span<const sequences::SpinPair> off_pairs) {
  const int n = sys.spins();
  for (const auto& [i, j] : off_pairs)
    if (i < 1 || i > n || j < 1 || j > n)
      throw IndexError("drift_hamiltonian: decoupled pair (" +
                       std::to_string(i) + "," + std::to_string(j) +
                       ") outside the spin system");

  const Eigen::Index dim = sys.dim();
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    double e = 0.0;
    for (int i = 1; i <= n; ++i) {
      e += sys.offset(i) * spin_z(s, i, n);
      for (int j = i + 1; j <= n; ++j) {
        if (is_off(off_pairs, i, j)) continue;
        e += sys.coupling(i, j) * spin_z(s, i, n) * spin_z(s, j, n);
      }
    }
    h(s, s) = kTwoPi * e;
  }
  return h;
}

ComplexMatrix control_hamiltonian(std::span<const RfField> fields, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (const auto& f : fields) {
    if (f.axis != Axis::x && f.axis != Axis::y)
      throw ContractViolation("control_hamiltonian: rf phase must be x or y");
    if (!std::isfinite(f.amplitude_hz))
      throw ContractViolation("control_hamiltonian: rf amplitude not finite");
    h += (kTwoPi * f.amplitude_hz) * opalg::embed(f.axis, f.spin, n);
  }
  return h;
}

ComplexMatrix hard_pulse(Axis axis, int spin, int n, double angle) {
  if (axis == Axis::identity)
    throw ContractViolation("hard_pulse: axis must be x, y or z");
  // (2 I_alpha)^2 = 1, so exp(-i phi I_alpha) = cos(phi/2) - 2i sin(phi/2) I_alpha.
  const ComplexMatrix op = opalg::embed(axis, spin, n);
  const Eigen::Index dim = op.rows();
  return std::cos(angle / 2) * ComplexMatrix::Identity(dim, dim) +
         Complex(0.0, -2.0 * std::sin(angle / 2)) * op;
}

ComplexMatrix event_propagator(const sequences::PulseEvent& event,
                               const SpinSystem& sys) {
  const int n = sys.spins();
  return std::visit(
      [&](const auto& e) -> ComplexMatrix {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, sequences::HardPulse>) {
          return hard_pulse(e.axis, e.spin, n, e.angle);
        } else if constexpr (std::is_same_v<T, sequences::Delay>) {
          return expm(drift_hamiltonian(sys, e.off_pairs), e.duration).matrix;
        } else {
          ComplexMatrix h = drift_hamiltonian(sys) + control_hamiltonian(e.rf, n);
          return expm(h, e.duration).matrix;
        }
      },
      event);
}

Propagator evolve(const sequences::PulseSequence& seq, const SpinSystem& sys) {
  if (seq.n != sys.spins())
    throw DimensionMismatch("evolve: sequence is for " + std::to_string(seq.n) +
                            " spins, system has " +
                            std::to_string(sys.spins()));
  seq.validate();
  Propagator out{ComplexMatrix::Identity(sys.dim(), sys.dim()), 0.0};
  for (const auto& event : seq.events) {
    out.matrix = event_propagator(event, sys) * out.matrix;
    out.duration += sequences::event_duration(event);
  }
  return out;
}

double fidelity(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols())
    throw DimensionMismatch("fidelity: operands differ in dimension");
  return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
}

}  // namespace trispin::dynamics
