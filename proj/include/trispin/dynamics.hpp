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

#include <span>

#include "trispin/core.hpp"
#include "trispin/pulse_sequence.hpp"
#include "trispin/spin_system.hpp"

/// Hamiltonians, exact propagators and sequence evolution.
///
/// Units: Hz for couplings and rf amplitudes, seconds for durations, radians
/// for angles. Hamiltonian matrices are in rad/s (the 2*pi lives inside).
namespace trispin::dynamics {

struct Propagator {
  ComplexMatrix matrix;
  double duration = 0.0;  // s
};

/// 2*pi sum_{i<j} J_ij I_iz I_jz + 2*pi sum_i offset_i I_iz.
ComplexMatrix drift_hamiltonian(const SpinSystem& sys);

/// Drift with the listed pairs' couplings removed (ideal decoupling).
ComplexMatrix drift_hamiltonian(const SpinSystem& sys,
                                std::span<const sequences::SpinPair> off_pairs);

/// sum 2*pi*amplitude*I_{spin,axis}.
ComplexMatrix control_hamiltonian(std::span<const RfField> fields, int n);

/// exp(G) for a general square complex matrix. Scaling and squaring around a
/// degree-13 Pade approximant; deterministic.
ComplexMatrix exp_matrix(const ComplexMatrix& generator);

/// exp(-i H t). H must be Hermitian to 1e-10 relative to max(1, |H|max),
/// otherwise ContractViolation. Diagonal H takes an entrywise fast path.
Propagator expm(const ComplexMatrix& hamiltonian, double t);

/// exp(-i angle I_{spin,axis}) in closed form.
ComplexMatrix hard_pulse(opalg::Axis axis, int spin, int n, double angle);

ComplexMatrix event_propagator(const sequences::PulseEvent& event,
                               const SpinSystem& sys);

/// U_N ... U_2 U_1 over the sequence's events; duration is the sum of event
/// durations. Throws DimensionMismatch if seq.n != sys.spins().
Propagator evolve(const sequences::PulseSequence& seq, const SpinSystem& sys);

/// |tr(U^dagger V)| / dim; global-phase invariant.
double fidelity(const ComplexMatrix& u, const ComplexMatrix& v);

}  // namespace trispin::dynamics
