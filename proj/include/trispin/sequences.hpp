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
#include <string>
#include <string_view>

#include "trispin/dynamics.hpp"
#include "trispin/pulse_sequence.hpp"

/// Pulse sequences for trilinear propagators exp(-i theta I1a I2b I3c) on the
/// three-spin chain J12 = J23 = J, J13 = 0, and the gates built from them.
///
/// Every builder takes theta in [0, 4*pi] (kappa = theta / 2pi in [0, 2]) and
/// J > 0 in Hz, and throws ContractViolation otherwise. Builders that realize
/// a closed-form target evolve the result once and throw std::logic_error if
/// the fidelity falls below 1 - kBuilderTolerance.
namespace trispin::sequences {

using Axes = std::array<opalg::Axis, 3>;

inline constexpr double kBuilderTolerance = 1e-9;

/// Closed-form parameters of the time-optimal sequence.
struct GeodesicParams {
  double theta = 0.0;     // rad
  double kappa = 0.0;     // theta / 2pi
  double beta = 0.0;      // 2pi - theta/2, rad
  double duration = 0.0;  // T = sqrt(kappa(4 - kappa)) / 2J, s
  double nu_rf = 0.0;     // (2 - kappa) J / sqrt(kappa(4 - kappa)), Hz

  static GeodesicParams from_theta(double theta, double j_hz);
};

dynamics::SpinSystem canonical_system(double j_hz);

/// exp(-i theta I1a I2b I3c).
ComplexMatrix trilinear_target(double theta, const Axes& axes);
/// exp(-i 2pi (I1zI2zI3z + I1yI2zI3y + I1xI2zI3x)); maps I1- to I3-.
ComplexMatrix vf_target();
/// Permutation |abc> -> |cba>.
ComplexMatrix swap13_target();
/// diag(1, 1, 1, 1, 1, 1, 1, -1).
ComplexMatrix lambda2_target();
/// pi (1/2 - I1z)(1/2 - I2z)(1/2 - I3z); exp(-i H) reproduces lambda2_target().
ComplexMatrix lambda2_hamiltonian();

/// Decoupling route: spin 3 decoupled for exp(-i pi I1zI2x), spin 1 decoupled
/// for exp(-i theta I2yI3z / 2), then the first block undone.
/// Duration (2 + kappa) / 2J.
PulseSequence build_conventional(double theta, double j_hz);

/// Non-decoupled route exp(pi/2 A) exp(theta/2 B) exp(-pi/2 A) followed by an
/// ideal exp(i theta I2z / 4). Duration (1 + kappa) / 2J.
PulseSequence build_improved(double theta, double j_hz);

/// Time-optimal sequence
///   exp(-i pi/2 I2y) exp(-i(pi + beta/2) I2x)
///   exp(T(-i 2pi J (I1zI2z + I2zI3z) + i beta/T I2x)) exp(i pi/2 I2y),
/// duration T = sqrt(kappa(4 - kappa)) / 2J. theta = 0 gives an empty
/// sequence.
PulseSequence build_geodesic(double theta, double j_hz);

/// Geodesic core conjugated by hard pulses taking I_kz to I_k,axes[k].
PulseSequence build_trilinear(double theta, double j_hz, const Axes& axes);

/// V_F = U1 U2 U3 from three 2pi trilinear blocks (zzz, yzy, xzx).
/// metadata["beta_sign"] is "standard" (beta = 2pi - theta/2) or "negated",
/// whichever reproduced the blocks; the standard sign is tried first.
PulseSequence build_vf(double j_hz);

/// V_F followed by the ideal rotation exp(i pi/2 I2z).
PulseSequence build_swap13(double j_hz);

/// Replaces each Delay that lists off_pairs by the exact refocused form
///   Delay(tau/2) . pi_x(m) . Delay(tau/2) . pi_x(m)
/// where m is the spin whose nonzero couplings are exactly the omitted ones
/// (smallest index if several qualify). Omitted pairs with zero coupling are
/// ignored. Throws UnsupportedPattern when no such spin exists or it carries
/// a nonzero offset.
PulseSequence expand_refocusing(const PulseSequence& seq,
                                const dynamics::SpinSystem& sys);

/// Rewrites z hard pulses as x/y pulses: exp(-i phi I_z) =
/// exp(-i pi/2 I_x) exp(-i phi I_y) exp(i pi/2 I_x).
PulseSequence compile_z_pulses(const PulseSequence& seq);

/// Parses "xyz"-style axis triples (each of x, y, z).
Axes parse_axes(std::string_view text);

}  // namespace trispin::sequences
