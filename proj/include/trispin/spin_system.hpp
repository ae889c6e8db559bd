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

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "trispin/opalg.hpp"

namespace trispin::dynamics {

/// Weakly coupled heteronuclear spins in the rotating frame. Couplings and
/// offsets are in Hz; indices are 1-based.
class SpinSystem {
 public:
  /// Throws ContractViolation unless couplings is square, symmetric, has a
  /// zero diagonal and offsets has matching length.
  SpinSystem(Eigen::MatrixXd couplings_hz, Eigen::VectorXd offsets_hz);

  static SpinSystem uncoupled(int n);
  /// Linear chain with equal nearest-neighbour coupling j_hz.
  static SpinSystem chain(int n, double j_hz);
  /// J12 = J23 = j_hz, J13 = 0, zero offsets.
  static SpinSystem three_spin_chain(double j_hz) { return chain(3, j_hz); }

  int spins() const { return static_cast<int>(offsets_.size()); }
  Eigen::Index dim() const { return Eigen::Index{1} << spins(); }
  double coupling(int i, int j) const;
  double offset(int k) const;
  const Eigen::MatrixXd& couplings() const { return couplings_; }
  const Eigen::VectorXd& offsets() const { return offsets_; }

  /// Pairs (i < j) with nonzero coupling.
  std::vector<std::pair<int, int>> coupled_pairs() const;

 private:
  Eigen::MatrixXd couplings_;
  Eigen::VectorXd offsets_;
};

/// Resonant rf field on one spin: control term 2*pi*amplitude_hz*I_{spin,axis}.
struct RfField {
  int spin = 1;
  opalg::Axis axis = opalg::Axis::x;  // x or y
  double amplitude_hz = 0.0;

  bool operator==(const RfField&) const = default;
};

}  // namespace trispin::dynamics
