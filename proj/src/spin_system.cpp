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

#include "trispin/spin_system.hpp"

#include <cmath>
#include <string>

namespace trispin::dynamics {

SpinSystem::SpinSystem(Eigen::MatrixXd couplings_hz, Eigen::VectorXd offsets_hz)
    : couplings_(std::move(couplings_hz)), offsets_(std::move(offsets_hz)) {
  const auto n = offsets_.size();
  if (n < 1) throw ContractViolation("SpinSystem: need at least one spin");
  if (n > 12) throw ContractViolation("SpinSystem: at most 12 spins");
  if (couplings_.rows() != n || couplings_.cols() != n)
    throw ContractViolation("SpinSystem: coupling matrix must be n x n");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!std::isfinite(offsets_(i)))
      throw ContractViolation("SpinSystem: offsets must be finite");
    if (couplings_(i, i) != 0.0)
      throw ContractViolation("SpinSystem: J_ii must be zero");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!std::isfinite(couplings_(i, j)))
        throw ContractViolation("SpinSystem: couplings must be finite");
      if (couplings_(i, j) != couplings_(j, i))
        throw ContractViolation("SpinSystem: coupling matrix must be symmetric");
    }
  }
}

SpinSystem SpinSystem::uncoupled(int n) {
  if (n < 1) throw ContractViolation("SpinSystem: need at least one spin");
  return SpinSystem(Eigen::MatrixXd::Zero(n, n), Eigen::VectorXd::Zero(n));
}

SpinSystem SpinSystem::chain(int n, double j_hz) {
  if (n < 1) throw ContractViolation("SpinSystem: need at least one spin");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) j(k, k + 1) = j(k + 1, k) = j_hz;
  return SpinSystem(std::move(j), Eigen::VectorXd::Zero(n));
}

double SpinSystem::coupling(int i, int j) const {
  if (i < 1 || i > spins() || j < 1 || j > spins())
    throw IndexError("SpinSystem::coupling: index out of range");
  return couplings_(i - 1, j - 1);
}

double SpinSystem::offset(int k) const {
  if (k < 1 || k > spins())
    throw IndexError("SpinSystem::offset: spin " + std::to_string(k) +
                     " out of range");
  return offsets_(k - 1);
}

std::vector<std::pair<int, int>> SpinSystem::coupled_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= spins(); ++i)
    for (int j = i + 1; j <= spins(); ++j)
      if (coupling(i, j) != 0.0) out.emplace_back(i, j);
  return out;
}

}  // namespace trispin::dynamics
