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

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace trispin {

using Complex = std::complex<double>;

/// Dense square complex matrix of dimension 2^n. Operators, Hamiltonians and
/// propagators all share this carrier.
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Seed used by every pseudo-random check unless overridden.
inline constexpr unsigned long long kDefaultSeed = 0xC0FFEE;

// Error hierarchy. Everything derives from a standard exception so callers
// that only care about "bad input" can catch std::invalid_argument.

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedPattern : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest absolute entry of a matrix; the norm used for every tolerance.
inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

inline bool is_skew_hermitian(const ComplexMatrix& m, double tol = 1e-12) {
  return m.rows() == m.cols() && max_abs(m + m.adjoint()) <= tol;
}

inline bool is_unitary(const ComplexMatrix& m, double tol = 1e-12) {
  if (m.rows() != m.cols()) return false;
  const auto id = ComplexMatrix::Identity(m.rows(), m.cols());
  return max_abs(m.adjoint() * m - id) <= tol;
}

}  // namespace trispin
