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

// Matrix exponential by scaling and squaring with a fixed [13/13] Pade core
// (Higham, SIAM J. Matrix Anal. Appl. 26(4), 2005). A single fixed degree
// keeps the result a deterministic function of the input bits.

#include <cmath>
#include <string>

#include <Eigen/LU>

#include "trispin/dynamics.hpp"

namespace trispin::dynamics {

namespace {

constexpr double kPadeCoefficients[14] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

// 1-norm bound below which the [13/13] approximant is accurate to unit
// roundoff.
constexpr double kTheta13 = 5.371920351148152;

double one_norm(const ComplexMatrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

ComplexMatrix pade13(const ComplexMatrix& a) {
  const auto& b = kPadeCoefficients;
  const Eigen::Index n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;

  const ComplexMatrix u_inner = b[13] * a6 + b[11] * a4 + b[9] * a2;
  const ComplexMatrix u =
      a * (a6 * u_inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  const ComplexMatrix v_inner = b[12] * a6 + b[10] * a4 + b[8] * a2;
  const ComplexMatrix v =
      a6 * v_inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

  return (v - u).partialPivLu().solve(v + u);
}

bool is_diagonal(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != j && m(i, j) != Complex(0.0, 0.0)) return false;
  return true;
}

}  // namespace

ComplexMatrix exp_matrix(const ComplexMatrix& generator) {
  if (generator.rows() != generator.cols())
    throw DimensionMismatch("exp_matrix: matrix is not square");
  if (generator.size() == 0) return generator;

  const double norm = one_norm(generator);
  int squarings = 0;
  if (norm > kTheta13)
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));

  ComplexMatrix r = pade13(generator * std::ldexp(1.0, -squarings));
  for (int k = 0; k < squarings; ++k) r = r * r;
  return r;
}

Propagator expm(const ComplexMatrix& hamiltonian, double t) {
  const double scale = std::max(1.0, max_abs(hamiltonian));
  if (hamiltonian.rows() != hamiltonian.cols() ||
      !is_hermitian(hamiltonian, 1e-10 * scale))
    throw ContractViolation("expm: Hamiltonian is not Hermitian");

  if (is_diagonal(hamiltonian)) {
    const Eigen::Index n = hamiltonian.rows();
    ComplexMatrix u = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
      u(k, k) = std::exp(Complex(0.0, -hamiltonian(k, k).real() * t));
    return {std::move(u), t};
  }
  return {exp_matrix(Complex(0.0, -t) * hamiltonian), t};
}

}  // namespace trispin::dynamics
