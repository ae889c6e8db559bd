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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trispin/core.hpp"

/// Product-operator algebra for n coupled spin-1/2 nuclei.
///
/// Spin indices are 1-based throughout the public interface. Spin 1 is the
/// leftmost (most significant) tensor factor, so I_{1z} for n = 2 is
/// I_z (x) 1 = diag(1, 1, -1, -1) / 2.
namespace trispin::opalg {

enum class Axis { identity, x, y, z };

char axis_char(Axis axis);

/// Parses "x", "y", "z" (and "i" when allow_identity is set).
std::optional<Axis> parse_axis(char c, bool allow_identity = false);

/// 2x2 spin operator I_x, I_y, I_z (entries +-1/2, +-i/2) or the unit matrix.
ComplexMatrix pauli(Axis axis);

/// I_{k,axis} on n spins: identity everywhere except pauli(axis) at slot k.
/// Throws IndexError unless 1 <= k <= n.
ComplexMatrix embed(Axis axis, int k, int n);

/// One element 2^{q-1} c prod_k I_{k,alpha_k} of the product-operator basis,
/// where q counts the non-identity factors. q = 0 is not part of su(2^n) and
/// is rejected at construction.
class ProductOperatorTerm {
 public:
  ProductOperatorTerm(std::vector<Axis> factors, double coefficient = 1.0);

  int spins() const { return static_cast<int>(factors_.size()); }
  const std::vector<Axis>& factors() const { return factors_; }
  double coefficient() const { return coefficient_; }
  int order() const;  // q

  ProductOperatorTerm scaled(double s) const {
    return ProductOperatorTerm(factors_, coefficient_ * s);
  }

  bool operator==(const ProductOperatorTerm&) const = default;

 private:
  std::vector<Axis> factors_;
  double coefficient_;
};

/// Sum of product-operator terms sharing a spin count.
class OperatorSum {
 public:
  explicit OperatorSum(int n) : n_(n) {}
  OperatorSum(int n, std::vector<ProductOperatorTerm> terms);

  void add(ProductOperatorTerm term);

  int spins() const { return n_; }
  const std::vector<ProductOperatorTerm>& terms() const { return terms_; }

 private:
  int n_;
  std::vector<ProductOperatorTerm> terms_;
};

ComplexMatrix realize(const ProductOperatorTerm& term);
ComplexMatrix realize(const OperatorSum& sum);

/// All 4^n - 1 basis terms with unit coefficient, lexicographic over the
/// factor tuple with identity < x < y < z (spin 1 varies slowest). The
/// all-identity tuple is skipped.
std::vector<ProductOperatorTerm> basis(int n);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr(A^dagger B).
Complex inner_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Expansion of a Hermitian operator in the product basis plus its identity
/// component: H = identity_coefficient * 1 + sum_s c_s B_s. Terms with
/// |c_s| <= drop_tol are omitted.
struct Decomposition {
  double identity_coefficient = 0.0;
  OperatorSum terms;
};
Decomposition decompose(const ComplexMatrix& hermitian, int n,
                        double drop_tol = 1e-12);

/// Textual form "<coefficient> I<k><axis> ...", e.g. "1.0 I1z I2z". Spins
/// not mentioned are identity. The 2^{q-1} prefactor is implied, as in
/// realize(). Throws FormatError on malformed text.
ProductOperatorTerm parse_term(std::string_view text, int n);
std::string format_term(const ProductOperatorTerm& term);

}  // namespace trispin::opalg
