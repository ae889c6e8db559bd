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

#include "trispin/opalg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace trispin::opalg {

namespace {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw DimensionMismatch(std::string(what) + ": operands must be square "
                            "matrices of equal dimension");
}

}  // namespace

char axis_char(Axis axis) {
  switch (axis) {
    case Axis::x: return 'x';
    case Axis::y: return 'y';
    case Axis::z: return 'z';
    case Axis::identity: return 'i';
  }
  return '?';
}

std::optional<Axis> parse_axis(char c, bool allow_identity) {
  switch (c) {
    case 'x': return Axis::x;
    case 'y': return Axis::y;
    case 'z': return Axis::z;
    case 'i':
      if (allow_identity) return Axis::identity;
      return std::nullopt;
    default: return std::nullopt;
  }
}

ComplexMatrix pauli(Axis axis) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  switch (axis) {
    case Axis::x:
      m(0, 1) = 0.5;
      m(1, 0) = 0.5;
      break;
    case Axis::y:
      m(0, 1) = Complex(0.0, -0.5);
      m(1, 0) = Complex(0.0, 0.5);
      break;
    case Axis::z:
      m(0, 0) = 0.5;
      m(1, 1) = -0.5;
      break;
    case Axis::identity:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
  }
  return m;
}

ComplexMatrix embed(Axis axis, int k, int n) {
  if (n < 1 || k < 1 || k > n)
    throw IndexError("embed: spin index " + std::to_string(k) +
                     " outside [1, " + std::to_string(n) + "]");
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int slot = 1; slot <= n; ++slot)
    out = kron(out, pauli(slot == k ? axis : Axis::identity));
  return out;
}

ProductOperatorTerm::ProductOperatorTerm(std::vector<Axis> factors,
                                         double coefficient)
    : factors_(std::move(factors)), coefficient_(coefficient) {
  if (factors_.empty())
    throw ContractViolation("ProductOperatorTerm: spin count must be >= 1");
  if (order() == 0)
    throw ContractViolation(
        "ProductOperatorTerm: all-identity term is not in su(2^n)");
}

int ProductOperatorTerm::order() const {
  return static_cast<int>(std::count_if(
      factors_.begin(), factors_.end(),
      [](Axis a) { return a != Axis::identity; }));
}

OperatorSum::OperatorSum(int n, std::vector<ProductOperatorTerm> terms)
    : n_(n) {
  for (auto& t : terms) add(std::move(t));
}

void OperatorSum::add(ProductOperatorTerm term) {
  if (term.spins() != n_)
    throw DimensionMismatch("OperatorSum: term spin count " +
                            std::to_string(term.spins()) + " != " +
                            std::to_string(n_));
  terms_.push_back(std::move(term));
}

ComplexMatrix realize(const ProductOperatorTerm& term) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (Axis a : term.factors()) out = kron(out, pauli(a));
  const double prefactor = std::ldexp(1.0, term.order() - 1);
  return (prefactor * term.coefficient()) * out;
}

ComplexMatrix realize(const OperatorSum& sum) {
  const Eigen::Index dim = Eigen::Index{1} << sum.spins();
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (const auto& t : sum.terms()) out += realize(t);
  return out;
}

std::vector<ProductOperatorTerm> basis(int n) {
  if (n < 1) throw ContractViolation("basis: n must be >= 1");
  static constexpr Axis kOrder[] = {Axis::identity, Axis::x, Axis::y, Axis::z};
  std::vector<ProductOperatorTerm> out;
  const long total = 1L << (2 * n);
  out.reserve(static_cast<std::size_t>(total - 1));
  for (long code = 1; code < total; ++code) {
    std::vector<Axis> factors(static_cast<std::size_t>(n));
    long c = code;
    for (int slot = n - 1; slot >= 0; --slot) {
      factors[static_cast<std::size_t>(slot)] = kOrder[c & 3];
      c >>= 2;
    }
    out.emplace_back(std::move(factors), 1.0);
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

Complex inner_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "inner_product");
  return (a.adjoint() * b).trace();
}

Decomposition decompose(const ComplexMatrix& hermitian, int n,
                        double drop_tol) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (hermitian.rows() != dim || hermitian.cols() != dim)
    throw DimensionMismatch("decompose: matrix is not 2^n x 2^n");
  Decomposition out{hermitian.trace().real() / static_cast<double>(dim),
                    OperatorSum(n)};
  // tr(B_r B_s) = delta_rs 2^{n-2}
  const double norm = std::ldexp(1.0, n - 2);
  for (const auto& b : basis(n)) {
    const double c = inner_product(realize(b), hermitian).real() / norm;
    if (std::abs(c) > drop_tol) out.terms.add(b.scaled(c));
  }
  return out;
}

ProductOperatorTerm parse_term(std::string_view text, int n) {
  auto fail = [&](const std::string& why) -> FormatError {
    return FormatError("parse_term(\"" + std::string(text) + "\"): " + why);
  };
  std::istringstream in{std::string(text)};
  std::string token;
  if (!(in >> token)) throw fail("empty term");

  double coefficient = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, coefficient);
  if (ec != std::errc() || ptr != last) throw fail("bad coefficient");

  std::vector<Axis> factors(static_cast<std::size_t>(n), Axis::identity);
  bool any = false;
  while (in >> token) {
    if (token.size() < 3 || token.front() != 'I')
      throw fail("expected I<k><axis>, got '" + token + "'");
    int k = 0;
    auto [kp, kec] =
        std::from_chars(token.data() + 1, token.data() + token.size() - 1, k);
    if (kec != std::errc() || kp != token.data() + token.size() - 1)
      throw fail("bad spin index in '" + token + "'");
    if (k < 1 || k > n) throw fail("spin index out of range in '" + token + "'");
    auto axis = parse_axis(token.back());
    if (!axis) throw fail("bad axis in '" + token + "'");
    auto& slot = factors[static_cast<std::size_t>(k - 1)];
    if (slot != Axis::identity) throw fail("spin repeated in term");
    slot = *axis;
    any = true;
  }
  if (!any) throw fail("term has no spin factors");
  return ProductOperatorTerm(std::move(factors), coefficient);
}

std::string format_term(const ProductOperatorTerm& term) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, term.coefficient());
  std::string out(buf, end);
  for (int k = 0; k < term.spins(); ++k) {
    const Axis a = term.factors()[static_cast<std::size_t>(k)];
    if (a == Axis::identity) continue;
    out += " I" + std::to_string(k + 1) + axis_char(a);
  }
  return out;
}

}  // namespace trispin::opalg
