// Copyright 2026 The patternlab Authors
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

#ifndef PATTERNLAB_POLYNOMIAL_H_
#define PATTERNLAB_POLYNOMIAL_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "patternlab/multiset.h"

namespace patternlab {

struct Monomial {
  double coefficient = 0.0;
  // (variable, exponent) with distinct variables and positive exponents.
  std::vector<std::pair<Index, std::uint32_t>> powers;
};

// A polynomial with nonnegative coefficients in `dim` variables. This is
// the objective type the simplex optimizer works on: Lagrange polynomials
// and the reduced union objective are both built as SimplexPolynomials.
class SimplexPolynomial {
 public:
  explicit SimplexPolynomial(std::size_t dim) : dim_(dim) {}

  // Adds coefficient * prod_i x_i^{counts(E)_i}.
  void AddMonomial(double coefficient, const Multiset& e);
  // Adds coefficient * x_i^exponent.
  void AddPower(double coefficient, Index i, std::uint32_t exponent);

  std::size_t dim() const { return dim_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  // Valid at any point of R^dim; throws InputError on a dimension mismatch.
  double Eval(std::span<const double> x) const;
  // Writes the gradient into `grad` (length dim).
  void Gradient(std::span<const double> x, std::span<double> grad) const;
  std::vector<double> Gradient(std::span<const double> x) const;
  // Row-major dim x dim Hessian.
  std::vector<double> Hessian(std::span<const double> x) const;

 private:
  void CheckDim(std::size_t n) const;

  std::size_t dim_;
  std::vector<Monomial> terms_;
};

}  // namespace patternlab

#endif  // PATTERNLAB_POLYNOMIAL_H_
