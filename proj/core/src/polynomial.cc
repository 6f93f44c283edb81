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

#include "patternlab/polynomial.h"

#include <string>

#include "patternlab/errors.h"

namespace patternlab {
namespace {

double IntPow(double base, std::uint32_t exponent) {
  double out = 1.0;
  for (std::uint32_t k = 0; k < exponent; ++k) out *= base;
  return out;
}

}  // namespace

void SimplexPolynomial::AddMonomial(double coefficient, const Multiset& e) {
  Monomial term{coefficient, e.Runs()};
  for (const auto& [i, p] : term.powers) {
    if (i >= dim_) throw InputError("monomial variable out of range");
  }
  terms_.push_back(std::move(term));
}

void SimplexPolynomial::AddPower(double coefficient, Index i,
                                 std::uint32_t exponent) {
  if (i >= dim_) throw InputError("monomial variable out of range");
  terms_.push_back(Monomial{coefficient, {{i, exponent}}});
}

void SimplexPolynomial::CheckDim(std::size_t n) const {
  if (n != dim_) {
    throw InputError("point has dimension " + std::to_string(n) +
                     ", expected " + std::to_string(dim_));
  }
}

double SimplexPolynomial::Eval(std::span<const double> x) const {
  CheckDim(x.size());
  double sum = 0.0;
  for (const Monomial& term : terms_) {
    double prod = term.coefficient;
    for (const auto& [i, p] : term.powers) prod *= IntPow(x[i], p);
    sum += prod;
  }
  return sum;
}

void SimplexPolynomial::Gradient(std::span<const double> x,
                                 std::span<double> grad) const {
  CheckDim(x.size());
  CheckDim(grad.size());
  std::fill(grad.begin(), grad.end(), 0.0);
  for (const Monomial& term : terms_) {
    const auto& powers = term.powers;
    for (std::size_t j = 0; j < powers.size(); ++j) {
      const auto [var, exponent] = powers[j];
      double partial = term.coefficient * exponent * IntPow(x[var], exponent - 1);
      for (std::size_t l = 0; l < powers.size(); ++l) {
        if (l != j) partial *= IntPow(x[powers[l].first], powers[l].second);
      }
      grad[var] += partial;
    }
  }
}

std::vector<double> SimplexPolynomial::Gradient(
    std::span<const double> x) const {
  std::vector<double> grad(dim_, 0.0);
  Gradient(x, grad);
  return grad;
}

std::vector<double> SimplexPolynomial::Hessian(
    std::span<const double> x) const {
  CheckDim(x.size());
  std::vector<double> hess(dim_ * dim_, 0.0);
  for (const Monomial& term : terms_) {
    const auto& powers = term.powers;
    for (std::size_t a = 0; a < powers.size(); ++a) {
      for (std::size_t b = a; b < powers.size(); ++b) {
        double entry = term.coefficient;
        for (std::size_t l = 0; l < powers.size(); ++l) {
          const auto [var, exponent] = powers[l];
          std::uint32_t drop = (l == a) + (l == b);
          if (drop > exponent) {
            entry = 0.0;
            break;
          }
          // d/dx x^p = p x^{p-1}; twice gives p (p-1) x^{p-2}.
          for (std::uint32_t k = 0; k < drop; ++k) entry *= exponent - k;
          entry *= IntPow(x[var], exponent - drop);
        }
        const Index va = powers[a].first;
        const Index vb = powers[b].first;
        hess[va * dim_ + vb] += entry;
        if (a != b) hess[vb * dim_ + va] += entry;
      }
    }
  }
  return hess;
}

}  // namespace patternlab
