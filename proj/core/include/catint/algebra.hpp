// Copyright 2026 The catint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CATINT_ALGEBRA_HPP
#define CATINT_ALGEBRA_HPP

#include <cstddef>
#include <vector>

namespace catint {

/// Coordinates of an element in the basis b_1, ..., b_n of Lambda.
using LambdaElement = std::vector<double>;

/// Finite-dimensional algebra over the reals given by structure constants:
/// b_i * b_j = sum_k table[i][j][k] b_k.
class FiniteAlgebra {
public:
    FiniteAlgebra(std::vector<std::vector<LambdaElement>> table, LambdaElement unit);

    /// The ground field, dimension 1.
    static FiniteAlgebra field();
    /// k x ... x k with orthogonal idempotent basis.
    static FiniteAlgebra diagonal(std::size_t n);
    /// k[x]/(x^n), basis 1, x, ..., x^{n-1}.
    static FiniteAlgebra truncated_polynomial(std::size_t n);

    std::size_t dim() const noexcept { return unit_.size(); }
    const LambdaElement& unit() const noexcept { return unit_; }
    LambdaElement basis(std::size_t i) const;
    LambdaElement multiply(const LambdaElement& a, const LambdaElement& b) const;

private:
    std::vector<std::vector<LambdaElement>> table_;
    LambdaElement unit_;
};

LambdaElement add(const LambdaElement& a, const LambdaElement& b);
LambdaElement scale(double k, const LambdaElement& a);

/// Linear functional tau : Lambda -> k given on the basis.
class Tau {
public:
    explicit Tau(std::vector<double> basis_values) : values_(std::move(basis_values)) {}
    /// tau = identity on k (Lambda = k).
    static Tau identity() { return Tau({1.0}); }

    double operator()(const LambdaElement& a) const;
    const std::vector<double>& basis_values() const noexcept { return values_; }

private:
    std::vector<double> values_;
};

/// Checks tau(1) = 1 and tau(b_i b_j) = tau(b_i) tau(b_j) on all basis pairs.
/// Throws TauNotHomomorphism with the first failing pair.
void require_homomorphism(const FiniteAlgebra& algebra, const Tau& tau, double tol = 1e-12);

}  // namespace catint

#endif  // CATINT_ALGEBRA_HPP
