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

#include "catint/algebra.hpp"

#include <cmath>
#include <string>

#include "catint/error.hpp"

namespace catint {

FiniteAlgebra::FiniteAlgebra(std::vector<std::vector<LambdaElement>> table, LambdaElement unit)
    : table_(std::move(table)), unit_(std::move(unit)) {
    const std::size_t n = unit_.size();
    if (n == 0 || table_.size() != n) throw Error(Errc::DimensionMismatch, "structure table size");
    for (const auto& row : table_) {
        if (row.size() != n) throw Error(Errc::DimensionMismatch, "structure table row");
        for (const auto& e : row)
            if (e.size() != n) throw Error(Errc::DimensionMismatch, "structure constant length");
    }
}

FiniteAlgebra FiniteAlgebra::field() { return FiniteAlgebra({{{1.0}}}, {1.0}); }

FiniteAlgebra FiniteAlgebra::diagonal(std::size_t n) {
    std::vector<std::vector<LambdaElement>> t(n, std::vector<LambdaElement>(n, LambdaElement(n, 0.0)));
    for (std::size_t i = 0; i < n; ++i) t[i][i][i] = 1.0;
    return FiniteAlgebra(std::move(t), LambdaElement(n, 1.0));
}

FiniteAlgebra FiniteAlgebra::truncated_polynomial(std::size_t n) {
    std::vector<std::vector<LambdaElement>> t(n, std::vector<LambdaElement>(n, LambdaElement(n, 0.0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) t[i][j][i + j] = 1.0;
    LambdaElement unit(n, 0.0);
    unit[0] = 1.0;
    return FiniteAlgebra(std::move(t), std::move(unit));
}

LambdaElement FiniteAlgebra::basis(std::size_t i) const {
    LambdaElement e(dim(), 0.0);
    e.at(i) = 1.0;
    return e;
}

LambdaElement FiniteAlgebra::multiply(const LambdaElement& a, const LambdaElement& b) const {
    const std::size_t n = dim();
    if (a.size() != n || b.size() != n) throw Error(Errc::DimensionMismatch, "algebra element length");
    LambdaElement out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0.0) continue;
            for (std::size_t k = 0; k < n; ++k) out[k] += a[i] * b[j] * table_[i][j][k];
        }
    }
    return out;
}

LambdaElement add(const LambdaElement& a, const LambdaElement& b) {
    if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "algebra element length");
    LambdaElement out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

LambdaElement scale(double k, const LambdaElement& a) {
    LambdaElement out(a);
    for (auto& x : out) x *= k;
    return out;
}

double Tau::operator()(const LambdaElement& a) const {
    if (a.size() != values_.size()) throw Error(Errc::DimensionMismatch, "tau applied to wrong dimension");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * values_[i];
    return s;
}

void require_homomorphism(const FiniteAlgebra& algebra, const Tau& tau, double tol) {
    if (tau.basis_values().size() != algebra.dim())
        throw Error(Errc::TauNotHomomorphism, "tau has the wrong number of basis values");
    if (std::abs(tau(algebra.unit()) - 1.0) > tol) throw Error(Errc::TauNotHomomorphism, "tau(1) != 1");
    for (std::size_t i = 0; i < algebra.dim(); ++i)
        for (std::size_t j = 0; j < algebra.dim(); ++j) {
            const double lhs = tau(algebra.multiply(algebra.basis(i), algebra.basis(j)));
            const double rhs = tau.basis_values()[i] * tau.basis_values()[j];
            if (std::abs(lhs - rhs) > tol)
                throw Error(Errc::TauNotHomomorphism,
                            "tau(b" + std::to_string(i) + " b" + std::to_string(j) + ") != tau(b" +
                                std::to_string(i) + ") tau(b" + std::to_string(j) + ")");
        }
}

}  // namespace catint
