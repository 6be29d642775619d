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

#ifndef CATINT_STEP_FUNCTION_HPP
#define CATINT_STEP_FUNCTION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "catint/measure.hpp"

namespace catint {

struct Piece {
    Box box;
    double coeff = 0.0;

    friend bool operator==(const Piece&, const Piece&) = default;
};

/// Finite sum of k_i * 1_{X_i} over boxes X_i inside an ambient box. The
/// value outside every piece is 0.
///
/// Construction always canonicalizes: overlapping input pieces are summed,
/// the support is cut on its minimal grid, equal neighbours are merged and
/// zero coefficients are dropped. Two step functions that agree everywhere
/// off a null set of grid faces therefore compare equal.
class StepFunction {
public:
    StepFunction() = default;
    StepFunction(Box ambient, std::span<const Piece> pieces);
    StepFunction(Box ambient, std::initializer_list<Piece> pieces)
        : StepFunction(std::move(ambient), std::span<const Piece>(pieces.begin(), pieces.size())) {}

    static StepFunction zero(Box ambient) { return StepFunction(std::move(ambient), {}); }
    static StepFunction indicator(Box ambient, Box support, double coeff = 1.0);

    const Box& ambient() const noexcept { return ambient_; }
    const std::vector<Piece>& pieces() const noexcept { return pieces_; }
    std::size_t dim() const noexcept { return ambient_.dim(); }
    bool is_zero() const noexcept { return pieces_.empty(); }

    friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
    Box ambient_;
    std::vector<Piece> pieces_;
};

struct PointValue {
    double value = 0.0;
    /// x sits on a piece face; value is then the largest adjacent coefficient.
    bool on_boundary = false;
};

/// Throws OutOfDomain if x is outside the ambient box.
PointValue eval(const StepFunction& f, std::span<const double> x);
inline PointValue eval(const StepFunction& f, double x) { return eval(f, std::span<const double>(&x, 1)); }

/// a*f + b*g on the common refinement. Throws AmbientMismatch.
StepFunction linear_combine(double a, const StepFunction& f, double b, const StepFunction& g);
StepFunction scale(double a, const StepFunction& f);
/// 1_region * f
StepFunction restrict_to(const StepFunction& f, const Box& region);

/// (sum_i |k_i|^p mu(X_i)^p)^(1/p) over the canonical pieces. Throws
/// BadExponent for p < 1.
double p_norm(const StepFunction& f, double p);

/// True iff {f != g} is a null set. Coefficient differences of magnitude at
/// most coeff_tol count as zero.
bool ae_equal(const StepFunction& f, const StepFunction& g, double coeff_tol = 0.0);

/// 2^n step functions on one ambient box, indexed by words in {c,d}^n with
/// the first letter most significant (c = 0, d = 1).
using FunctionTuple = std::vector<StepFunction>;

/// Assembles the tuple into one function: entry w is compressed into the
/// sub-box kappa_{w_1}(I_1) x ... x kappa_{w_n}(I_n) by the dyadic halving
/// maps of each ambient factor. Throws ArityMismatch, AmbientMismatch.
StepFunction juxtapose(const FunctionTuple& tuple);

/// ((mu_I(I) / mu(I_Lambda))^n sum_i ||x_i||^p)^(1/p), where mu_I(I) is the
/// common factor length (geometric mean of the factor lengths).
double direct_sum_norm(const FunctionTuple& tuple, double p);

}  // namespace catint

#endif  // CATINT_STEP_FUNCTION_HPP
