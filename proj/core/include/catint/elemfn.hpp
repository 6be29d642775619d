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

#ifndef CATINT_ELEMFN_HPP
#define CATINT_ELEMFN_HPP

#include <cstddef>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "catint/integrator.hpp"

namespace catint {

/// Truncation point of the improper integral of 1/sqrt(1 - t^2): the table
/// stops at 1 - eps and the remainder is bracketed in closed form by
/// [2(sqrt(eps) - sqrt(1 - z)) / sqrt(1 + z), 2(sqrt(eps) - sqrt(1 - z)) / sqrt(2 - eps)].
inline constexpr double kArcTruncation = 1e-8;

inline constexpr double kDefaultElemTol = 1e-7;

/// Largest |x| accepted by exp_cat.
inline constexpr double kExpRange = 40.0;

enum class ElemName { As, Ac, S, C, Ln, Exp };

std::string_view elem_name(ElemName n) noexcept;
/// Accepts as/asin, ac/acos, s/sin, c/cos, ln/log, exp. Throws OutOfDomain.
ElemName parse_elem_name(std::string_view s);

namespace detail {
class CumulativeTable;
}

/// Evaluator with an eagerly built table of cumulative integral enclosures.
/// Immutable after construction.
class ElemFnHandle {
public:
    ElemFnHandle(ElemName name, double tol = kDefaultElemTol);
    ~ElemFnHandle();
    ElemFnHandle(const ElemFnHandle&);
    ElemFnHandle& operator=(const ElemFnHandle&);

    ElemName name() const noexcept { return name_; }
    double tol() const noexcept { return tol_; }

    Enclosure operator()(double x) const;

    /// Knots of the underlying integral table with their enclosures, in
    /// increasing knot order.
    std::vector<std::pair<double, Enclosure>> samples() const;
    std::size_t table_size() const;

private:
    ElemName name_;
    double tol_;
    std::shared_ptr<const detail::CumulativeTable> table_;
    Enclosure half_period_;
};

/// Shared handle for (name, tol); built on first use.
std::shared_ptr<const ElemFnHandle> elem_handle(ElemName name, double tol = kDefaultElemTol);

/// Integral of 1/sqrt(1 - t^2) over [0, y]. Throws OutOfDomain for |y| > 1.
Enclosure asin_cat(double y, double tol = kDefaultElemTol);
/// Integral of 1/sqrt(1 - t^2) over [y, 1]. Throws OutOfDomain for |y| > 1.
Enclosure acos_cat(double y, double tol = kDefaultElemTol);
/// Integral of 1/sqrt(1 - t^2) over [0, 1].
Enclosure K_constant(double tol = 1e-3);

/// Inverse of asin_cat on [-K, K], extended by s(x + 2uK) = (-1)^u s(x).
Enclosure sin_cat(double x, double tol = kDefaultElemTol);
/// Inverse of acos_cat on [0, 2K], extended by c(x + 2uK) = (-1)^u c(x).
Enclosure cos_cat(double x, double tol = kDefaultElemTol);

/// Integral of 1/t over [1, y], read as minus the integral over [y, 1] when
/// y < 1. Throws OutOfDomain for y <= 0.
Enclosure ln_cat(double y, double tol = kDefaultElemTol);
/// Inverse of ln_cat. Throws InversionFailed for |x| > kExpRange.
Enclosure exp_cat(double x, double tol = kDefaultElemTol);

}  // namespace catint

#endif  // CATINT_ELEMFN_HPP
