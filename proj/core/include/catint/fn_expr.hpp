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

#ifndef CATINT_FN_EXPR_HPP
#define CATINT_FN_EXPR_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catint/measure.hpp"
#include "catint/step_function.hpp"

namespace catint {

/// Expressions in one variable t:
///
///   expr    := term (("+" | "-") term)*
///   term    := unary (("*" | "/") unary)*
///   unary   := "-" unary | power
///   power   := primary ["^" ratio]
///   ratio   := ["-"] NUMBER ["/" NUMBER] | "(" ["-"] NUMBER ["/" NUMBER] ")"
///   primary := NUMBER | "t" | "sqrt" "(" expr ")"
///            | "indicator" "(" ["-"] NUMBER "," ["-"] NUMBER ")" | "(" expr ")"
///
/// indicator(a, b) is 1 on [a, b] and 0 elsewhere.
extern const char* const kExprGrammar;

class FnExpr {
public:
    struct Node;

    FnExpr() = default;
    explicit FnExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    double operator()(double t) const;
    FnExpr derivative() const;
    /// True when t only appears inside indicators, i.e. the expression is a
    /// step function.
    bool is_step() const;
    /// Sorted, de-duplicated indicator endpoints.
    std::vector<double> breakpoints() const;
    /// Interval extension on the interior of x; nullopt where it is undefined
    /// or unbounded.
    std::optional<Interval> range(const Interval& x) const;
    std::string str() const;

private:
    std::shared_ptr<const Node> root_;
};

/// Throws SyntaxError (position given as line 1, column).
FnExpr parse_fn_expr(std::string_view text);

struct MonotonePieces {
    std::vector<Interval> pieces;
    /// False when some piece could not be certified before max_depth; such
    /// pieces are still returned.
    bool certified = true;
};

/// Splits at indicator endpoints, then bisects until the interval extension
/// of the derivative keeps one sign on each piece.
MonotonePieces monotone_pieces(const FnExpr& f, const Interval& domain, unsigned max_depth = 24);

/// Throws OutOfDomain unless f.is_step().
StepFunction to_step_function(const FnExpr& f, const Interval& ambient);

struct IntegrandPlan {
    Interval domain;
    MonotonePieces pieces;
    bool truncated_lo = false;
    bool truncated_hi = false;
};

/// Domain actually integrated: an end where f is not finite is moved inward
/// by truncate. Throws DomainAnnotationMissing if that is needed and no
/// truncation was given.
IntegrandPlan plan_integrand(const FnExpr& f, const Interval& domain, std::optional<double> truncate);

}  // namespace catint

#endif  // CATINT_FN_EXPR_HPP
