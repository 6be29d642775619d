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

#ifndef CATINT_IPOSET_HPP
#define CATINT_IPOSET_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "catint/algebra.hpp"
#include "catint/measure.hpp"
#include "catint/step_function.hpp"

namespace catint {

using StepFunctionRef = std::shared_ptr<const StepFunction>;

inline StepFunctionRef share(StepFunction f) { return std::make_shared<const StepFunction>(std::move(f)); }

/// ([t1, t2], integral of f over [t1, t2]) together with f itself.
struct IPosetElement {
    Interval interval;
    double value = 0.0;
    StepFunctionRef backing;
    /// Base point when the element came from an upper-limit record.
    std::optional<double> alpha;
};

/// Throws OutOfAmbient unless iv lies in the (one-dimensional) ambient of f.
IPosetElement make_element(StepFunctionRef f, const Interval& iv, std::optional<double> alpha = std::nullopt);

/// Element of Sigma x k.
struct SigmaPair {
    MeasurableSet set;
    double value = 0.0;

    friend bool operator==(const SigmaPair&, const SigmaPair&) = default;
};

/// (S1, r1) + (S2, r2) = (S1 u S2, r1 + r2); on pairs whose sets are the
/// whole ambient this is the group law (I, k1) + (I, k2) = (I, k1 + k2).
SigmaPair operator+(const SigmaPair& a, const SigmaPair& b);

/// (t, integral of f over [alpha, t]) with its backing function.
struct UpperLimitRecord {
    double alpha = 0.0;
    double t = 0.0;
    double value = 0.0;
    StepFunctionRef backing;
};

/// Throws OutOfAmbient unless c <= alpha <= t <= d.
UpperLimitRecord make_upper_limit_record(StepFunctionRef f, double alpha, double t);

/// Finite sample of an i.poset: one element per sampled interval, ordered by
/// inclusion of the intervals.
class IPoset {
public:
    IPoset() = default;
    explicit IPoset(std::vector<IPosetElement> elements) : elements_(std::move(elements)) {}

    const std::vector<IPosetElement>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool leq(std::size_t i, std::size_t j) const;
    /// Every pair (i, j) with element i below element j, reflexive pairs included.
    std::vector<std::pair<std::size_t, std::size_t>> relation() const;

private:
    std::vector<IPosetElement> elements_;
};

IPoset build_iposet(StepFunctionRef f, std::span<const Interval> family);

/// {[c, c + k (d - c) / n] : k = 0..n}
std::vector<Interval> initial_segment_family(const Interval& ambient, std::size_t n);

/// e1 below e2 iff e1.interval is inside e2.interval. Throws BackingMismatch
/// for elements of different functions.
bool order_leq(const IPosetElement& e1, const IPosetElement& e2);

enum class AddCase { DisjointLeft, DisjointRight, OverlapLeft, OverlapRight, ContainedIn, Contains };

std::string_view case_name(AddCase c) noexcept;

/// Which branch of the addition table applies to [u,v] + [s,t]. Equal
/// intervals count as ContainedIn; v == s as OverlapLeft and t == u as
/// OverlapRight, both with a null overlap.
AddCase classify_case(const Interval& a, const Interval& b);

struct Addition {
    SigmaPair sum;
    AddCase branch;
    /// Value given by the branch formula of the table.
    double branch_value = 0.0;
};

/// (U, integral over U of 1_[u,v] f + 1_[s,t] g) with U the hull of both
/// intervals, together with the branch-formula value. Throws
/// AmbientMismatch when the backings live on different intervals and
/// MethodDisagreement if the two values differ by more than 1e-12 relative.
Addition add_elements_detailed(const IPosetElement& e1, const IPosetElement& e2);
SigmaPair add_elements(const IPosetElement& e1, const IPosetElement& e2);

/// Value of the branch formula alone, for a given case tag.
double branch_formula(AddCase c, const StepFunction& f, const Interval& uv, const StepFunction& g,
                      const Interval& st);

/// (t, value) -> ([alpha, t], value)
SigmaPair game_map(const UpperLimitRecord& r);

/// (S, k) -> (ambient, k). Throws OutOfAmbient if S leaves the ambient.
SigmaPair game_natural(const SigmaPair& p, const Interval& ambient);

/// k . (S, r) = (S, k r)
SigmaPair scalar_action(double k, const SigmaPair& p);

/// a * (S, r) = (S, tau(a) r). Throws TauNotHomomorphism.
SigmaPair lambda_action(const FiniteAlgebra& algebra, const LambdaElement& a, const Tau& tau,
                        const SigmaPair& p);

}  // namespace catint

#endif  // CATINT_IPOSET_HPP
