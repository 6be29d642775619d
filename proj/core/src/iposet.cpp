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

#include "catint/iposet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catint/error.hpp"
#include "catint/integrator.hpp"

namespace catint {
namespace {

const Interval& ambient_interval(const StepFunction& f) {
    if (f.dim() != 1) throw Error(Errc::AmbientMismatch, "i.poset elements need a one-dimensional function");
    return f.ambient()[0];
}

StepFunction on(const StepFunction& f, const Interval& iv) { return restrict_to(f, Box{iv}); }

StepFunction plus(const StepFunction& a, const StepFunction& b) { return linear_combine(1.0, a, 1.0, b); }

}  // namespace

IPosetElement make_element(StepFunctionRef f, const Interval& iv, std::optional<double> alpha) {
    if (!f) throw Error(Errc::BackingMismatch, "element without a backing function");
    make_interval(iv.lo, iv.hi);
    if (!ambient_interval(*f).contains(iv)) throw Error(Errc::OutOfAmbient, "interval leaves the ambient");
    const double value = integrate_step(*f, iv);
    return {iv, value, std::move(f), alpha};
}

SigmaPair operator+(const SigmaPair& a, const SigmaPair& b) {
    if (a.set == b.set) return {a.set, a.value + b.value};
    return {set_union(a.set, b.set), a.value + b.value};
}

UpperLimitRecord make_upper_limit_record(StepFunctionRef f, double alpha, double t) {
    if (!f) throw Error(Errc::BackingMismatch, "record without a backing function");
    const Interval& amb = ambient_interval(*f);
    if (!(amb.lo <= alpha && alpha <= t && t <= amb.hi))
        throw Error(Errc::OutOfAmbient, "need c <= alpha <= t <= d");
    const double value = integrate_step(*f, Interval{alpha, t});
    return {alpha, t, value, std::move(f)};
}

bool IPoset::leq(std::size_t i, std::size_t j) const {
    return order_leq(elements_.at(i), elements_.at(j));
}

std::vector<std::pair<std::size_t, std::size_t>> IPoset::relation() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (leq(i, j)) out.emplace_back(i, j);
    return out;
}

IPoset build_iposet(StepFunctionRef f, std::span<const Interval> family) {
    std::vector<IPosetElement> elems;
    elems.reserve(family.size());
    for (const auto& iv : family) elems.push_back(make_element(f, iv));
    return IPoset(std::move(elems));
}

std::vector<Interval> initial_segment_family(const Interval& ambient, std::size_t n) {
    std::vector<Interval> out;
    if (n == 0) return out;
    for (std::size_t k = 0; k <= n; ++k) {
        const double t = k == n ? ambient.hi
                                : ambient.lo + ambient.length() * static_cast<double>(k) / static_cast<double>(n);
        out.push_back({ambient.lo, t});
    }
    return out;
}

bool order_leq(const IPosetElement& e1, const IPosetElement& e2) {
    if (e1.backing != e2.backing && !(e1.backing && e2.backing && *e1.backing == *e2.backing))
        throw Error(Errc::BackingMismatch, "elements belong to different functions");
    return e2.interval.contains(e1.interval);
}

std::string_view case_name(AddCase c) noexcept {
    switch (c) {
        case AddCase::DisjointLeft: return "DisjointLeft";
        case AddCase::DisjointRight: return "DisjointRight";
        case AddCase::OverlapLeft: return "OverlapLeft";
        case AddCase::OverlapRight: return "OverlapRight";
        case AddCase::ContainedIn: return "ContainedIn";
        case AddCase::Contains: return "Contains";
    }
    return "?";
}

AddCase classify_case(const Interval& a, const Interval& b) {
    const double u = a.lo, v = a.hi, s = b.lo, t = b.hi;
    if (s <= u && v <= t) return AddCase::ContainedIn;
    if (u <= s && t <= v) return AddCase::Contains;
    if (v < s) return AddCase::DisjointLeft;
    if (t < u) return AddCase::DisjointRight;
    // Remaining: the intervals meet and neither contains the other.
    if (u < s) return AddCase::OverlapLeft;
    return AddCase::OverlapRight;
}

double branch_formula(AddCase c, const StepFunction& f, const Interval& uv, const StepFunction& g,
                      const Interval& st) {
    const double u = uv.lo, v = uv.hi, s = st.lo, t = st.hi;
    switch (c) {
        case AddCase::DisjointLeft:
            return integrate_step(plus(on(f, uv), on(g, st)), Interval{u, t});
        case AddCase::DisjointRight:
            return integrate_step(plus(on(g, st), on(f, uv)), Interval{s, v});
        case AddCase::OverlapLeft:
            return integrate_step(plus(plus(on(f, {u, s}), on(plus(f, g), {s, v})), on(g, {v, t})),
                                  Interval{u, t});
        case AddCase::OverlapRight:
            return integrate_step(plus(plus(on(g, {s, u}), on(plus(f, g), {u, t})), on(f, {t, v})),
                                  Interval{s, v});
        case AddCase::ContainedIn:
            return integrate_step(plus(g, on(f, uv)), st);
        case AddCase::Contains:
            return integrate_step(plus(f, on(g, st)), uv);
    }
    return 0.0;
}

Addition add_elements_detailed(const IPosetElement& e1, const IPosetElement& e2) {
    if (!e1.backing || !e2.backing) throw Error(Errc::BackingMismatch, "element without a backing function");
    const StepFunction& f = *e1.backing;
    const StepFunction& g = *e2.backing;
    if (ambient_interval(f) != ambient_interval(g))
        throw Error(Errc::AmbientMismatch, "backings live on different intervals");

    const Interval& uv = e1.interval;
    const Interval& st = e2.interval;
    const Interval hull{std::min(uv.lo, st.lo), std::max(uv.hi, st.hi)};
    const double general = integrate_step(plus(on(f, uv), on(g, st)), hull);
    const AddCase branch = classify_case(uv, st);
    const double by_branch = branch_formula(branch, f, uv, g, st);
    if (std::abs(general - by_branch) > 1e-12 * std::max(1.0, std::abs(general)))
        throw Error(Errc::MethodDisagreement, std::string("branch ") + std::string(case_name(branch)) +
                                                  " gives " + std::to_string(by_branch) + ", general formula " +
                                                  std::to_string(general));
    return {{MeasurableSet::from_interval(hull), general}, branch, by_branch};
}

SigmaPair add_elements(const IPosetElement& e1, const IPosetElement& e2) {
    return add_elements_detailed(e1, e2).sum;
}

SigmaPair game_map(const UpperLimitRecord& r) {
    return {MeasurableSet::from_interval(Interval{r.alpha, r.t}), r.value};
}

SigmaPair game_natural(const SigmaPair& p, const Interval& ambient) {
    for (const auto& b : p.set.boxes())
        if (b.dim() != 1 || !ambient.contains(b[0])) throw Error(Errc::OutOfAmbient, "set leaves the ambient");
    return {MeasurableSet::from_interval(ambient), p.value};
}

SigmaPair scalar_action(double k, const SigmaPair& p) { return {p.set, k * p.value}; }

SigmaPair lambda_action(const FiniteAlgebra& algebra, const LambdaElement& a, const Tau& tau,
                        const SigmaPair& p) {
    require_homomorphism(algebra, tau);
    return {p.set, tau(a) * p.value};
}

}  // namespace catint
