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

#include "catint/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catint/error.hpp"
#include "grid.hpp"

namespace catint {

Interval make_interval(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw Error(Errc::NonFinite, "interval endpoints must be finite");
    if (lo > hi)
        throw Error(Errc::OrderViolation, "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return {lo, hi};
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    const double lo = std::max(a.lo, b.lo);
    const double hi = std::min(a.hi, b.hi);
    if (lo > hi) return std::nullopt;
    return Interval{lo, hi};
}

Box::Box(std::vector<Interval> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error(Errc::DimensionMismatch, "a box needs at least one factor");
    for (const auto& f : factors_) make_interval(f.lo, f.hi);
}

double Box::measure() const noexcept {
    double m = 1.0;
    for (const auto& f : factors_) m *= f.length();
    return m;
}

bool Box::contains(const Box& other) const {
    if (other.dim() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
        if (!factors_[i].contains(other.factors_[i])) return false;
    return true;
}

bool Box::contains_point(std::span<const double> x) const {
    if (x.size() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
        if (!factors_[i].contains(x[i])) return false;
    return true;
}

std::optional<Box> intersect(const Box& a, const Box& b) {
    if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "box intersection");
    std::vector<Interval> f(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        auto iv = intersect(a[i], b[i]);
        if (!iv) return std::nullopt;
        f[i] = *iv;
    }
    return Box(std::move(f));
}

MeasurableSet MeasurableSet::from_box(Box box) {
    MeasurableSet s;
    s.boxes_.push_back(std::move(box));
    return s;
}

double MeasurableSet::measure() const noexcept {
    double m = 0.0;
    for (const auto& b : boxes_) m += b.measure();
    return m;
}

std::optional<Box> MeasurableSet::hull() const {
    if (boxes_.empty()) return std::nullopt;
    std::vector<Interval> f = boxes_.front().factors();
    for (const auto& b : boxes_)
        for (std::size_t i = 0; i < f.size(); ++i) {
            f[i].lo = std::min(f[i].lo, b[i].lo);
            f[i].hi = std::max(f[i].hi, b[i].hi);
        }
    return Box(std::move(f));
}

MeasurableSet normalize_set(std::span<const Box> raw) {
    MeasurableSet out;
    if (raw.empty()) return out;
    const std::size_t dim = raw.front().dim();
    std::vector<std::pair<Box, double>> pieces;
    pieces.reserve(raw.size());
    for (const auto& b : raw) {
        if (b.dim() != dim) throw Error(Errc::DimensionMismatch, "boxes of different dimension");
        pieces.emplace_back(b, 1.0);
    }
    auto field = detail::rasterize(dim, pieces, detail::Fill::Cover);
    detail::simplify(field);
    for (auto& [box, v] : detail::to_boxes(field)) out.boxes_.push_back(std::move(box));
    return out;
}

MeasurableSet set_union(const MeasurableSet& a, const MeasurableSet& b) {
    std::vector<Box> all = a.boxes();
    all.insert(all.end(), b.boxes().begin(), b.boxes().end());
    return normalize_set(all);
}

MeasurableSet set_intersection(const MeasurableSet& a, const MeasurableSet& b) {
    std::vector<Box> all;
    for (const auto& x : a.boxes())
        for (const auto& y : b.boxes())
            if (auto z = intersect(x, y)) all.push_back(*z);
    return normalize_set(all);
}

double lebesgue_measure(const MeasurableSet& s) noexcept { return s.measure(); }

DyadicScheme::DyadicScheme(Interval ambient) : ambient_(make_interval(ambient.lo, ambient.hi)) {}

AffineMap DyadicScheme::segment_map(unsigned depth, std::uint64_t s) const {
    if (depth > kMaxSegmentDepth)
        throw Error(Errc::DepthTooLarge, "depth " + std::to_string(depth) + " exceeds 40");
    if (depth < 64 && s >= (std::uint64_t{1} << depth))
        throw Error(Errc::OutOfDomain, "segment index out of range");
    AffineMap m;  // identity
    const AffineMap kc = kappa_c(), kd = kappa_d();
    // Build inside-out: the last letter is applied first.
    for (unsigned i = 0; i < depth; ++i) {
        const bool letter_d = (s >> i) & 1u;
        m = (letter_d ? kd : kc).after(m);
    }
    return m;
}

Segmentation DyadicScheme::segment(unsigned depth) const {
    if (depth > kMaxSegmentDepth)
        throw Error(Errc::DepthTooLarge, "depth " + std::to_string(depth) + " exceeds 40");
    if (depth > kMaxMaterializedDepth)
        throw Error(Errc::DepthTooLarge,
                    "materializing 2^" + std::to_string(depth) + " maps; use segment_map");
    Segmentation seg;
    const std::uint64_t n = std::uint64_t{1} << depth;
    seg.maps.reserve(n);
    seg.intervals.reserve(n);
    for (std::uint64_t s = 0; s < n; ++s) {
        seg.maps.push_back(segment_map(depth, s));
        seg.intervals.push_back(seg.maps.back()(ambient_));
    }
    return seg;
}

StieltjesMeasure StieltjesMeasure::lebesgue() {
    return {[](double x) { return x; }, [](double) { return 1.0; }};
}

StieltjesMeasure StieltjesMeasure::log_power(double l) {
    return {[l](double x) { return l * std::log(x); }, [l](double x) { return l / x; }};
}

bool sampled_monotone(const StieltjesMeasure& m, const Interval& domain, int samples) {
    if (samples < 2) samples = 2;
    double prev = m.phi(domain.lo);
    for (int i = 1; i < samples; ++i) {
        const double x = domain.lo + domain.length() * i / (samples - 1);
        const double y = m.phi(x);
        if (!(y >= prev)) return false;
        prev = y;
    }
    return true;
}

}  // namespace catint
