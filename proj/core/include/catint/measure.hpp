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

#ifndef CATINT_MEASURE_HPP
#define CATINT_MEASURE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace catint {

/// Closed interval [lo, hi]. Degenerate intervals (lo == hi) are legal and
/// have measure zero.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const noexcept { return hi - lo; }
    bool degenerate() const noexcept { return lo == hi; }
    bool contains(double x) const noexcept { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const noexcept { return lo <= o.lo && o.hi <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Throws OrderViolation if lo > hi, NonFinite if either endpoint is not finite.
Interval make_interval(double lo, double hi);

std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Product of n >= 1 intervals; coordinate i plays the role of basis symbol b_i.
class Box {
public:
    Box() = default;
    explicit Box(std::vector<Interval> factors);
    Box(std::initializer_list<Interval> factors) : Box(std::vector<Interval>(factors)) {}

    std::size_t dim() const noexcept { return factors_.size(); }
    const std::vector<Interval>& factors() const noexcept { return factors_; }
    const Interval& operator[](std::size_t i) const { return factors_[i]; }

    double measure() const noexcept;
    bool contains(const Box& other) const;
    bool contains_point(std::span<const double> x) const;

    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;

private:
    std::vector<Interval> factors_;
};

std::optional<Box> intersect(const Box& a, const Box& b);

/// Finite union of boxes that overlap at most on faces. Instances built by
/// normalize_set are canonical: the covered region is cut on its minimal
/// grid, cells are merged coordinate by coordinate (last coordinate first) and
/// the result is sorted lexicographically.
class MeasurableSet {
public:
    MeasurableSet() = default;

    /// A single box kept as-is, degenerate boxes included. Used for the
    /// interval component of pairs produced by the i.poset maps.
    static MeasurableSet from_box(Box box);
    static MeasurableSet from_interval(Interval iv) { return from_box(Box{iv}); }

    const std::vector<Box>& boxes() const noexcept { return boxes_; }
    bool empty() const noexcept { return boxes_.empty(); }
    /// Dimension of the member boxes; 0 for the empty set.
    std::size_t dim() const noexcept { return boxes_.empty() ? 0 : boxes_.front().dim(); }
    double measure() const noexcept;
    /// Smallest box containing every member box.
    std::optional<Box> hull() const;

    friend bool operator==(const MeasurableSet&, const MeasurableSet&) = default;

private:
    friend MeasurableSet normalize_set(std::span<const Box> raw);
    std::vector<Box> boxes_;
};

/// Splits overlapping boxes on a common grid and merges them. Boxes of
/// measure zero disappear. Throws DimensionMismatch on mixed dimensions.
MeasurableSet normalize_set(std::span<const Box> raw);
MeasurableSet set_union(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet set_intersection(const MeasurableSet& a, const MeasurableSet& b);

double lebesgue_measure(const MeasurableSet& s) noexcept;

/// x -> scale * x + shift with scale > 0.
struct AffineMap {
    double scale = 1.0;
    double shift = 0.0;

    double operator()(double x) const noexcept { return scale * x + shift; }
    double inverse(double y) const noexcept { return (y - shift) / scale; }
    Interval operator()(const Interval& iv) const noexcept { return {(*this)(iv.lo), (*this)(iv.hi)}; }
    /// (*this) o inner
    AffineMap after(const AffineMap& inner) const noexcept {
        return {scale * inner.scale, scale * inner.shift + shift};
    }

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

inline constexpr unsigned kMaxSegmentDepth = 40;
inline constexpr unsigned kMaxMaterializedDepth = 24;

struct Segmentation {
    std::vector<Interval> intervals;
    std::vector<AffineMap> maps;
};

/// Dyadic halving of [c, d]: kappa_c(x) = (x + c) / 2 and
/// kappa_d(x) = (x + d) / 2, so kappa_c([c,d]) = [c, xi] and
/// kappa_d([c,d]) = [xi, d] with xi the midpoint.
class DyadicScheme {
public:
    explicit DyadicScheme(Interval ambient);

    const Interval& ambient() const noexcept { return ambient_; }
    double midpoint() const noexcept { return 0.5 * (ambient_.lo + ambient_.hi); }
    AffineMap kappa_c() const noexcept { return {0.5, 0.5 * ambient_.lo}; }
    AffineMap kappa_d() const noexcept { return {0.5, 0.5 * ambient_.hi}; }

    /// Map number s at the given depth: kappa_{w_1} o ... o kappa_{w_t}
    /// where w is the binary expansion of s, most significant letter first,
    /// 0 = c and 1 = d. Its image is the s-th interval from the left.
    AffineMap segment_map(unsigned depth, std::uint64_t s) const;

    /// All 2^depth intervals and maps. depth <= kMaxSegmentDepth is the
    /// contract; only depth <= kMaxMaterializedDepth is materialized.
    Segmentation segment(unsigned depth) const;

private:
    Interval ambient_;
};

/// Distribution function of a Lebesgue-Stieltjes measure on the real line.
struct StieltjesMeasure {
    std::function<double(double)> phi;
    /// Optional derivative, used for the density cross-check.
    std::function<double(double)> phi_prime;

    double measure(const Interval& iv) const { return phi(iv.hi) - phi(iv.lo); }

    static StieltjesMeasure lebesgue();
    /// phi_l(x) = ln(x^l) = l ln x on x > 0.
    static StieltjesMeasure log_power(double l);
};

/// Samples phi on a uniform grid of the interval and reports whether it never
/// decreases.
bool sampled_monotone(const StieltjesMeasure& m, const Interval& domain, int samples = 257);

}  // namespace catint

#endif  // CATINT_MEASURE_HPP
