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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "catint/error.hpp"
#include "catint/measure.hpp"
#include "support.hpp"

using namespace catint;
using catint::testing::make_rng;

TEST_SUITE("measure") {

TEST_CASE("make_interval") {
    CHECK(make_interval(0, 1) == Interval{0, 1});
    const Interval d = make_interval(2, 2);
    CHECK(d.degenerate());
    CHECK(d.length() == 0.0);
    try {
        make_interval(1, 0);
        FAIL("expected OrderViolation");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OrderViolation);
    }
    try {
        make_interval(0, std::numeric_limits<double>::infinity());
        FAIL("expected NonFinite");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonFinite);
    }
}

TEST_CASE("lebesgue_measure examples") {
    CHECK(lebesgue_measure(MeasurableSet::from_box(Box{{0, 1}, {0, 1}})) == 1.0);
    const Box two[] = {Box{{0, 1}}, Box{{2, 3}}};
    CHECK(lebesgue_measure(normalize_set(two)) == 2.0);
    CHECK(lebesgue_measure(MeasurableSet::from_box(Box{{0, 2}, {0, 3}})) == 6.0);
    CHECK(lebesgue_measure(MeasurableSet::from_interval({4, 4})) == 0.0);
}

TEST_CASE("normalize_set examples") {
    const Box overlap[] = {Box{{0, 2}}, Box{{1, 3}}};
    const MeasurableSet u = normalize_set(overlap);
    REQUIRE(u.boxes().size() == 1);
    CHECK(u.boxes()[0] == Box{{0, 3}});
    CHECK(u.measure() == 3.0);

    CHECK(normalize_set(std::vector<Box>{}).empty());
    CHECK(normalize_set(std::vector<Box>{}).measure() == 0.0);

    const Box stacked[] = {Box{{0, 1}, {0, 1}}, Box{{0, 1}, {1, 2}}};
    const MeasurableSet s = normalize_set(stacked);
    REQUIRE(s.boxes().size() == 1);
    CHECK(s.boxes()[0] == Box{{0, 1}, {0, 2}});

    const Box mixed[] = {Box{{0, 1}}, Box{{0, 1}, {0, 1}}};
    CHECK_THROWS_AS(normalize_set(mixed), Error);
}

TEST_CASE("segmentation at depth 0, 1 and 3") {
    const DyadicScheme sch({0, 1});
    const Segmentation s0 = sch.segment(0);
    REQUIRE(s0.maps.size() == 1);
    CHECK(s0.maps[0] == AffineMap{1.0, 0.0});
    CHECK(s0.intervals[0] == Interval{0, 1});

    const Segmentation s1 = sch.segment(1);
    REQUIRE(s1.intervals.size() == 2);
    CHECK(s1.intervals[0] == Interval{0, 0.5});
    CHECK(s1.intervals[1] == Interval{0.5, 1});
    CHECK(s1.maps[0] == AffineMap{0.5, 0.0});
    CHECK(s1.maps[1] == AffineMap{0.5, 0.5});

    // kappa_31 = kc kc kc, kappa_32 = kc kc kd, ..., kappa_38 = kd kd kd
    const Segmentation s3 = sch.segment(3);
    REQUIRE(s3.maps.size() == 8);
    const AffineMap kc = sch.kappa_c(), kd = sch.kappa_d();
    for (unsigned s = 0; s < 8; ++s) {
        const AffineMap m1 = (s & 4) ? kd : kc, m2 = (s & 2) ? kd : kc, m3 = (s & 1) ? kd : kc;
        const AffineMap composed = m1.after(m2.after(m3));
        CHECK(s3.maps[s] == composed);
        CHECK(s3.intervals[s] == Interval{s / 8.0, (s + 1) / 8.0});
    }
}

TEST_CASE("segmentation depth guard") {
    const DyadicScheme sch({0, 1});
    CHECK_NOTHROW(sch.segment_map(40, (std::uint64_t{1} << 40) - 1));
    CHECK_THROWS_AS(sch.segment_map(41, 0), Error);
    CHECK_THROWS_AS(sch.segment(kMaxMaterializedDepth + 1), Error);
}

TEST_CASE("segmentation telescopes and maps compose letter by letter") {
    auto rng = make_rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const double c = static_cast<double>(catint::testing::uniform_int(rng, -8, 8));
        const double d = c + static_cast<double>(catint::testing::uniform_int(rng, 1, 16));
        const DyadicScheme sch({c, d});
        const unsigned depth = static_cast<unsigned>(catint::testing::uniform_int(rng, 0, 10));
        const Segmentation seg = sch.segment(depth);
        REQUIRE(seg.intervals.size() == (std::size_t{1} << depth));
        CHECK(seg.intervals.front().lo == c);
        CHECK(seg.intervals.back().hi == d);
        double total = 0.0;
        for (std::size_t i = 0; i < seg.intervals.size(); ++i) {
            CHECK(seg.intervals[i].lo < seg.intervals[i].hi);
            if (i > 0) CHECK(seg.intervals[i].lo == seg.intervals[i - 1].hi);
            total += seg.intervals[i].length();
        }
        CHECK(total == d - c);

        for (int k = 0; k < 5; ++k) {
            const std::uint64_t s = static_cast<std::uint64_t>(
                catint::testing::uniform_int(rng, 0, static_cast<int>(seg.maps.size()) - 1));
            for (int j = 0; j < 10; ++j) {
                const double x = catint::testing::uniform(rng, c, d);
                double y = x;
                for (unsigned bit = 0; bit < depth; ++bit)
                    y = ((s >> bit) & 1) ? sch.kappa_d()(y) : sch.kappa_c()(y);
                CHECK(seg.maps[s](x) == doctest::Approx(y).epsilon(1e-14));
            }
            CHECK(seg.maps[s](Interval{c, d}) == seg.intervals[s]);
        }
    }
}

TEST_CASE("measure additivity and normalize idempotence") {
    auto rng = make_rng(2);
    const Interval unit{0, 1};
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Box> raw;
        const int n = catint::testing::uniform_int(rng, 0, 6);
        for (int i = 0; i < n; ++i)
            raw.push_back(Box{catint::testing::dyadic_interval(rng, unit, 5),
                              catint::testing::dyadic_interval(rng, unit, 5)});
        const MeasurableSet s = normalize_set(raw);
        CHECK(normalize_set(s.boxes()) == s);

        // Disjoint pieces: cut s along x = 1/2.
        const MeasurableSet left = set_intersection(s, MeasurableSet::from_box(Box{{0, 0.5}, {0, 1}}));
        const MeasurableSet right = set_intersection(s, MeasurableSet::from_box(Box{{0.5, 1}, {0, 1}}));
        CHECK(lebesgue_measure(set_union(left, right)) == lebesgue_measure(left) + lebesgue_measure(right));
        CHECK(lebesgue_measure(set_union(left, right)) == lebesgue_measure(s));

        // Union never exceeds the raw sum.
        double raw_sum = 0.0;
        for (const auto& b : raw) raw_sum += b.measure();
        CHECK(s.measure() <= raw_sum);
    }
}

TEST_CASE("Stieltjes measures") {
    const StieltjesMeasure leb = StieltjesMeasure::lebesgue();
    CHECK(leb.measure({2, 5}) == 3.0);
    const StieltjesMeasure phi3 = StieltjesMeasure::log_power(3);
    CHECK(phi3.measure({1, std::exp(1.0)}) == doctest::Approx(3.0));
    CHECK(sampled_monotone(phi3, {1, 2}));
    StieltjesMeasure dec{[](double x) { return -x; }, {}};
    CHECK_FALSE(sampled_monotone(dec, {0, 1}));
}

}
