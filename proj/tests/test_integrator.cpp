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

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "catint/error.hpp"
#include "catint/integrator.hpp"
#include "catint/step_function.hpp"
#include "support.hpp"

using namespace catint;
using catint::testing::make_rng;
using catint::testing::random_step;

namespace {

StepFunction ind(Interval amb, Interval sup, double k = 1.0) { return StepFunction::indicator(Box{amb}, Box{sup}, k); }

struct Antiderivative {
    std::string name;
    RealFn f;
    RealFn F;
    Interval domain;
    std::vector<Interval> pieces;
};

// Closed-form antiderivatives, each monotone on the listed pieces.
std::vector<Antiderivative> integrands() {
    using std::cos, std::exp, std::log, std::sin, std::sqrt, std::atan, std::pow;
    const double pi = std::numbers::pi;
    std::vector<Antiderivative> v;
    v.push_back({"x", [](double x) { return x; }, [](double x) { return x * x / 2; }, {0, 1}, {{0, 1}}});
    v.push_back({"x^2", [](double x) { return x * x; }, [](double x) { return x * x * x / 3; }, {-1, 2}, {{-1, 0}, {0, 2}}});
    v.push_back({"1/t", [](double x) { return 1 / x; }, [](double x) { return log(x); }, {1, 2}, {{1, 2}}});
    v.push_back({"exp", [](double x) { return exp(x); }, [](double x) { return exp(x); }, {-1, 3}, {{-1, 3}}});
    v.push_back({"sin", [](double x) { return sin(x); }, [](double x) { return -cos(x); }, {0, pi}, {{0, pi / 2}, {pi / 2, pi}}});
    v.push_back({"cos", [](double x) { return cos(x); }, [](double x) { return sin(x); }, {0, 2}, {{0, 2}}});
    v.push_back({"sqrt", [](double x) { return sqrt(x); }, [](double x) { return 2 * pow(x, 1.5) / 3; }, {0, 4}, {{0, 4}}});
    v.push_back({"1/(1+x^2)", [](double x) { return 1 / (1 + x * x); }, [](double x) { return atan(x); }, {-2, 3}, {{-2, 0}, {0, 3}}});
    v.push_back({"x^3-x", [](double x) { return x * x * x - x; }, [](double x) { return x * x * x * x / 4 - x * x / 2; },
                 {-1, 1}, {{-1, -1 / sqrt(3.0)}, {-1 / sqrt(3.0), 1 / sqrt(3.0)}, {1 / sqrt(3.0), 1}}});
    v.push_back({"1/t^2", [](double x) { return 1 / (x * x); }, [](double x) { return -1 / x; }, {0.5, 4}, {{0.5, 4}}});
    v.push_back({"ln", [](double x) { return log(x); }, [](double x) { return x * log(x) - x; }, {1, 5}, {{1, 5}}});
    v.push_back({"x e^x", [](double x) { return x * exp(x); }, [](double x) { return (x - 1) * exp(x); }, {-1, 1}, {{-1, 1}}});
    v.push_back({"1/sqrt(1-t^2)", [](double x) { return 1 / sqrt(1 - x * x); }, [](double x) { return std::asin(x); },
                 {0, 0.9}, {{0, 0.9}}});
    v.push_back({"e^-x", [](double x) { return exp(-x); }, [](double x) { return -exp(-x); }, {0, 5}, {{0, 5}}});
    v.push_back({"|x|", [](double x) { return std::abs(x); }, [](double x) { return x * std::abs(x) / 2; }, {-3, 1}, {{-3, 0}, {0, 1}}});
    v.push_back({"x^5", [](double x) { return pow(x, 5); }, [](double x) { return pow(x, 6) / 6; }, {0, 1.5}, {{0, 1.5}}});
    v.push_back({"1/(2+x)", [](double x) { return 1 / (2 + x); }, [](double x) { return log(2 + x); }, {-1, 6}, {{-1, 6}}});
    v.push_back({"cosh", [](double x) { return std::cosh(x); }, [](double x) { return std::sinh(x); }, {-2, 2}, {{-2, 0}, {0, 2}}});
    v.push_back({"const", [](double) { return 3.5; }, [](double x) { return 3.5 * x; }, {-1, 1}, {{-1, 1}}});
    v.push_back({"t/sqrt(1+t^2)", [](double x) { return x / sqrt(1 + x * x); }, [](double x) { return sqrt(1 + x * x); },
                 {-1, 2}, {{-1, 2}}});
    return v;
}

}  // namespace

TEST_SUITE("integrator") {

TEST_CASE("integrate_step examples") {
    CHECK(integrate_step(ind({2, 5}, {2, 5}), MeasurableSet::from_interval({2, 5})) == 3.0);
    const StepFunction f(Box{{0, 2}}, {{Box{{0, 1}}, 2.0}, {Box{{1, 2}}, 3.0}});
    CHECK(integrate_step(f, Interval{0, 2}) == 5.0);
    CHECK(integrate_step(f, MeasurableSet{}) == 0.0);
    CHECK(integrate_step(f, Interval{0.5, 1.5}) == 2.5);
    CHECK_THROWS_AS(integrate_step(f, Interval{0, 3}), Error);
}

TEST_CASE("integrate_enclosure examples") {
    const Interval unit{0, 1};
    auto r1 = integrate_enclosure([](double x) { return x; }, unit, std::span(&unit, 1), 1e-9);
    CHECK(r1.converged);
    CHECK(r1.enclosure.contains(0.5));
    CHECK(r1.enclosure.width() <= 1e-9);

    const Interval d{1, 2};
    auto r2 = integrate_enclosure([](double x) { return 1 / x; }, d, std::span(&d, 1), 1e-8);
    CHECK(r2.converged);
    CHECK(r2.enclosure.contains(std::log(2.0)));

    // Improper integral: truncated at 1 - eps with the closed-form tail
    // bracket of 1/sqrt(1-t^2) on [1-eps, 1].
    const double eps = 1e-8;
    const Interval k{0, 1 - eps};
    EnclosureOptions opt;
    opt.tail = Enclosure{2 * std::sqrt(eps) / std::sqrt(2.0), 2 * std::sqrt(eps) / std::sqrt(2.0 - eps)};
    auto r3 = integrate_enclosure([](double x) { return 1 / std::sqrt((1 - x) * (1 + x)); }, k, std::span(&k, 1), 1e-3, opt);
    CHECK(r3.enclosure.contains(std::numbers::pi / 2));
    CHECK(r3.enclosure.width() <= 1e-3);
}

TEST_CASE("integrate_enclosure contract errors") {
    const Interval d{0, 1};
    const Interval gap[] = {{0, 0.4}, {0.5, 1}};
    CHECK_THROWS_AS(integrate_enclosure([](double x) { return x; }, d, gap, 1e-3), Error);
    const Interval none[] = {{0, 0.5}};
    CHECK_THROWS_AS(integrate_enclosure([](double x) { return x; }, d, none, 1e-3), Error);
    try {
        integrate_enclosure([](double x) { return std::sin(20 * x); }, d, std::span(&d, 1), 1e-6);
        FAIL("expected NotMonotone");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotMonotone);
    }
}

TEST_CASE("enclosure soundness on 20 closed-form integrands") {
    const auto all = integrands();
    REQUIRE(all.size() == 20);
    for (const auto& c : all) {
        CAPTURE(c.name);
        const double exact = c.F(c.domain.hi) - c.F(c.domain.lo);
        for (double tol : {1e-2, 1e-5, 1e-7}) {
            const auto r = integrate_enclosure(c.f, c.domain, c.pieces, tol);
            CHECK(r.enclosure.lower <= exact + 1e-13 * std::abs(exact));
            CHECK(exact - 1e-13 * std::abs(exact) <= r.enclosure.upper);
            CHECK(r.converged);
        }
    }
}

TEST_CASE("depth cap leaves a valid unconverged enclosure") {
    const Interval d{0, 1};
    EnclosureOptions opt;
    opt.max_depth = 3;
    const auto r = integrate_enclosure([](double x) { return x * x; }, d, std::span(&d, 1), 1e-9, opt);
    CHECK_FALSE(r.converged);
    CHECK(r.enclosure.contains(1.0 / 3.0));
}

TEST_CASE("var_upper_integral examples") {
    const auto F = var_upper_integral(ind({0, 1}, {0, 1}), 0);
    for (double x : {0.0, 0.125, 0.5, 1.0}) CHECK(F(x) == x);
    CHECK(var_upper_integral(ind({0, 1}, {0, 0.5}, 2.0), 0)(1.0) == 1.0);
    const auto Z = var_upper_integral(StepFunction::zero(Box{{3, 7}}), 3);
    CHECK(Z(3) == 0.0);
    CHECK(Z(6.5) == 0.0);
    CHECK_THROWS_AS(var_upper_integral(ind({0, 1}, {0, 1}), 0.5), Error);
    CHECK_THROWS_AS(F(1.5), Error);
}

TEST_CASE("eta examples") {
    const Interval u{0, 1};
    const auto F = var_upper_integral(ind(u, u), 0);
    const auto E = eta(F, F, u);
    for (int i = 0; i <= 16; ++i) CHECK(E(i / 16.0) == i / 16.0);
    const auto Z = var_upper_integral(StepFunction::zero(Box{u}), 0);
    const auto EZ = eta(Z, Z, u);
    CHECK(EZ(0.3) == 0.0);

    auto rng = make_rng(20);
    for (int t = 0; t < 50; ++t) {
        const auto f = var_upper_integral(random_step(rng, u), 0);
        const auto g = var_upper_integral(random_step(rng, u), 0);
        const auto e = eta(f, g, u);
        CHECK(e(0.0) == 0.0);
        CHECK(e(0.5) == 0.5 * f(1.0));
        CHECK(e(1.0) == 0.5 * (f(1.0) + g(1.0)));
    }
    const auto other = var_upper_integral(ind({0, 2}, {0, 2}), 0);
    CHECK_THROWS_AS(eta(F, other, u), Error);
}

TEST_CASE("T is linear and a morphism through juxtaposition") {
    auto rng = make_rng(21);
    const Interval u{0, 1};
    for (int t = 0; t < 300; ++t) {
        const StepFunction f = random_step(rng, u), g = random_step(rng, u);
        const double a = catint::testing::dyadic_coeff(rng), b = catint::testing::dyadic_coeff(rng);
        CHECK(integrate_step(linear_combine(a, f, b, g)) == a * integrate_step(f) + b * integrate_step(g));
        CHECK(integrate_step(juxtapose({f, g})) == 0.5 * (integrate_step(f) + integrate_step(g)));
    }
}

TEST_CASE("eta naturality at dyadic points") {
    auto rng = make_rng(22);
    const Interval u{0, 1};
    for (int t = 0; t < 100; ++t) {
        const StepFunction f = random_step(rng, u, 6, 6, false), g = random_step(rng, u, 6, 6, false);
        const auto lhs = var_upper_integral(juxtapose({f, g}), 0);
        const auto rhs = eta(var_upper_integral(f, 0), var_upper_integral(g, 0), u);
        for (int i = 0; i <= 64; ++i) CHECK(std::abs(lhs(i / 64.0) - rhs(i / 64.0)) <= 1e-12);
    }
}

TEST_CASE("Chasles for the variable upper limit") {
    auto rng = make_rng(23);
    const Interval amb{-2, 2};
    for (int t = 0; t < 100; ++t) {
        const StepFunction f = random_step(rng, amb);
        const auto F = var_upper_integral(f, -2);
        const Interval ab = catint::testing::dyadic_interval(rng, amb, 8);
        CHECK(F(ab.hi) - F(ab.lo) == doctest::Approx(integrate_step(f, ab)).epsilon(1e-14));
    }
}

TEST_CASE("stieltjes_integrate examples") {
    const auto id = [](double x) { return x; };
    const auto r = stieltjes_integrate(id, StieltjesMeasure::log_power(3), {1, 2}, 1e-9);
    CHECK(r.converged);
    CHECK(std::abs(r.value - 3.0) <= 1e-9);
    CHECK(r.density_check.has_value());
    CHECK(r.density_agrees);

    const auto one = [](double) { return 1.0; };
    CHECK(stieltjes_integrate(one, StieltjesMeasure::lebesgue(), {2, 7}, 1e-9).value == doctest::Approx(5.0));
    const double e = std::exp(1.0);
    const StieltjesMeasure ln{[](double x) { return std::log(x); }, [](double x) { return 1 / x; }};
    CHECK(std::abs(stieltjes_integrate(id, ln, {1, e}, 1e-9).value - (e - 1)) <= 1e-9);

    const StepFunction f(Box{{1, 3}}, {{Box{{1, 2}}, 2.0}, {Box{{2, 3}}, -1.0}});
    CHECK(stieltjes_integrate(f, ln, {1, 3}) == doctest::Approx(2 * std::log(2.0) - (std::log(3.0) - std::log(2.0))));

    const StieltjesMeasure dec{[](double x) { return -x; }, {}};
    CHECK_THROWS_AS(stieltjes_integrate(id, dec, {0, 1}, 1e-6), Error);
}

TEST_CASE("Stieltjes step path and density path agree") {
    auto rng = make_rng(24);
    for (int t = 0; t < 20; ++t) {
        const double l = catint::testing::uniform(rng, 0.5, 4.0);
        const double a = catint::testing::uniform(rng, 0.0, 3.0), b = catint::testing::uniform(rng, 0.0, 3.0);
        const auto r = stieltjes_integrate([&](double x) { return a * x + b; }, StieltjesMeasure::log_power(l), {1, 2}, 1e-8);
        CHECK(r.density_agrees);
        CHECK(r.value == doctest::Approx(l * (a + b * std::log(2.0))).epsilon(1e-8));
    }
}

TEST_CASE("multiple_integral_affine_unit_box") {
    CHECK(multiple_integral_affine_unit_box({{"1", 1}, {"2", 1}}, 1) == 1.0);
    CHECK(multiple_integral_affine_unit_box({{"1", 3}}, 1) == 1.5);
    CHECK(multiple_integral_affine_unit_box({{"1", 3}, {"x", 2}}, 0) == 0.0);
    CHECK(multiple_integral_affine_unit_box({{"1", 4}}, 0.5) == 0.5);
    CHECK_THROWS_AS(multiple_integral_affine_unit_box({}, 1), Error);
}

}
