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

#include "catint/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catint/error.hpp"
#include "grid.hpp"

namespace catint {
namespace {

std::vector<Piece> canonical_pieces(const Box& ambient, std::span<const std::pair<Box, double>> raw) {
    auto field = detail::rasterize(ambient.dim(), raw, detail::Fill::Add);
    detail::simplify(field);
    std::vector<Piece> out;
    for (auto& [box, coeff] : detail::to_boxes(field)) out.push_back({std::move(box), coeff});
    return out;
}

void require_same_ambient(const StepFunction& f, const StepFunction& g) {
    if (f.ambient() != g.ambient()) throw Error(Errc::AmbientMismatch, "step functions live on different boxes");
}

}  // namespace

StepFunction::StepFunction(Box ambient, std::span<const Piece> pieces) : ambient_(std::move(ambient)) {
    if (ambient_.dim() == 0) throw Error(Errc::DimensionMismatch, "ambient box has no factors");
    std::vector<std::pair<Box, double>> raw;
    raw.reserve(pieces.size());
    for (const auto& p : pieces) {
        if (p.box.dim() != ambient_.dim()) throw Error(Errc::DimensionMismatch, "piece dimension");
        if (!ambient_.contains(p.box)) throw Error(Errc::OutOfAmbient, "piece outside the ambient box");
        if (!std::isfinite(p.coeff)) throw Error(Errc::NonFinite, "piece coefficient");
        raw.emplace_back(p.box, p.coeff);
    }
    pieces_ = canonical_pieces(ambient_, raw);
}

StepFunction StepFunction::indicator(Box ambient, Box support, double coeff) {
    const Piece p{std::move(support), coeff};
    return StepFunction(std::move(ambient), std::span<const Piece>(&p, 1));
}

PointValue eval(const StepFunction& f, std::span<const double> x) {
    if (!f.ambient().contains_point(x)) throw Error(Errc::OutOfDomain, "point outside the ambient box");
    PointValue out;
    const std::size_t n = f.dim();
    bool any = false;
    for (const auto& p : f.pieces()) {
        if (!p.box.contains_point(x)) continue;
        bool interior = true;
        for (std::size_t k = 0; k < n; ++k)
            if (x[k] == p.box[k].lo || x[k] == p.box[k].hi) interior = false;
        if (interior) return {p.coeff, false};
        out.on_boundary = true;
        out.value = any ? std::max(out.value, p.coeff) : p.coeff;
        any = true;
    }
    if (!out.on_boundary) return {0.0, false};
    // A face point of the support may also touch the zero region; probe the
    // neighbouring cells just off the point.
    std::vector<double> probe(x.begin(), x.end());
    const std::size_t corners = std::size_t{1} << n;
    for (std::size_t c = 0; c < corners; ++c) {
        for (std::size_t k = 0; k < n; ++k) {
            const double h = 1e-9 * std::max(1.0, f.ambient()[k].length());
            probe[k] = x[k] + (((c >> k) & 1u) ? h : -h);
        }
        if (!f.ambient().contains_point(probe)) continue;
        bool covered = false;
        for (const auto& p : f.pieces())
            if (p.box.contains_point(probe)) covered = true;
        if (!covered) out.value = std::max(out.value, 0.0);
    }
    return out;
}

StepFunction linear_combine(double a, const StepFunction& f, double b, const StepFunction& g) {
    require_same_ambient(f, g);
    std::vector<Piece> raw;
    raw.reserve(f.pieces().size() + g.pieces().size());
    for (const auto& p : f.pieces()) raw.push_back({p.box, a * p.coeff});
    for (const auto& p : g.pieces()) raw.push_back({p.box, b * p.coeff});
    return StepFunction(f.ambient(), raw);
}

StepFunction scale(double a, const StepFunction& f) {
    std::vector<Piece> raw;
    for (const auto& p : f.pieces()) raw.push_back({p.box, a * p.coeff});
    return StepFunction(f.ambient(), raw);
}

StepFunction restrict_to(const StepFunction& f, const Box& region) {
    std::vector<Piece> raw;
    for (const auto& p : f.pieces())
        if (auto cut = intersect(p.box, region)) raw.push_back({*cut, p.coeff});
    return StepFunction(f.ambient(), raw);
}

double p_norm(const StepFunction& f, double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw Error(Errc::BadExponent, "p = " + std::to_string(p));
    double sum = 0.0;
    for (const auto& piece : f.pieces()) sum += std::pow(std::abs(piece.coeff) * piece.box.measure(), p);
    return std::pow(sum, 1.0 / p);
}

bool ae_equal(const StepFunction& f, const StepFunction& g, double coeff_tol) {
    const auto diff = linear_combine(1.0, f, -1.0, g);
    double support = 0.0;
    for (const auto& p : diff.pieces())
        if (std::abs(p.coeff) > coeff_tol) support += p.box.measure();
    return support == 0.0;
}

StepFunction juxtapose(const FunctionTuple& tuple) {
    if (tuple.empty()) throw Error(Errc::ArityMismatch, "empty tuple");
    const Box& ambient = tuple.front().ambient();
    const std::size_t n = ambient.dim();
    if (n >= 20 || tuple.size() != (std::size_t{1} << n))
        throw Error(Errc::ArityMismatch, "expected 2^" + std::to_string(n) + " entries, got " +
                                              std::to_string(tuple.size()));
    std::vector<DyadicScheme> schemes;
    for (const auto& f : ambient.factors()) schemes.emplace_back(f);

    std::vector<Piece> raw;
    for (std::size_t w = 0; w < tuple.size(); ++w) {
        const auto& entry = tuple[w];
        if (entry.ambient() != ambient) throw Error(Errc::AmbientMismatch, "tuple entries differ in ambient");
        std::vector<AffineMap> maps(n);
        for (std::size_t i = 0; i < n; ++i) {
            const bool letter_d = (w >> (n - 1 - i)) & 1u;
            maps[i] = letter_d ? schemes[i].kappa_d() : schemes[i].kappa_c();
        }
        for (const auto& p : entry.pieces()) {
            std::vector<Interval> img(n);
            for (std::size_t i = 0; i < n; ++i) img[i] = maps[i](p.box[i]);
            raw.push_back({Box(std::move(img)), p.coeff});
        }
    }
    return StepFunction(ambient, raw);
}

double direct_sum_norm(const FunctionTuple& tuple, double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw Error(Errc::BadExponent, "p = " + std::to_string(p));
    if (tuple.empty()) throw Error(Errc::ArityMismatch, "empty tuple");
    const Box& ambient = tuple.front().ambient();
    const std::size_t n = ambient.dim();
    if (n >= 20 || tuple.size() != (std::size_t{1} << n)) throw Error(Errc::ArityMismatch, "tuple length");
    const double total = ambient.measure();
    const double side = std::pow(total, 1.0 / static_cast<double>(n));
    const double factor = std::pow(side / total, static_cast<double>(n));
    double sum = 0.0;
    for (const auto& f : tuple) {
        if (f.ambient() != ambient) throw Error(Errc::AmbientMismatch, "tuple entries differ in ambient");
        sum += std::pow(p_norm(f, p), p);
    }
    return std::pow(factor * sum, 1.0 / p);
}

}  // namespace catint
