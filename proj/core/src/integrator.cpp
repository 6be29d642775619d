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

#include "catint/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catint/error.hpp"

namespace catint {
namespace {

struct Cell {
    double a, b, fa, fb;
};

struct Pass {
    double lower = 0.0;
    double upper = 0.0;
    double capped_width = 0.0;
    std::size_t evaluations = 0;
};

double checked_eval(const RealFn& f, double x) {
    const double y = f(x);
    if (!std::isfinite(y)) throw Error(Errc::NonFinite, "integrand is not finite at " + std::to_string(x));
    return y;
}

bool between(double lo_end, double mid, double hi_end) {
    const double slack = 1e-9 * (std::abs(lo_end) + std::abs(hi_end)) + 1e-300;
    const double lo = std::min(lo_end, hi_end) - slack;
    const double hi = std::max(lo_end, hi_end) + slack;
    return lo <= mid && mid <= hi;
}

void refine(const RealFn& f, const Cell& c, unsigned depth, double theta, unsigned max_depth, Pass& out) {
    const double h = c.b - c.a;
    const double contribution = std::abs(c.fb - c.fa) * h;
    if (contribution <= theta || depth >= max_depth || h == 0.0) {
        out.lower += std::min(c.fa, c.fb) * h;
        out.upper += std::max(c.fa, c.fb) * h;
        if (contribution > theta) out.capped_width += contribution;
        return;
    }
    const double m = c.a + 0.5 * h;
    const double fm = checked_eval(f, m);
    ++out.evaluations;
    if (!between(c.fa, fm, c.fb))
        throw Error(Errc::NotMonotone, "integrand changes direction inside [" + std::to_string(c.a) + ", " +
                                           std::to_string(c.b) + "]");
    refine(f, {c.a, m, c.fa, fm}, depth + 1, theta, max_depth, out);
    refine(f, {m, c.b, fm, c.fb}, depth + 1, theta, max_depth, out);
}

}  // namespace

double integrate_step(const StepFunction& f, const MeasurableSet& region) {
    double total = 0.0;
    for (const auto& r : region.boxes()) {
        if (r.dim() != f.dim() || !f.ambient().contains(r))
            throw Error(Errc::AmbientMismatch, "integration region is not inside the ambient box");
        for (const auto& p : f.pieces())
            if (auto cut = intersect(p.box, r)) total += p.coeff * cut->measure();
    }
    return total;
}

double integrate_step(const StepFunction& f) {
    double total = 0.0;
    for (const auto& p : f.pieces()) total += p.coeff * p.box.measure();
    return total;
}

double integrate_step(const StepFunction& f, const Interval& region) {
    return integrate_step(f, MeasurableSet::from_interval(region));
}

EnclosureResult integrate_enclosure(const RealFn& f, const Interval& domain,
                                    std::span<const Interval> monotone_pieces, double tol,
                                    const EnclosureOptions& options) {
    if (!(tol > 0.0)) throw Error(Errc::OutOfDomain, "tolerance must be positive");
    if (monotone_pieces.empty()) throw Error(Errc::BadPieces, "no pieces declared");
    if (monotone_pieces.front().lo != domain.lo || monotone_pieces.back().hi != domain.hi)
        throw Error(Errc::BadPieces, "pieces do not cover the domain");
    for (std::size_t i = 0; i < monotone_pieces.size(); ++i) {
        if (monotone_pieces[i].lo > monotone_pieces[i].hi) throw Error(Errc::BadPieces, "reversed piece");
        if (i > 0 && monotone_pieces[i].lo != monotone_pieces[i - 1].hi)
            throw Error(Errc::BadPieces, "pieces leave a gap or overlap");
    }

    std::vector<Cell> roots;
    std::size_t base_evals = 0;
    for (const auto& p : monotone_pieces) {
        roots.push_back({p.lo, p.hi, checked_eval(f, p.lo), checked_eval(f, p.hi)});
        base_evals += 2;
    }

    const Enclosure tail = options.tail.value_or(Enclosure{});
    const double budget = std::max(tol - tail.width(), 0.5 * tol);

    EnclosureResult result;
    double theta = budget;
    for (int pass_no = 0; pass_no < 40; ++pass_no) {
        Pass pass;
        for (const auto& r : roots) refine(f, r, 0, theta, options.max_depth, pass);
        result.evaluations += pass.evaluations + (pass_no == 0 ? base_evals : 0);
        result.enclosure = Enclosure{pass.lower, pass.upper} + tail;
        const double width = pass.upper - pass.lower;
        if (width <= budget) {
            result.converged = result.enclosure.width() <= tol;
            return result;
        }
        if (pass.capped_width >= budget || theta == 0.0) break;
        // Darboux widths shrink like the square root of the threshold.
        const double ratio = budget / width;
        theta *= std::clamp(0.8 * ratio * ratio, 1e-8, 0.5);
    }
    result.converged = false;
    return result;
}

VarIntegralFn::VarIntegralFn(std::vector<double> knots, std::vector<double> values, std::vector<double> slopes)
    : knots_(std::move(knots)), values_(std::move(values)), slopes_(std::move(slopes)) {
    if (knots_.size() < 2 || values_.size() != knots_.size() || slopes_.size() + 1 != knots_.size())
        throw Error(Errc::DimensionMismatch, "knot, value and slope counts disagree");
    for (std::size_t i = 1; i < knots_.size(); ++i)
        if (!(knots_[i - 1] < knots_[i])) throw Error(Errc::OrderViolation, "knots must increase");
}

double VarIntegralFn::operator()(double x) const {
    if (!(x >= knots_.front() && x <= knots_.back()))
        throw Error(Errc::OutOfDomain, "x = " + std::to_string(x) + " outside the domain");
    auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
    std::size_t j = static_cast<std::size_t>(it - knots_.begin());
    j = j == 0 ? 0 : j - 1;
    if (j >= slopes_.size()) return values_.back();
    if (x == knots_[j]) return values_[j];
    return values_[j] + slopes_[j] * (x - knots_[j]);
}

VarIntegralFn var_upper_integral(const StepFunction& f, double c) {
    if (f.dim() != 1) throw Error(Errc::AmbientMismatch, "variable upper limit needs a one-dimensional function");
    const Interval amb = f.ambient()[0];
    if (c != amb.lo) throw Error(Errc::AmbientMismatch, "base point must be the ambient lower endpoint");
    if (amb.degenerate()) throw Error(Errc::AmbientMismatch, "degenerate ambient interval");

    std::vector<double> knots{amb.lo, amb.hi};
    for (const auto& p : f.pieces()) {
        knots.push_back(p.box[0].lo);
        knots.push_back(p.box[0].hi);
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    std::vector<double> values{0.0}, slopes;
    for (std::size_t j = 0; j + 1 < knots.size(); ++j) {
        const double mid = 0.5 * (knots[j] + knots[j + 1]);
        double k = 0.0;
        for (const auto& p : f.pieces())
            if (p.box[0].lo <= mid && mid <= p.box[0].hi) k = p.coeff;
        slopes.push_back(k);
        values.push_back(values.back() + k * (knots[j + 1] - knots[j]));
    }
    return VarIntegralFn(std::move(knots), std::move(values), std::move(slopes));
}

VarIntegralFn eta(const VarIntegralFn& F, const VarIntegralFn& G, const Interval& domain) {
    if (F.domain() != domain || G.domain() != domain)
        throw Error(Errc::DomainMismatch, "eta needs F and G on the same interval");
    const DyadicScheme scheme(domain);
    const AffineMap kc = scheme.kappa_c(), kd = scheme.kappa_d();
    const double f_end = F.values().back();

    std::vector<double> knots, values, slopes;
    for (std::size_t j = 0; j < F.knots().size(); ++j) {
        knots.push_back(kc(F.knots()[j]));
        values.push_back(0.5 * F.values()[j]);
        if (j < F.slopes().size()) slopes.push_back(F.slopes()[j]);
    }
    // The midpoint is shared; G(c) = 0 makes both branches agree there.
    for (std::size_t j = 1; j < G.knots().size(); ++j) {
        knots.push_back(kd(G.knots()[j]));
        values.push_back(0.5 * (f_end + G.values()[j]));
    }
    for (double s : G.slopes()) slopes.push_back(s);
    return VarIntegralFn(std::move(knots), std::move(values), std::move(slopes));
}

double stieltjes_integrate(const StepFunction& f, const StieltjesMeasure& phi, const Interval& domain) {
    if (f.dim() != 1) throw Error(Errc::AmbientMismatch, "Stieltjes integration needs a one-dimensional function");
    if (!sampled_monotone(phi, domain)) throw Error(Errc::NotMonotone, "distribution function decreases");
    double total = 0.0;
    for (const auto& p : f.pieces())
        if (auto cut = intersect(p.box[0], domain)) total += p.coeff * phi.measure(*cut);
    return total;
}

StieltjesResult stieltjes_integrate(const RealFn& f, const StieltjesMeasure& phi, const Interval& domain,
                                    double tol, std::span<const Interval> density_pieces) {
    if (!(tol > 0.0)) throw Error(Errc::OutOfDomain, "tolerance must be positive");
    if (!sampled_monotone(phi, domain)) throw Error(Errc::NotMonotone, "distribution function decreases");

    StieltjesResult out;
    constexpr int kMaxLevel = 24;
    std::vector<double> prev_row, row;
    const double a = domain.lo, len = domain.length();
    for (int k = 0; k <= kMaxLevel; ++k) {
        const std::size_t n = std::size_t{1} << k;
        double sum = 0.0;
        double f0 = f(a), p0 = phi.phi(a);
        for (std::size_t i = 1; i <= n; ++i) {
            const double x1 = i == n ? domain.hi : a + len * static_cast<double>(i) / static_cast<double>(n);
            const double f1 = f(x1), p1 = phi.phi(x1);
            sum += 0.5 * (f0 + f1) * (p1 - p0);
            f0 = f1;
            p0 = p1;
        }
        if (!std::isfinite(sum)) throw Error(Errc::NonFinite, "Stieltjes sum is not finite");
        row.assign(static_cast<std::size_t>(k) + 1, 0.0);
        row[0] = sum;
        double pow4 = 1.0;
        for (int j = 1; j <= k; ++j) {
            pow4 *= 4.0;
            row[j] = row[j - 1] + (row[j - 1] - prev_row[j - 1]) / (pow4 - 1.0);
        }
        out.value = row[k];
        if (k >= 3 && std::abs(row[k] - prev_row[k - 1]) <= 0.5 * tol) {
            out.converged = true;
            break;
        }
        prev_row.swap(row);
    }

    if (phi.phi_prime) {
        const RealFn density = [&](double x) { return f(x) * phi.phi_prime(x); };
        const Interval whole[] = {domain};
        std::span<const Interval> pieces = density_pieces.empty() ? std::span<const Interval>(whole) : density_pieces;
        try {
            const double check_tol = std::max(tol, kDensityCheckTol);
            auto check = integrate_enclosure(density, domain, pieces, check_tol);
            out.density_check = check.enclosure;
            out.density_agrees = std::abs(out.value - check.enclosure.midpoint()) <= 2.0 * check_tol;
        } catch (const Error& e) {
            if (e.code() != Errc::NotMonotone) throw;
        }
    }
    return out;
}

double multiple_integral_affine_unit_box(const std::map<std::string, unsigned>& weights, double t) {
    if (weights.empty()) throw Error(Errc::EmptyWeights, "no vertex weights");
    if (!(t >= 0.0 && t <= 1.0)) throw Error(Errc::OutOfDomain, "t must lie in [0, 1]");
    // integral of k over [0, t]
    const double coordinate_integral = 0.5 * t * t;
    double total = 0.0;
    for (const auto& [vertex, u] : weights) {
        if (u == 0) throw Error(Errc::OutOfDomain, "weight of vertex " + vertex + " is zero");
        total += static_cast<double>(u) * coordinate_integral;
    }
    return total;
}

}  // namespace catint
