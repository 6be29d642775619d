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

#ifndef CATINT_INTEGRATOR_HPP
#define CATINT_INTEGRATOR_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catint/measure.hpp"
#include "catint/step_function.hpp"

namespace catint {

using RealFn = std::function<double(double)>;

/// Certified bracket [lower, upper] of a real number.
struct Enclosure {
    double lower = 0.0;
    double upper = 0.0;

    double width() const noexcept { return upper - lower; }
    double midpoint() const noexcept { return 0.5 * (lower + upper); }
    bool contains(double x) const noexcept { return lower <= x && x <= upper; }
    bool overlaps(const Enclosure& o) const noexcept { return lower <= o.upper && o.lower <= upper; }

    Enclosure operator-() const noexcept { return {-upper, -lower}; }
    friend Enclosure operator+(const Enclosure& a, const Enclosure& b) noexcept {
        return {a.lower + b.lower, a.upper + b.upper};
    }
    friend Enclosure operator-(const Enclosure& a, const Enclosure& b) noexcept { return a + (-b); }
    friend Enclosure operator*(double k, const Enclosure& a) noexcept {
        return k >= 0 ? Enclosure{k * a.lower, k * a.upper} : Enclosure{k * a.upper, k * a.lower};
    }
    friend bool operator==(const Enclosure&, const Enclosure&) = default;
};

/// Exact sum of k_i * mu(X_i cap region). Throws AmbientMismatch when the
/// region is not inside the ambient box of f.
double integrate_step(const StepFunction& f, const MeasurableSet& region);
double integrate_step(const StepFunction& f);
double integrate_step(const StepFunction& f, const Interval& region);

struct EnclosureOptions {
    /// Maximum number of halvings applied to any single cell.
    unsigned max_depth = 30;
    /// Caller-supplied bracket for a truncated improper tail; added to the
    /// result and counted against the tolerance.
    std::optional<Enclosure> tail;
};

struct EnclosureResult {
    Enclosure enclosure;
    /// width <= tol. When false the enclosure is still valid, only wider.
    bool converged = false;
    std::size_t evaluations = 0;
};

/// Lower and upper Darboux sums of f over the declared monotone pieces,
/// refined adaptively: a cell is halved while its contribution
/// |f(b) - f(a)| * (b - a) to the total width exceeds a threshold, and the
/// threshold is lowered until the total width is at most tol or every
/// offending cell has hit max_depth.
///
/// Pieces must tile the domain in order (BadPieces otherwise). A piece on
/// which f is observed to change direction raises NotMonotone.
EnclosureResult integrate_enclosure(const RealFn& f, const Interval& domain,
                                    std::span<const Interval> monotone_pieces, double tol,
                                    const EnclosureOptions& options = {});

/// Continuous piecewise-linear function F on [c, d] with F(c) = 0, stored as
/// knots, knot values and per-segment slopes.
class VarIntegralFn {
public:
    VarIntegralFn(std::vector<double> knots, std::vector<double> values, std::vector<double> slopes);

    double base() const noexcept { return knots_.front(); }
    Interval domain() const noexcept { return {knots_.front(), knots_.back()}; }
    const std::vector<double>& knots() const noexcept { return knots_; }
    const std::vector<double>& values() const noexcept { return values_; }
    const std::vector<double>& slopes() const noexcept { return slopes_; }

    /// Throws OutOfDomain outside [c, d].
    double operator()(double x) const;

private:
    std::vector<double> knots_;
    std::vector<double> values_;
    std::vector<double> slopes_;
};

/// x -> integral of f over [c, x]. f must be one-dimensional with ambient
/// lower endpoint c (AmbientMismatch otherwise).
VarIntegralFn var_upper_integral(const StepFunction& f, double c);

/// eta(F, G)(x) = F(2x - c) / 2 on [c, xi] and (F(d) + G(2x - d)) / 2 on
/// [xi, d]. Throws DomainMismatch unless F and G both live on domain.
VarIntegralFn eta(const VarIntegralFn& F, const VarIntegralFn& G, const Interval& domain);

/// Exact Lebesgue-Stieltjes integral of a one-dimensional step function:
/// sum_i k_i (phi(hi_i) - phi(lo_i)) over the pieces clipped to domain.
/// Throws NotMonotone if phi decreases at a sample point.
double stieltjes_integrate(const StepFunction& f, const StieltjesMeasure& phi, const Interval& domain);

/// Tightest tolerance used for the density cross-check.
inline constexpr double kDensityCheckTol = 1e-6;

struct StieltjesResult {
    double value = 0.0;
    bool converged = false;
    /// Enclosure of the integral of f * phi' when phi has a derivative.
    std::optional<Enclosure> density_check;
    /// |value - density_check midpoint| <= 2 max(tol, kDensityCheckTol); true
    /// when no check ran.
    bool density_agrees = true;
};

/// Romberg extrapolation of trapezoidal Stieltjes sums
/// sum (f(x_i) + f(x_{i+1})) / 2 * (phi(x_{i+1}) - phi(x_i)) on dyadic
/// partitions, stopped when consecutive diagonal entries differ by at most
/// tol / 2. density_pieces declares where f * phi' is monotone for the cross
/// check; empty means the whole domain.
StieltjesResult stieltjes_integrate(const RealFn& f, const StieltjesMeasure& phi, const Interval& domain,
                                    double tol, std::span<const Interval> density_pieces = {});

/// sum_v u_v * t^2 / 2, i.e. the sum over vertices of u_v times the integral
/// of k over [0, t]. Throws EmptyWeights on an empty map, OutOfDomain for t
/// outside [0, 1] or a zero weight.
double multiple_integral_affine_unit_box(const std::map<std::string, unsigned>& weights, double t);

}  // namespace catint

#endif  // CATINT_INTEGRATOR_HPP
