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

#include "catint/elemfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "catint/error.hpp"

namespace catint {
namespace {

double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

}  // namespace

namespace detail {

// Cumulative enclosures of the integral of a positive convex function,
// measured outward from a base point. On a cell [a, b] the midpoint rule is a
// lower bound and the trapezoid rule an upper bound.
class CumulativeTable {
public:
    CumulativeTable(RealFn f, double lo, double hi, double base, double tol);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

    /// Signed integral from the base point to y.
    Enclosure from_base(double y) const;
    std::vector<std::pair<double, Enclosure>> samples() const;
    std::size_t size() const noexcept { return right_.knots.size() + (left_.knots.empty() ? 0 : left_.knots.size() - 1); }

private:
    struct Side {
        std::vector<double> knots;    // outward from the base
        std::vector<Enclosure> cum;   // unsigned integral between base and knot
    };

    Enclosure cell(double a, double b) const;
    void split(double a, double b, unsigned depth, double theta, std::vector<std::pair<double, Enclosure>>& out) const;
    Side build_side(double from, double to, double theta) const;

    RealFn f_;
    double lo_, hi_, base_;
    Side right_, left_;
};

namespace {

constexpr double kPad = 8.0 * std::numeric_limits<double>::epsilon();


Enclosure sum_round(const Enclosure& a, const Enclosure& b) {
    return {down(a.lower + b.lower), up(a.upper + b.upper)};
}

}  // namespace

Enclosure CumulativeTable::cell(double a, double b) const {
    const double h = b - a;
    if (h <= 0.0) return {0.0, 0.0};
    const double mid = h * f_(0.5 * (a + b));
    const double trap = h * 0.5 * (f_(a) + f_(b));
    return {std::min(mid, trap) * (1.0 - kPad), std::max(mid, trap) * (1.0 + kPad)};
}

void CumulativeTable::split(double a, double b, unsigned depth, double theta,
                            std::vector<std::pair<double, Enclosure>>& out) const {
    const Enclosure e = cell(a, b);
    const double m = 0.5 * (a + b);
    if (e.width() <= theta || depth >= 400 || !(a < m && m < b)) {
        out.emplace_back(b, e);
        return;
    }
    split(a, m, depth + 1, theta, out);
    split(m, b, depth + 1, theta, out);
}

CumulativeTable::Side CumulativeTable::build_side(double from, double to, double theta) const {
    Side s;
    s.knots.push_back(from);
    s.cum.push_back({0.0, 0.0});
    if (from == to) return s;
    const double a = std::min(from, to);
    const double b = std::max(from, to);
    constexpr int kInitial = 16;
    std::vector<std::pair<double, Enclosure>> cells;  // (right end, bracket), left to right
    double left = a;
    for (int i = 1; i <= kInitial; ++i) {
        const double right = i == kInitial ? b : a + (b - a) * i / kInitial;
        split(left, right, 0, theta, cells);
        left = right;
    }
    if (to > from) {
        for (const auto& [r, e] : cells) {
            s.knots.push_back(r);
            s.cum.push_back(sum_round(s.cum.back(), e));
        }
    } else {
        for (std::size_t i = cells.size(); i-- > 0;) {
            const double l = i == 0 ? a : cells[i - 1].first;
            s.knots.push_back(l);
            s.cum.push_back(sum_round(s.cum.back(), cells[i].second));
        }
    }
    return s;
}

CumulativeTable::CumulativeTable(RealFn f, double lo, double hi, double base, double tol)
    : f_(std::move(f)), lo_(lo), hi_(hi), base_(base) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(Errc::OutOfDomain, "tolerance must be positive");
    const double target = 0.5 * tol;
    double theta = target / 256.0;
    bool grew = false;
    double last = std::numeric_limits<double>::infinity();
    for (int pass = 0; pass < 30; ++pass) {
        Side r = build_side(base_, hi_, theta);
        Side l = build_side(base_, lo_, theta);
        const double w = r.cum.back().width() + l.cum.back().width();
        // Rounding floor: refining further no longer narrows the bracket.
        if (w > 0.9 * last) break;
        right_ = std::move(r);
        left_ = std::move(l);
        last = w;
        if (w <= target) {
            if (grew || w >= 0.25 * target) break;
            // First pass was far too fine; coarsen once and keep it only if it still fits.
            const double coarse = theta * std::pow(0.9 * target / std::max(w, 1e-300), 1.5);
            const Side r = build_side(base_, hi_, coarse);
            const Side l = build_side(base_, lo_, coarse);
            if (r.cum.back().width() + l.cum.back().width() <= target) {
                right_ = r;
                left_ = l;
            }
            break;
        }
        grew = true;
        theta *= std::clamp(std::pow(0.9 * target / w, 1.5), 1e-6, 0.5);
    }
}

Enclosure CumulativeTable::from_base(double y) const {
    if (!(lo_ <= y && y <= hi_)) throw Error(Errc::OutOfDomain, "point outside the table");
    if (y >= base_) {
        const auto& k = right_.knots;
        const std::size_t i = static_cast<std::size_t>(std::upper_bound(k.begin(), k.end(), y) - k.begin()) - 1;
        return sum_round(right_.cum[i], cell(k[i], y));
    }
    const auto& k = left_.knots;
    // knots decrease; first knot below y marks the cell
    std::size_t i = 0;
    {
        std::size_t lo = 0, hi = k.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi + 1) / 2;
            if (k[mid] >= y) lo = mid; else hi = mid - 1;
        }
        i = lo;
    }
    return -sum_round(left_.cum[i], cell(y, k[i]));
}

std::vector<std::pair<double, Enclosure>> CumulativeTable::samples() const {
    std::vector<std::pair<double, Enclosure>> out;
    for (std::size_t i = left_.knots.size(); i-- > 1;) out.emplace_back(left_.knots[i], -left_.cum[i]);
    for (std::size_t i = 0; i < right_.knots.size(); ++i) out.emplace_back(right_.knots[i], right_.cum[i]);
    return out;
}

}  // namespace detail

namespace {

using detail::CumulativeTable;

constexpr double kEdge = 1.0 - kArcTruncation;
constexpr double kLnLo = 1.0 / 64.0;
constexpr double kLnHi = 64.0;

double arc_integrand(double t) { return 1.0 / std::sqrt((1.0 - t) * (1.0 + t)); }
double recip(double t) { return 1.0 / t; }

// Integral of 1/sqrt(1 - t^2) over [1 - eps, z] for z in [1 - eps, 1].
Enclosure arc_tail(double z) {
    const double eps = kArcTruncation;
    const double core = 2.0 * (std::sqrt(eps) - std::sqrt(1.0 - z));
    if (core <= 0.0) return {0.0, 0.0};
    return {down(core / std::sqrt(1.0 + z)) * (1.0 - 1e-15), up(core / std::sqrt(2.0 - eps)) * (1.0 + 1e-15)};
}

// Integral over [y, 1] for y in (1 - eps, 1].
Enclosure arc_upper_end(double y) {
    const double core = 2.0 * std::sqrt(1.0 - y);
    return {core / std::sqrt(2.0) * (1.0 - 1e-15), core / std::sqrt(1.0 + y) * (1.0 + 1e-15)};
}


enum class TableKind { As, Ac, Ln };

std::shared_ptr<const CumulativeTable> table_for(TableKind kind, double tol) {
    static std::mutex mu;
    static std::map<std::pair<int, double>, std::shared_ptr<const CumulativeTable>> cache;
    const std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{static_cast<int>(kind), tol}];
    if (!slot) {
        switch (kind) {
            case TableKind::As: slot = std::make_shared<const CumulativeTable>(arc_integrand, -kEdge, kEdge, 0.0, tol); break;
            case TableKind::Ac: slot = std::make_shared<const CumulativeTable>(arc_integrand, -kEdge, kEdge, kEdge, tol); break;
            case TableKind::Ln: slot = std::make_shared<const CumulativeTable>(recip, kLnLo, kLnHi, 1.0, tol); break;
        }
    }
    return slot;
}

void check_tol(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(Errc::OutOfDomain, "tolerance must be positive");
}

Enclosure asin_from(const CumulativeTable& t, double y) {
    if (!(std::abs(y) <= 1.0)) throw Error(Errc::OutOfDomain, "asin needs |y| <= 1");
    if (std::abs(y) <= kEdge) return t.from_base(y);
    if (y > 0) return t.from_base(kEdge) + arc_tail(y);
    return t.from_base(-kEdge) - arc_tail(-y);
}

Enclosure acos_from(const CumulativeTable& t, double y) {
    if (!(std::abs(y) <= 1.0)) throw Error(Errc::OutOfDomain, "acos needs |y| <= 1");
    if (y > kEdge) return arc_upper_end(y);
    const Enclosure tail = arc_tail(1.0);
    if (y >= -kEdge) return tail - t.from_base(y);
    return tail - t.from_base(-kEdge) + arc_tail(-y);
}

Enclosure ln_from(const CumulativeTable& t, double y, double tol) {
    if (!(y > 0.0) || !std::isfinite(y)) throw Error(Errc::OutOfDomain, "ln needs a finite y > 0");
    if (kLnLo <= y && y <= kLnHi) return t.from_base(y);
    const CumulativeTable direct(recip, std::min(1.0, y), std::max(1.0, y), 1.0, tol);
    return direct.from_base(y);
}

// Bracket the solution of g(y) = x for increasing g with enclosure G on
// [a, b]; solutions outside [a, b] are clamped to the ends.
template <class G>
Enclosure invert_increasing(const G& g, double a, double b, double x, double rel) {
    auto bisect = [&](auto below) {
        // below(y) true means the solution is certainly > y
        double lo = a, hi = b;
        if (!below(lo)) return std::pair{lo, lo};
        if (below(hi)) return std::pair{hi, hi};
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (!(lo < mid && mid < hi)) break;
            if (hi - lo <= rel * std::max(std::abs(lo), std::abs(hi))) break;
            (below(mid) ? lo : hi) = mid;
        }
        return std::pair{lo, hi};
    };
    const auto [l0, l1] = bisect([&](double y) { return g(y).upper < x; });
    const auto [u0, u1] = bisect([&](double y) { return g(y).lower <= x; });
    (void)l1;
    (void)u0;
    return {l0, u1};
}

}  // namespace

std::string_view elem_name(ElemName n) noexcept {
    switch (n) {
        case ElemName::As: return "as";
        case ElemName::Ac: return "ac";
        case ElemName::S: return "s";
        case ElemName::C: return "c";
        case ElemName::Ln: return "ln";
        case ElemName::Exp: return "exp";
    }
    return "?";
}

ElemName parse_elem_name(std::string_view s) {
    if (s == "as" || s == "asin") return ElemName::As;
    if (s == "ac" || s == "acos") return ElemName::Ac;
    if (s == "s" || s == "sin") return ElemName::S;
    if (s == "c" || s == "cos") return ElemName::C;
    if (s == "ln" || s == "log") return ElemName::Ln;
    if (s == "exp") return ElemName::Exp;
    throw Error(Errc::OutOfDomain, "unknown function name '" + std::string(s) + "'");
}

ElemFnHandle::ElemFnHandle(ElemName name, double tol) : name_(name), tol_(tol) {
    check_tol(tol);
    switch (name) {
        case ElemName::As:
            table_ = table_for(TableKind::As, tol);
            break;
        case ElemName::S:
            table_ = table_for(TableKind::As, tol);
            half_period_ = asin_from(*table_, 1.0) - asin_from(*table_, -1.0);
            break;
        case ElemName::Ac:
            table_ = table_for(TableKind::Ac, tol);
            break;
        case ElemName::C:
            table_ = table_for(TableKind::Ac, tol);
            half_period_ = acos_from(*table_, -1.0);
            break;
        case ElemName::Ln:
        case ElemName::Exp:
            table_ = table_for(TableKind::Ln, tol);
            break;
    }
}

ElemFnHandle::~ElemFnHandle() = default;
ElemFnHandle::ElemFnHandle(const ElemFnHandle&) = default;
ElemFnHandle& ElemFnHandle::operator=(const ElemFnHandle&) = default;

std::size_t ElemFnHandle::table_size() const { return table_->size(); }

std::vector<std::pair<double, Enclosure>> ElemFnHandle::samples() const { return table_->samples(); }

Enclosure ElemFnHandle::operator()(double x) const {
    const CumulativeTable& t = *table_;
    const double rel = 1e-4 * tol_;
    switch (name_) {
        case ElemName::As: return asin_from(t, x);
        case ElemName::Ac: return acos_from(t, x);
        case ElemName::Ln: return ln_from(t, x, tol_);
        case ElemName::S:
        case ElemName::C: {
            if (!std::isfinite(x) || std::abs(x) > 1e9)
                throw Error(Errc::InversionFailed, "argument too large for periodic reduction");
            const Enclosure& p = half_period_;
            const bool is_sin = name_ == ElemName::S;
            const double u = is_sin ? std::round(x / p.midpoint()) : std::floor(x / p.midpoint());
            const double a = u >= 0 ? down(x - u * p.upper) : down(x - u * p.lower);
            const double b = u >= 0 ? up(x - u * p.lower) : up(x - u * p.upper);
            Enclosure r;
            if (is_sin) {
                auto g = [&](double y) { return asin_from(t, y); };
                r = {invert_increasing(g, -1.0, 1.0, a, rel).lower, invert_increasing(g, -1.0, 1.0, b, rel).upper};
            } else {
                auto g = [&](double y) { return -acos_from(t, y); };
                r = {invert_increasing(g, -1.0, 1.0, -b, rel).lower, invert_increasing(g, -1.0, 1.0, -a, rel).upper};
            }
            return std::fmod(std::abs(u), 2.0) == 1.0 ? -r : r;
        }
        case ElemName::Exp: {
            if (!std::isfinite(x) || std::abs(x) > kExpRange)
                throw Error(Errc::InversionFailed, "exp argument outside [-" + std::to_string(kExpRange) + ", " +
                                                       std::to_string(kExpRange) + "]");
            // Beyond the shared table, one wide table serves the whole search.
            constexpr double kWide = 0x1p60;
            std::optional<CumulativeTable> wide;
            if (x > t.from_base(kLnHi).lower) wide.emplace(recip, 1.0, kWide, 1.0, tol_);
            else if (x < t.from_base(kLnLo).upper) wide.emplace(recip, 1.0 / kWide, 1.0, 1.0, tol_);
            const CumulativeTable& tab = wide ? *wide : t;
            auto g = [&](double y) { return tab.from_base(y); };
            double a = 1.0, b = 1.0;
            if (x >= 0) {
                b = 2.0;
                while (g(b).lower <= x) {
                    a = b;
                    b *= 2.0;
                }
            } else {
                a = 0.5;
                while (g(a).upper >= x) {
                    b = a;
                    a *= 0.5;
                }
            }
            return invert_increasing(g, a, b, x, rel);
        }
    }
    return {};
}

std::shared_ptr<const ElemFnHandle> elem_handle(ElemName name, double tol) {
    static std::mutex mu;
    static std::map<std::pair<int, double>, std::shared_ptr<const ElemFnHandle>> cache;
    check_tol(tol);
    {
        const std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({static_cast<int>(name), tol});
        if (it != cache.end()) return it->second;
    }
    auto h = std::make_shared<const ElemFnHandle>(name, tol);
    const std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::pair{static_cast<int>(name), tol}, std::move(h)).first->second;
}

Enclosure asin_cat(double y, double tol) {
    if (!(std::abs(y) <= 1.0)) throw Error(Errc::OutOfDomain, "asin needs |y| <= 1");
    return (*elem_handle(ElemName::As, tol))(y);
}

Enclosure acos_cat(double y, double tol) {
    if (!(std::abs(y) <= 1.0)) throw Error(Errc::OutOfDomain, "acos needs |y| <= 1");
    return (*elem_handle(ElemName::Ac, tol))(y);
}

Enclosure K_constant(double tol) {
    check_tol(tol);
    const CumulativeTable body(arc_integrand, 0.0, kEdge, 0.0, tol);
    return body.from_base(kEdge) + arc_tail(1.0);
}

Enclosure sin_cat(double x, double tol) { return (*elem_handle(ElemName::S, tol))(x); }
Enclosure cos_cat(double x, double tol) { return (*elem_handle(ElemName::C, tol))(x); }

Enclosure ln_cat(double y, double tol) {
    if (!(y > 0.0) || !std::isfinite(y)) throw Error(Errc::OutOfDomain, "ln needs a finite y > 0");
    return (*elem_handle(ElemName::Ln, tol))(y);
}

Enclosure exp_cat(double x, double tol) { return (*elem_handle(ElemName::Exp, tol))(x); }

}  // namespace catint
