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

#include "grid.hpp"

#include <algorithm>
#include <numeric>

namespace catint::detail {
namespace {

std::vector<std::size_t> strides_of(const GridField& f) {
    std::vector<std::size_t> strides(f.dim(), 1);
    for (std::size_t k = f.dim(); k-- > 1;) strides[k - 1] = strides[k] * f.cells(k);
    return strides;
}

std::size_t total_cells(const GridField& f) {
    std::size_t n = 1;
    for (std::size_t k = 0; k < f.dim(); ++k) n *= f.cells(k);
    return f.dim() == 0 ? 0 : n;
}

std::size_t line_index(const std::vector<double>& lines, double x) {
    return static_cast<std::size_t>(std::lower_bound(lines.begin(), lines.end(), x) - lines.begin());
}

// Visits every cell of the index box [lo, hi) in row-major order.
template <typename Fn>
void for_each_cell(const std::vector<std::size_t>& lo, const std::vector<std::size_t>& hi,
                   const std::vector<std::size_t>& strides, Fn&& fn) {
    const std::size_t n = lo.size();
    for (std::size_t k = 0; k < n; ++k)
        if (lo[k] >= hi[k]) return;
    std::vector<std::size_t> idx = lo;
    while (true) {
        std::size_t flat = 0;
        for (std::size_t k = 0; k < n; ++k) flat += idx[k] * strides[k];
        fn(flat);
        std::size_t k = n;
        while (k-- > 0) {
            if (++idx[k] < hi[k]) break;
            idx[k] = lo[k];
            if (k == 0) return;
        }
    }
}

// Removes line j (1 <= j < lines.size() - 1) of coordinate k if slabs j-1
// and j carry identical values. Returns whether it did.
bool try_remove_line(GridField& f, std::size_t k, std::size_t j) {
    const auto strides = strides_of(f);
    const std::size_t outer = strides[k] * f.cells(k);
    const std::size_t total = total_cells(f);
    const std::size_t inner = strides[k];
    for (std::size_t base = 0; base < total; base += outer)
        for (std::size_t r = 0; r < inner; ++r)
            if (f.values[base + (j - 1) * inner + r] != f.values[base + j * inner + r]) return false;

    std::vector<double> next;
    next.reserve(total - total / f.cells(k));
    for (std::size_t base = 0; base < total; base += outer)
        for (std::size_t s = 0; s < f.cells(k); ++s) {
            if (s == j) continue;
            for (std::size_t r = 0; r < inner; ++r) next.push_back(f.values[base + s * inner + r]);
        }
    f.values = std::move(next);
    f.lines[k].erase(f.lines[k].begin() + static_cast<std::ptrdiff_t>(j));
    return true;
}

struct IndexBox {
    std::vector<std::size_t> lo, hi;
    double value;
};

}  // namespace

GridField rasterize(std::size_t dim, std::span<const std::pair<Box, double>> pieces, Fill mode,
                    const std::vector<std::vector<double>>& extra_lines) {
    GridField f;
    f.lines.resize(dim);
    for (const auto& [box, coeff] : pieces) {
        if (box.measure() == 0.0) continue;
        for (std::size_t k = 0; k < dim; ++k) {
            f.lines[k].push_back(box[k].lo);
            f.lines[k].push_back(box[k].hi);
        }
    }
    for (std::size_t k = 0; k < extra_lines.size() && k < dim; ++k)
        f.lines[k].insert(f.lines[k].end(), extra_lines[k].begin(), extra_lines[k].end());
    for (auto& l : f.lines) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    for (auto& l : f.lines)
        if (l.size() < 2) {
            for (auto& m : f.lines) m.clear();
            return f;
        }

    f.values.assign(total_cells(f), 0.0);
    const auto strides = strides_of(f);
    std::vector<std::size_t> lo(dim), hi(dim);
    for (const auto& [box, coeff] : pieces) {
        if (box.measure() == 0.0) continue;
        for (std::size_t k = 0; k < dim; ++k) {
            lo[k] = line_index(f.lines[k], box[k].lo);
            hi[k] = line_index(f.lines[k], box[k].hi);
        }
        for_each_cell(lo, hi, strides, [&](std::size_t c) {
            if (mode == Fill::Add)
                f.values[c] += coeff;
            else
                f.values[c] = 1.0;
        });
    }
    return f;
}

void simplify(GridField& f) {
    if (f.values.empty()) return;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < f.dim(); ++k)
            for (std::size_t j = 1; j + 1 < f.lines[k].size();)
                if (try_remove_line(f, k, j))
                    changed = true;
                else
                    ++j;
    }
}

std::vector<std::pair<Box, double>> to_boxes(const GridField& f) {
    std::vector<std::pair<Box, double>> out;
    if (f.values.empty()) return out;
    const std::size_t n = f.dim();
    const auto strides = strides_of(f);

    std::vector<IndexBox> boxes;
    for (std::size_t c = 0; c < f.values.size(); ++c) {
        if (f.values[c] == 0.0) continue;
        IndexBox b{std::vector<std::size_t>(n), std::vector<std::size_t>(n), f.values[c]};
        std::size_t rem = c;
        for (std::size_t k = 0; k < n; ++k) {
            b.lo[k] = rem / strides[k];
            rem %= strides[k];
            b.hi[k] = b.lo[k] + 1;
        }
        boxes.push_back(std::move(b));
    }

    for (std::size_t k = n; k-- > 0;) {
        auto key_less = [k, n](const IndexBox& a, const IndexBox& b) {
            if (a.value != b.value) return a.value < b.value;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == k) continue;
                if (a.lo[i] != b.lo[i]) return a.lo[i] < b.lo[i];
                if (a.hi[i] != b.hi[i]) return a.hi[i] < b.hi[i];
            }
            return a.lo[k] < b.lo[k];
        };
        std::sort(boxes.begin(), boxes.end(), key_less);
        std::vector<IndexBox> merged;
        for (auto& b : boxes) {
            if (!merged.empty()) {
                auto& m = merged.back();
                bool same = m.value == b.value && m.hi[k] == b.lo[k];
                for (std::size_t i = 0; same && i < n; ++i)
                    if (i != k && (m.lo[i] != b.lo[i] || m.hi[i] != b.hi[i])) same = false;
                if (same) {
                    m.hi[k] = b.hi[k];
                    continue;
                }
            }
            merged.push_back(std::move(b));
        }
        boxes = std::move(merged);
    }

    out.reserve(boxes.size());
    for (const auto& b : boxes) {
        std::vector<Interval> factors(n);
        for (std::size_t k = 0; k < n; ++k) factors[k] = {f.lines[k][b.lo[k]], f.lines[k][b.hi[k]]};
        out.emplace_back(Box(std::move(factors)), b.value);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace catint::detail
