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

#ifndef CATINT_SRC_GRID_HPP
#define CATINT_SRC_GRID_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "catint/measure.hpp"

namespace catint::detail {

/// Piecewise-constant field on a rectilinear grid. Cells are stored row-major
/// with the last coordinate varying fastest.
struct GridField {
    std::vector<std::vector<double>> lines;  // sorted breakpoints per coordinate
    std::vector<double> values;

    std::size_t dim() const { return lines.size(); }
    std::size_t cells(std::size_t k) const { return lines[k].empty() ? 0 : lines[k].size() - 1; }
};

enum class Fill { Add, Cover };

/// Grid on the union of all box endpoints (plus any extra breakpoints).
/// Add sums coefficients of overlapping pieces; Cover sets covered cells to 1.
GridField rasterize(std::size_t dim, std::span<const std::pair<Box, double>> pieces, Fill mode,
                    const std::vector<std::vector<double>>& extra_lines = {});

/// Removes every grid line across which the field does not change. Afterwards
/// the grid depends only on the field, not on how it was assembled.
void simplify(GridField& field);

/// Nonzero cells merged into boxes; sorted by box.
std::vector<std::pair<Box, double>> to_boxes(const GridField& field);

}  // namespace catint::detail

#endif  // CATINT_SRC_GRID_HPP
