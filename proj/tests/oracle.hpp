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

#ifndef CATINT_TESTS_ORACLE_HPP
#define CATINT_TESTS_ORACLE_HPP

// Brute-force path scanner over a bare arrow list. Shares nothing with the
// thread code in the library.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace catint::oracle {

struct BareArrow {
    std::string name, source, target;
};

struct BarePresentation {
    std::vector<BareArrow> arrows;
    std::set<std::pair<std::string, std::string>> rels;

    const BareArrow* find(const std::string& a) const {
        for (const auto& x : arrows)
            if (x.name == a) return &x;
        return nullptr;
    }
    bool composes(const std::string& a, const std::string& b) const { return find(a)->target == find(b)->source; }
    bool related(const std::string& a, const std::string& b) const { return rels.count({a, b}) > 0; }
};

using Chain = std::vector<std::string>;

/// Every nontrivial path with at most max_len arrows, relations ignored.
inline std::vector<Chain> all_paths(const BarePresentation& p, std::size_t max_len) {
    std::vector<Chain> out, frontier;
    for (const auto& a : p.arrows) frontier.push_back({a.name});
    while (!frontier.empty()) {
        std::vector<Chain> next;
        for (const auto& c : frontier) {
            out.push_back(c);
            if (c.size() == max_len) continue;
            for (const auto& b : p.arrows)
                if (p.composes(c.back(), b.name)) {
                    Chain d = c;
                    d.push_back(b.name);
                    next.push_back(std::move(d));
                }
        }
        frontier = std::move(next);
    }
    return out;
}

/// Pairs inside the ideal (forbidden) or composing outside it (permitted).
inline bool pair_ok(const BarePresentation& p, bool forbidden, const std::string& a, const std::string& b) {
    if (!p.composes(a, b)) return false;
    return forbidden ? p.related(a, b) : !p.related(a, b);
}

inline bool chain_ok(const BarePresentation& p, bool forbidden, const Chain& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (!pair_ok(p, forbidden, c[i], c[i + 1])) return false;
    return true;
}

inline bool maximal(const BarePresentation& p, bool forbidden, const Chain& c) {
    for (const auto& x : p.arrows) {
        if (pair_ok(p, forbidden, x.name, c.front())) return false;
        if (pair_ok(p, forbidden, c.back(), x.name)) return false;
    }
    return true;
}

/// Maximal chains, sorted. Scans paths up to |Q1| + 1 arrows; a chain that
/// long means a cycle and is reported through the optional being empty.
inline std::optional<std::vector<Chain>> threads(const BarePresentation& p, bool forbidden) {
    std::vector<Chain> out;
    for (const auto& c : all_paths(p, p.arrows.size() + 1)) {
        if (!chain_ok(p, forbidden, c)) continue;
        if (c.size() > p.arrows.size()) return std::nullopt;
        if (maximal(p, forbidden, c)) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Longest path whose consecutive pairs all lie in the ideal; nullopt when
/// unbounded.
inline std::optional<std::size_t> gldim(const BarePresentation& p) {
    std::size_t best = 0;
    for (const auto& c : all_paths(p, p.arrows.size() + 1)) {
        if (!chain_ok(p, true, c)) continue;
        if (c.size() > p.arrows.size()) return std::nullopt;
        best = std::max(best, c.size());
    }
    return best;
}

}  // namespace catint::oracle

#endif  // CATINT_TESTS_ORACLE_HPP
