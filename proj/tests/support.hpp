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

#ifndef CATINT_TESTS_SUPPORT_HPP
#define CATINT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catint/measure.hpp"
#include "catint/step_function.hpp"

namespace catint::testing {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t salt) { return Rng(0x5eedcafe1234ULL ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// k / 2^bits with k uniform in [0, 2^bits], mapped onto [lo, hi].
inline double dyadic_point(Rng& rng, const Interval& iv, int bits) {
    const int n = 1 << bits;
    const int k = uniform_int(rng, 0, n);
    return iv.lo + iv.length() * static_cast<double>(k) / static_cast<double>(n);
}

/// Sub-interval with dyadic endpoints.
inline Interval dyadic_interval(Rng& rng, const Interval& iv, int bits) {
    double a = dyadic_point(rng, iv, bits), b = dyadic_point(rng, iv, bits);
    if (a > b) std::swap(a, b);
    return {a, b};
}

/// Dyadic coefficient in [-8, 8] with step 1/4, zero allowed.
inline double dyadic_coeff(Rng& rng) { return static_cast<double>(uniform_int(rng, -32, 32)) / 4.0; }

/// Random one-dimensional step function with up to max_pieces possibly
/// overlapping pieces on dyadic endpoints.
inline StepFunction random_step(Rng& rng, const Interval& ambient, int max_pieces = 6, int bits = 6,
                                bool dyadic_coeffs = true) {
    std::vector<Piece> pieces;
    const int n = uniform_int(rng, 0, max_pieces);
    for (int i = 0; i < n; ++i) {
        const Interval iv = dyadic_interval(rng, ambient, bits);
        const double k = dyadic_coeffs ? dyadic_coeff(rng) : uniform(rng, -5.0, 5.0);
        pieces.push_back({Box{iv}, k});
    }
    return StepFunction(Box{ambient}, pieces);
}

/// Random two-dimensional step function on [0,1]^2.
inline StepFunction random_step_2d(Rng& rng, int max_pieces = 4, int bits = 4) {
    const Interval unit{0.0, 1.0};
    std::vector<Piece> pieces;
    const int n = uniform_int(rng, 0, max_pieces);
    for (int i = 0; i < n; ++i)
        pieces.push_back({Box{dyadic_interval(rng, unit, bits), dyadic_interval(rng, unit, bits)}, dyadic_coeff(rng)});
    return StepFunction(Box{unit, unit}, pieces);
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::filesystem::path> corpus_files() {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(CATINT_CORPUS_DIR))
        if (e.path().extension() == ".qv") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace catint::testing

#endif  // CATINT_TESTS_SUPPORT_HPP
