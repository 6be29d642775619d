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

#ifndef CATINT_QUIVER_HPP
#define CATINT_QUIVER_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catint {

struct Arrow {
    std::string name;
    std::string source;
    std::string target;

    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Finite quiver. Arrow names and vertex names are unique; arrow endpoints
/// are declared vertices.
class Quiver {
public:
    Quiver() = default;
    /// Throws DuplicateVertex, DuplicateArrow, UnknownVertex.
    Quiver(std::string name, std::vector<std::string> vertices, std::vector<Arrow> arrows);

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

    bool has_vertex(std::string_view v) const;
    bool has_arrow(std::string_view a) const;
    /// Throws UnknownArrow.
    const Arrow& arrow(std::string_view a) const;
    std::vector<const Arrow*> outgoing(std::string_view v) const;
    std::vector<const Arrow*> incoming(std::string_view v) const;

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.name_ == b.name_ && a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
    }

private:
    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, std::size_t, std::less<>> arrow_index_;
    std::set<std::string, std::less<>> vertex_set_;
};

/// (a, b) stands for the length-two path a*b: first a, then b.
using Relation = std::pair<std::string, std::string>;
using RelationSet = std::set<Relation>;

/// A path of the quiver. Trivial paths have no arrows and sit at start.
struct Path {
    std::string start;
    std::vector<std::string> arrows;

    std::size_t length() const noexcept { return arrows.size(); }
    bool trivial() const noexcept { return arrows.empty(); }
    /// "e_v" for trivial paths, otherwise the arrow names joined by '*'.
    std::string str() const;

    friend auto operator<=>(const Path&, const Path&) = default;
};

struct GentleValidation;

/// Quiver plus length-two monomial relations. validated() is set only by
/// validate_gentle.
class GentlePresentation {
public:
    GentlePresentation() = default;
    /// Throws UnknownArrow or NonComposableRelation.
    GentlePresentation(Quiver quiver, RelationSet relations);

    const Quiver& quiver() const noexcept { return quiver_; }
    const RelationSet& relations() const noexcept { return relations_; }
    bool validated() const noexcept { return validated_; }

    bool composable(std::string_view a, std::string_view b) const;
    bool in_ideal(std::string_view a, std::string_view b) const;
    /// Consecutive arrows compose and the start vertex matches.
    bool is_path(const Path& p) const;
    /// Throws PathNotInPresentation.
    Path make_path(const std::vector<std::string>& arrows) const;

    friend bool operator==(const GentlePresentation& a, const GentlePresentation& b) {
        return a.quiver_ == b.quiver_ && a.relations_ == b.relations_;
    }

private:
    friend GentleValidation validate_gentle(Quiver quiver, RelationSet relations, bool strict);
    friend GentlePresentation koszul_dual(const GentlePresentation& p);

    Quiver quiver_;
    RelationSet relations_;
    bool validated_ = false;
};

struct Violation {
    /// Gentle condition number, 1 to 4.
    int condition = 0;
    std::string witness;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct GentleReport {
    /// Conditions as literally stated: with two arrows meeting a third, exactly
    /// one of the two compositions is a relation.
    std::vector<Violation> literal;
    /// Usual formulation: for each arrow at most one composable partner on each
    /// side inside the ideal and at most one outside it.
    std::vector<Violation> standard;
};

GentleReport check_gentle_conditions(const GentlePresentation& p);

struct GentleValidation {
    GentlePresentation presentation;
    GentleReport report;
    bool ok = false;
};

/// Checks the gentle conditions (the literal ones, plus the standard ones when
/// strict) and finite dimensionality. Throws InfiniteDimensional when a path
/// avoiding the ideal can cycle, and the construction errors of
/// GentlePresentation.
GentleValidation validate_gentle(Quiver quiver, RelationSet relations, bool strict = false);

/// validate_gentle, throwing NotValidated with the violations when not ok.
GentlePresentation require_gentle(Quiver quiver, RelationSet relations, bool strict = false);

enum class ThreadKind { Permitted, Forbidden };

std::string_view thread_kind_name(ThreadKind k) noexcept;

struct Thread {
    std::vector<std::string> arrows;
    ThreadKind kind = ThreadKind::Permitted;

    std::size_t length() const noexcept { return arrows.size(); }
    std::string str() const;

    friend auto operator<=>(const Thread&, const Thread&) = default;
};

/// Maximal chains whose consecutive pairs all lie in the ideal (Forbidden) or
/// all compose outside it (Permitted), sorted by arrow names. Throws
/// NotValidated, InfiniteGlobalDimension for a cycle of relations, and
/// InfiniteDimensional for a cycle of non-relations.
std::vector<Thread> enumerate_threads(const GentlePresentation& p, ThreadKind kind);

/// Same vertices and arrow names, every arrow reversed; (x, y) is a dual
/// relation iff y*x composes in the original quiver and is not a relation.
/// The quiver name gains a trailing '!' (or loses one). The result is marked
/// validated when it is again a finite-dimensional gentle presentation.
GentlePresentation koszul_dual(const GentlePresentation& p);

/// Linear combination of paths. Paths passing through a relation are zero and
/// never stored, nor are zero coefficients.
class AlgebraElement {
public:
    AlgebraElement() = default;

    /// Throws PathNotInPresentation.
    void add(const GentlePresentation& p, const Path& path, double coeff);

    const std::map<Path, double>& terms() const noexcept { return terms_; }
    double coeff(const Path& path) const;

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(double k, const AlgebraElement& a);
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    std::map<Path, double> terms_;
};

/// Sum of the coefficients of the trivial paths.
double vertex_hom(const AlgebraElement& x);

/// Sum of k_{e_s(a_i)} over the arrows a_i of q, repeats counted. Throws
/// PathNotInPresentation.
double vertex_hom_q(const GentlePresentation& p, const AlgebraElement& x, const Path& q);

/// u_v = number of arrows of q starting at v.
std::map<std::string, unsigned> source_weights(const GentlePresentation& p, const Path& q);

/// 2 * multiple_integral_affine_unit_box(source weights of q, 1), checked to be
/// an integer. Throws PathNotInPresentation, EmptyWeights for trivial q, and
/// NonIntegerResult.
unsigned path_length_via_integral(const GentlePresentation& p, const Path& q);

/// Coefficient of the permitted thread P in x. Throws NotPermitted.
double w_projection(const GentlePresentation& dual, const Thread& permitted, const AlgebraElement& x);

/// a_1...a_l in forb(A) paired with a_l...a_1 in perm(A!). Throws
/// BijectionFailure when the pairing is not a length-preserving bijection.
std::vector<std::pair<Thread, Thread>> forb_perm_bijection(const GentlePresentation& p);

enum class GlDimMethod { Threads, Integral, Stieltjes };

std::string_view gldim_method_name(GlDimMethod m) noexcept;
/// threads / integral / stieltjes. Throws OutOfDomain.
GlDimMethod parse_gldim_method(std::string_view s);

/// Throws NotValidated, InfiniteGlobalDimension, NonIntegerResult.
unsigned global_dimension(const GentlePresentation& p, GlDimMethod method);

struct GlDimReport {
    unsigned value = 0;
    std::map<GlDimMethod, unsigned> by_method;
    /// Forbidden threads of maximal length.
    std::vector<Thread> witnesses;
};

/// Runs all three methods. Throws MethodDisagreement if they differ.
GlDimReport global_dimension_all(const GentlePresentation& p);

/// Every nontrivial path of the quiver with at most max_length arrows,
/// relations ignored, in lexicographic order.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_length);

}  // namespace catint

#endif  // CATINT_QUIVER_HPP
