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

#ifndef CATINT_DSL_HPP
#define CATINT_DSL_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "catint/error.hpp"
#include "catint/quiver.hpp"

namespace catint {

/// Grammar of .qv files (whitespace-insensitive, '#' starts a line comment):
///
///   quiver    := "quiver" IDENT "{" "vertices:" IDENT+ [arrows] [relations] "}"
///   arrows    := "arrows:" arrow ("," arrow)*
///   relations := "relations:" rel ("," rel)*
///   arrow     := IDENT ":" IDENT "->" IDENT
///   rel       := IDENT "*" IDENT
///   IDENT     := [A-Za-z0-9_.!']+
///
/// A clause with nothing in it is left out rather than written empty.
extern const char* const kQuiverGrammar;

/// Error with a source position; code() is SyntaxError.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& expected, const std::string& found);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_, column_;
};

struct QuiverDoc {
    std::string name;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;

    friend bool operator==(const QuiverDoc&, const QuiverDoc&) = default;
};

/// Throws SyntaxError, DuplicateVertex, DuplicateArrow, UnknownVertex,
/// UnknownArrow, NonQuadraticRelation, NonComposableRelation.
QuiverDoc parse_quiver_dsl(std::string_view text);

/// Vertices and arrows in natural order (digit runs compare numerically),
/// relations sorted, duplicate relations dropped.
QuiverDoc canonical(QuiverDoc doc);

/// Canonical text; parse_quiver_dsl(emit_dsl(d)) == canonical(d).
std::string emit_dsl(const QuiverDoc& doc);

/// Natural order: "2" < "10", "a2" < "a10".
bool natural_less(std::string_view a, std::string_view b);

QuiverDoc to_doc(const GentlePresentation& p);
/// Unvalidated presentation of the document.
GentlePresentation to_presentation(const QuiverDoc& doc);

}  // namespace catint

#endif  // CATINT_DSL_HPP
