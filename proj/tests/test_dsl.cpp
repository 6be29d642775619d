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

#include <doctest.h>

#include <string>

#include "catint/dsl.hpp"
#include "catint/error.hpp"
#include "catint/quiver.hpp"
#include "support.hpp"

using namespace catint;
using catint::testing::make_rng;
using catint::testing::uniform_int;

namespace {

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::OutOfDomain;
}

}  // namespace

TEST_SUITE("dsl") {

TEST_CASE("parse the A3 example") {
    const QuiverDoc d =
        parse_quiver_dsl("quiver A { vertices: 1 2 3  arrows: a: 1 -> 2, b: 2 -> 3  relations: a*b }");
    CHECK(d.name == "A");
    CHECK(d.vertices.size() == 3);
    CHECK(d.arrows.size() == 2);
    REQUIRE(d.relations.size() == 1);
    CHECK(d.relations[0] == Relation{"a", "b"});
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_quiver_dsl("quiver E { vertices: 1 arrows: }");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.code() == Errc::SyntaxError);
        CHECK(e.line() == 1);
        CHECK(e.column() == 32);
    }
    try {
        parse_quiver_dsl("quiver Q {\n  vertices: 1 2\n  arrows: a 1 -> 2\n}");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 13);
    }
    CHECK(code_of([] { parse_quiver_dsl("quiver Q { vertices: }"); }) == Errc::SyntaxError);
    CHECK(code_of([] { parse_quiver_dsl("quiver Q { vertices: 1 } extra"); }) == Errc::SyntaxError);
    CHECK(code_of([] { parse_quiver_dsl("quiver Q { vertices: 1 $ }"); }) == Errc::SyntaxError);
    CHECK(code_of([] { parse_quiver_dsl("quiver Q { relations: a*b vertices: 1 }"); }) == Errc::SyntaxError);
}

TEST_CASE("reference errors") {
    CHECK(code_of([] { parse_quiver_dsl("quiver Q { vertices: 1 2 arrows: a: 1 -> 3 }"); }) == Errc::UnknownVertex);
    CHECK(code_of([] { parse_quiver_dsl("quiver Q { vertices: 1 1 }"); }) == Errc::DuplicateVertex);
    CHECK(code_of([] { parse_quiver_dsl("quiver Q { vertices: 1 2 arrows: a: 1 -> 2, a: 2 -> 1 }"); }) ==
          Errc::DuplicateArrow);
    CHECK(code_of([] {
              parse_quiver_dsl("quiver Q { vertices: 1 2 3 4 arrows: a: 1 -> 2, b: 2 -> 3, c: 3 -> 4 relations: a*b*c }");
          }) == Errc::NonQuadraticRelation);
    CHECK(code_of([] { parse_quiver_dsl("quiver Q { vertices: 1 2 arrows: a: 1 -> 2 relations: a }"); }) ==
          Errc::NonQuadraticRelation);
    CHECK(code_of([] { parse_quiver_dsl("quiver Q { vertices: 1 2 arrows: a: 1 -> 2 relations: a*z }"); }) ==
          Errc::UnknownArrow);
    CHECK(code_of([] { parse_quiver_dsl("quiver Q { vertices: 1 2 arrows: a: 1 -> 2 relations: a*a }"); }) ==
          Errc::NonComposableRelation);
}

TEST_CASE("comments and whitespace") {
    const QuiverDoc a = parse_quiver_dsl("# header\nquiver Q{vertices:1 2 # two\narrows:a:1->2}\n");
    const QuiverDoc b = parse_quiver_dsl("quiver Q { vertices: 1 2 arrows: a: 1 -> 2 }");
    CHECK(a == b);
}

TEST_CASE("emit is canonical and omits empty clauses") {
    const QuiverDoc d = parse_quiver_dsl(
        "quiver A { vertices: 10 2 1 arrows: b: 2 -> 10, a: 1 -> 2 relations: a*b, a*b }");
    const std::string text = emit_dsl(d);
    CHECK(text ==
          "quiver A {\n  vertices: 1 2 10\n  arrows:\n    a: 1 -> 2,\n    b: 2 -> 10\n  relations: a*b\n}\n");
    CHECK(parse_quiver_dsl(text) == canonical(d));
    CHECK(emit_dsl(parse_quiver_dsl(text)) == text);
    const std::string bare = emit_dsl(parse_quiver_dsl("quiver P { vertices: 1 }"));
    CHECK(bare == "quiver P {\n  vertices: 1\n}\n");
    CHECK(bare.find("relations") == std::string::npos);
}

TEST_CASE("natural order") {
    CHECK(natural_less("2", "10"));
    CHECK_FALSE(natural_less("10", "2"));
    CHECK(natural_less("a2", "a10"));
    CHECK(natural_less("a", "b"));
    CHECK(natural_less("x", "x1"));
    CHECK_FALSE(natural_less("x1", "x1"));
    CHECK(natural_less("01", "1") != natural_less("1", "01"));
}

TEST_CASE("round trip on the corpus") {
    for (const auto& file : catint::testing::corpus_files()) {
        CAPTURE(file.string());
        const QuiverDoc d = parse_quiver_dsl(catint::testing::read_file(file));
        const std::string text = emit_dsl(d);
        CHECK(parse_quiver_dsl(text) == canonical(d));
        CHECK(emit_dsl(parse_quiver_dsl(text)) == text);
        CHECK(to_doc(to_presentation(d)) == canonical(d));
    }
}

TEST_CASE("koszul dual survives emit and parse") {
    for (const auto& file : catint::testing::corpus_files()) {
        CAPTURE(file.string());
        const GentlePresentation raw = to_presentation(parse_quiver_dsl(catint::testing::read_file(file)));
        const GentlePresentation p = require_gentle(raw.quiver(), raw.relations());
        const GentlePresentation dual = koszul_dual(p);
        const QuiverDoc back = parse_quiver_dsl(emit_dsl(to_doc(dual)));
        const GentlePresentation again = to_presentation(back);
        CHECK(validate_gentle(again.quiver(), again.relations()).ok);
        CHECK(again.relations() == dual.relations());
    }
}

TEST_CASE("random documents round trip") {
    auto rng = make_rng(60);
    for (int trial = 0; trial < 200; ++trial) {
        QuiverDoc d;
        d.name = "R" + std::to_string(trial);
        const int nv = uniform_int(rng, 1, 12);
        for (int i = nv; i >= 1; --i) d.vertices.push_back("v" + std::to_string(i));
        const int na = uniform_int(rng, 0, 10);
        for (int i = na; i >= 1; --i)
            d.arrows.push_back({"x" + std::to_string(i), d.vertices[uniform_int(rng, 0, nv - 1)],
                                d.vertices[uniform_int(rng, 0, nv - 1)]});
        for (const auto& a : d.arrows)
            for (const auto& b : d.arrows)
                if (a.target == b.source && uniform_int(rng, 0, 3) == 0) d.relations.push_back({a.name, b.name});
        const std::string text = emit_dsl(d);
        CHECK(parse_quiver_dsl(text) == canonical(d));
    }
}

}
