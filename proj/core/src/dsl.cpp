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

#include "catint/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace catint {

const char* const kQuiverGrammar =
    "quiver    := \"quiver\" IDENT \"{\" \"vertices:\" IDENT+ [arrows] [relations] \"}\"\n"
    "arrows    := \"arrows:\" arrow (\",\" arrow)*\n"
    "relations := \"relations:\" rel (\",\" rel)*\n"
    "arrow     := IDENT \":\" IDENT \"->\" IDENT\n"
    "rel       := IDENT \"*\" IDENT\n"
    "IDENT     := [A-Za-z0-9_.!']+\n"
    "Empty clauses are omitted; '#' starts a comment.\n";

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& expected, const std::string& found)
    : Error(Errc::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " +
                                   expected + ", found " + found),
      line_(line),
      column_(column) {}

namespace {

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '!' || c == '\'';
}

enum class Tok { Ident, LBrace, RBrace, Colon, Comma, Star, Arrow, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line, column;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::Ident: return "'" + t.text + "'";
        case Tok::End: return "end of input";
        default: return "'" + t.text + "'";
    }
}

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') advance(1);
            continue;
        }
        const std::size_t l = line, cc = col;
        if (ident_char(c)) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, cc});
            advance(j - i);
            continue;
        }
        if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            out.push_back({Tok::Arrow, "->", l, cc});
            advance(2);
            continue;
        }
        Tok k;
        switch (c) {
            case '{': k = Tok::LBrace; break;
            case '}': k = Tok::RBrace; break;
            case ':': k = Tok::Colon; break;
            case ',': k = Tok::Comma; break;
            case '*': k = Tok::Star; break;
            default: throw SyntaxError(l, cc, "a token", "'" + std::string(1, c) + "'");
        }
        out.push_back({k, std::string(1, c), l, cc});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    QuiverDoc parse() {
        QuiverDoc d;
        keyword("quiver");
        d.name = ident("quiver name");
        expect(Tok::LBrace, "'{'");
        section("vertices");
        d.vertices.push_back(ident("vertex name"));
        while (peek().kind == Tok::Ident && !at_section()) d.vertices.push_back(ident("vertex name"));
        if (at_section("arrows")) {
            section("arrows");
            do d.arrows.push_back(arrow());
            while (accept(Tok::Comma));
        }
        if (at_section("relations")) {
            section("relations");
            do d.relations.push_back(relation());
            while (accept(Tok::Comma));
        }
        expect(Tok::RBrace, at_section() ? "a clause in the order vertices, arrows, relations" : "'}'");
        expect(Tok::End, "end of input");
        return d;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        throw SyntaxError(t.line, t.column, expected, describe(t));
    }

    Token expect(Tok k, const std::string& what) {
        if (peek().kind != k) fail(what);
        return toks_[pos_++];
    }

    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    std::string ident(const std::string& what) { return expect(Tok::Ident, what).text; }

    void keyword(const std::string& kw) {
        if (peek().kind != Tok::Ident || peek().text != kw) fail("'" + kw + "'");
        ++pos_;
    }

    bool at_section(std::string_view name = {}) const {
        const bool kw = peek().kind == Tok::Ident && peek(1).kind == Tok::Colon &&
                        (peek().text == "arrows" || peek().text == "relations" || peek().text == "vertices");
        return kw && (name.empty() || peek().text == name);
    }

    void section(const std::string& name) {
        keyword(name);
        expect(Tok::Colon, "':'");
    }

    Arrow arrow() {
        Arrow a;
        a.name = ident("arrow name");
        expect(Tok::Colon, "':'");
        a.source = ident("source vertex");
        expect(Tok::Arrow, "'->'");
        a.target = ident("target vertex");
        return a;
    }

    Relation relation() {
        const std::size_t line = peek().line, column = peek().column;
        std::vector<std::string> arrows{ident("arrow name")};
        while (accept(Tok::Star)) arrows.push_back(ident("arrow name"));
        if (arrows.size() != 2) {
            std::string path;
            for (std::size_t i = 0; i < arrows.size(); ++i) path += (i ? "*" : "") + arrows[i];
            throw Error(Errc::NonQuadraticRelation, "line " + std::to_string(line) + ", column " +
                                                        std::to_string(column) + ": relation " + path +
                                                        " has length " + std::to_string(arrows.size()) +
                                                        ", relations must have length 2");
        }
        return {arrows[0], arrows[1]};
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    while (i < a.size() && j < b.size()) {
        if (digit(a[i]) && digit(b[j])) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && digit(a[i2])) ++i2;
            while (j2 < b.size() && digit(b[j2])) ++j2;
            std::string_view x = a.substr(i, i2 - i), y = b.substr(j, j2 - j);
            // Compare by value, ignoring leading zeros; ties by length keep the order total.
            auto strip = [](std::string_view s) {
                while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
                return s;
            };
            const auto xs = strip(x), ys = strip(y);
            if (xs.size() != ys.size()) return xs.size() < ys.size();
            if (xs != ys) return xs < ys;
            if (x.size() != y.size()) return x.size() < y.size();
            i = i2;
            j = j2;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
    }
    return a.size() - i < b.size() - j;
}

QuiverDoc parse_quiver_dsl(std::string_view text) {
    Parser parser(lex(text));
    QuiverDoc d = parser.parse();
    // Resolve references through the quiver and presentation constructors.
    to_presentation(d);
    return d;
}

QuiverDoc canonical(QuiverDoc d) {
    std::sort(d.vertices.begin(), d.vertices.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
    std::sort(d.arrows.begin(), d.arrows.end(),
              [](const Arrow& a, const Arrow& b) { return natural_less(a.name, b.name); });
    auto rel_less = [](const Relation& a, const Relation& b) {
        if (a.first != b.first) return natural_less(a.first, b.first);
        return natural_less(a.second, b.second);
    };
    std::sort(d.relations.begin(), d.relations.end(), rel_less);
    d.relations.erase(std::unique(d.relations.begin(), d.relations.end()), d.relations.end());
    return d;
}

std::string emit_dsl(const QuiverDoc& doc) {
    const QuiverDoc d = canonical(doc);
    std::string out = "quiver " + d.name + " {\n  vertices:";
    for (const auto& v : d.vertices) out += " " + v;
    out += "\n";
    if (!d.arrows.empty()) {
        out += "  arrows:";
        for (std::size_t i = 0; i < d.arrows.size(); ++i)
            out += (i ? ",\n    " : "\n    ") + d.arrows[i].name + ": " + d.arrows[i].source + " -> " + d.arrows[i].target;
        out += "\n";
    }
    if (!d.relations.empty()) {
        out += "  relations:";
        for (std::size_t i = 0; i < d.relations.size(); ++i)
            out += std::string(i ? ", " : " ") + d.relations[i].first + "*" + d.relations[i].second;
        out += "\n";
    }
    out += "}\n";
    return out;
}

QuiverDoc to_doc(const GentlePresentation& p) {
    QuiverDoc d{p.quiver().name(), p.quiver().vertices(), p.quiver().arrows(),
                std::vector<Relation>(p.relations().begin(), p.relations().end())};
    return canonical(std::move(d));
}

GentlePresentation to_presentation(const QuiverDoc& doc) {
    return GentlePresentation(Quiver(doc.name, doc.vertices, doc.arrows),
                              RelationSet(doc.relations.begin(), doc.relations.end()));
}

}  // namespace catint
