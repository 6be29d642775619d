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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "support.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = catint::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(CATINT_CORPUS_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gldim text and json") {
    const Outcome r = run({"gldim", corpus("a3_full.qv"), "--method", "all"});
    CHECK(r.code == 0);
    CHECK(r.out == "gl.dim = 2 (threads=2, integral=2, stieltjes=2)\n");

    const Outcome t = run({"gldim", corpus("a5_full.qv"), "--method", "stieltjes"});
    CHECK(t.out == "gl.dim = 4 (stieltjes=4)\n");

    const Outcome j = run({"gldim", corpus("a4_full.qv"), "--json"});
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    CHECK(doc.at("gldim") == 3);
    CHECK(doc.at("method_values").at("integral") == 3);
    CHECK(doc.at("threads").size() == 1);
    CHECK(doc.at("dual").at("name") == "A4!");
}

TEST_CASE("elemfn") {
    const Outcome r = run({"elemfn", "--name", "asin", "--at", "1", "--tol", "1e-3", "--json"});
    REQUIRE(r.code == 0);
    const json e = json::parse(r.out);
    CHECK(e.at("lower").get<double>() <= 1.5707963);
    CHECK(e.at("upper").get<double>() >= 1.5707963);
    const Outcome k = run({"elemfn", "--name", "K"});
    CHECK(k.code == 0);
    CHECK(k.out.rfind("K in [", 0) == 0);
    CHECK(run({"elemfn", "--name", "tan", "--at", "1"}).code == 1);
    CHECK(run({"elemfn", "--name", "asin", "--at", "2"}).code == 1);
}

TEST_CASE("koszul emits a dual with no relations") {
    const Outcome r = run({"koszul", corpus("a3_full.qv")});
    CHECK(r.code == 0);
    CHECK(r.out == "quiver A3! {\n  vertices: 1 2 3\n  arrows:\n    a: 2 -> 1,\n    b: 3 -> 2\n}\n");
}

TEST_CASE("validate and threads") {
    CHECK(run({"validate", corpus("branch.qv")}).code == 0);
    const Outcome t = run({"threads", corpus("a3_full.qv"), "--kind", "forbidden"});
    CHECK(t.out == "forbidden a*b (length 2)\n");
    const Outcome all = run({"threads", corpus("a3_free.qv"), "--json"});
    const json doc = json::parse(all.out);
    CHECK(doc.at("threads").size() == 3);
}

TEST_CASE("integrate and stieltjes") {
    const Outcome bad = run({"integrate", "--expr", "1/sqrt(1 - t^2)", "--domain", "0,1"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("DomainAnnotationMissing") != std::string::npos);

    const Outcome ok = run({"integrate", "--expr", "1/t", "--domain", "1,2", "--tol", "1e-8", "--json"});
    REQUIRE(ok.code == 0);
    const json e = json::parse(ok.out);
    CHECK(e.at("lower").get<double>() <= 0.6931471805599453);
    CHECK(e.at("upper").get<double>() >= 0.6931471805599453);
    CHECK(e.at("converged") == true);

    const Outcome step = run({"integrate", "--expr", "indicator(0,1)*2", "--domain", "0,2"});
    CHECK(step.out == "integral = 2 (exact)\n");

    const Outcome s = run({"stieltjes", "--expr", "t", "--phi", "log:3", "--domain", "1,2", "--tol", "1e-9", "--json"});
    REQUIRE(s.code == 0);
    CHECK(std::abs(json::parse(s.out).at("value").get<double>() - 3.0) <= 1e-9);
}

TEST_CASE("iposet-add") {
    const Outcome r = run({"iposet-add", "--f", "indicator(0,2)", "--ambient", "0,2", "--first", "0,1", "--second", "1,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "case OverlapLeft\nsum = ([0, 2], 2)\n");
    const Outcome j = run({"iposet-add", "--f", "indicator(0,1)", "--g", "indicator(2,3)", "--ambient", "0,3", "--first",
                           "0,1", "--second", "2,3", "--json"});
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    CHECK(doc.at("case") == "DisjointLeft");
    CHECK(doc.at("sum").at("value") == 2.0);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const Outcome missing = run({"gldim", "/nonexistent/file.qv"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("Quiver file grammar") != std::string::npos);
    CHECK(run({"gldim", corpus("a3_full.qv"), "--method", "ext"}).code == 2);
    CHECK(run({"integrate", "--expr", "t", "--domain", "0"}).code == 2);
    CHECK(run({"integrate", "--expr", "sin(t)", "--domain", "0,1"}).code == 1);
}

TEST_CASE("syntax error in a quiver file") {
    const std::string path = (std::filesystem::temp_directory_path() / "catint_cli_bad.qv").string();
    {
        std::ofstream f(path);
        f << "quiver E { vertices: 1 arrows: }\n";
    }
    const Outcome r = run({"validate", path});
    CHECK(r.code == 1);
    CHECK(r.err.find("SyntaxError") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("repeated runs are identical") {
    const std::vector<std::vector<std::string>> cmds = {
        {"gldim", corpus("cycle3.qv"), "--json"},
        {"threads", corpus("merge.qv")},
        {"koszul", corpus("two_cycle.qv"), "--json"},
        {"elemfn", "--name", "sin", "--at", "2.5", "--json"},
        {"stieltjes", "--expr", "t^2", "--phi", "t", "--domain", "0,1"},
    };
    for (const auto& c : cmds) {
        const Outcome a = run(c), b = run(c);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

}
