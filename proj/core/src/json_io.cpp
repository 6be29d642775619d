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

#include "catint/json_io.hpp"

#include "catint/error.hpp"

namespace catint {

using nlohmann::json;

void to_json(json& j, const Interval& iv) { j = json::array({iv.lo, iv.hi}); }

void from_json(const json& j, Interval& iv) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(Errc::OutOfDomain, "interval must be [lo, hi]");
    iv = make_interval(j[0].get<double>(), j[1].get<double>());
}

void to_json(json& j, const Box& b) {
    j = json::array();
    for (const auto& f : b.factors()) j.push_back(f);
}

void from_json(const json& j, Box& b) {
    if (!j.is_array()) throw Error(Errc::OutOfDomain, "box must be an array of intervals");
    std::vector<Interval> fs;
    for (const auto& x : j) fs.push_back(x.get<Interval>());
    b = Box(std::move(fs));
}

void to_json(json& j, const MeasurableSet& s) {
    j = json::array();
    for (const auto& b : s.boxes()) j.push_back(b);
}

void to_json(json& j, const StepFunction& f) {
    json pieces = json::array();
    for (const auto& p : f.pieces()) pieces.push_back({{"box", p.box}, {"coeff", p.coeff}});
    j = {{"ambient", f.ambient()}, {"pieces", pieces}};
}

void from_json(const json& j, StepFunction& f) {
    if (!j.is_object() || !j.contains("ambient") || !j.contains("pieces"))
        throw Error(Errc::OutOfDomain, "step function needs ambient and pieces");
    std::vector<Piece> pieces;
    for (const auto& p : j.at("pieces")) pieces.push_back({p.at("box").get<Box>(), p.at("coeff").get<double>()});
    f = StepFunction(j.at("ambient").get<Box>(), pieces);
}

void to_json(json& j, const Enclosure& e) {
    j = {{"lower", e.lower}, {"upper", e.upper}, {"width", e.width()}};
}

void to_json(json& j, const SigmaPair& p) { j = {{"set", p.set}, {"value", p.value}}; }

void to_json(json& j, const IPosetElement& e) {
    j = {{"interval", e.interval}, {"value", e.value}, {"alpha", e.alpha ? json(*e.alpha) : json(nullptr)}};
}

void to_json(json& j, const QuiverDoc& d) {
    json arrows = json::array(), rels = json::array();
    for (const auto& a : d.arrows) arrows.push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
    for (const auto& [a, b] : d.relations) rels.push_back(json::array({a, b}));
    j = {{"name", d.name}, {"vertices", d.vertices}, {"arrows", arrows}, {"relations", rels}};
}

void to_json(json& j, const Thread& t) {
    j = {{"kind", std::string(thread_kind_name(t.kind))}, {"arrows", t.arrows}, {"length", t.length()}};
}

}  // namespace catint
