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

#include "catint/quiver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "catint/error.hpp"
#include "catint/integrator.hpp"
#include "catint/measure.hpp"

namespace catint {
namespace {

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

// Graph on arrows: edge a -> b iff a*b composes and in_ideal(a, b) == want.
struct ArrowGraph {
    std::vector<std::string> nodes;  // sorted arrow names
    std::vector<std::vector<std::size_t>> succ;
    std::vector<std::size_t> indeg;
};

ArrowGraph arrow_graph(const GentlePresentation& p, bool want_relation) {
    ArrowGraph g;
    for (const auto& a : p.quiver().arrows()) g.nodes.push_back(a.name);
    std::sort(g.nodes.begin(), g.nodes.end());
    g.succ.assign(g.nodes.size(), {});
    g.indeg.assign(g.nodes.size(), 0);
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = 0; j < g.nodes.size(); ++j)
            if (p.composable(g.nodes[i], g.nodes[j]) && p.in_ideal(g.nodes[i], g.nodes[j]) == want_relation) {
                g.succ[i].push_back(j);
                ++g.indeg[j];
            }
    return g;
}

std::optional<std::vector<std::string>> find_cycle(const ArrowGraph& g) {
    enum { White, Grey, Black };
    std::vector<int> colour(g.nodes.size(), White);
    std::vector<std::size_t> stack;
    std::optional<std::vector<std::string>> found;
    std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
        colour[u] = Grey;
        stack.push_back(u);
        for (std::size_t v : g.succ[u]) {
            if (colour[v] == Grey) {
                std::vector<std::string> cyc;
                auto it = std::find(stack.begin(), stack.end(), v);
                for (; it != stack.end(); ++it) cyc.push_back(g.nodes[*it]);
                found = cyc;
                return true;
            }
            if (colour[v] == White && dfs(v)) return true;
        }
        stack.pop_back();
        colour[u] = Black;
        return false;
    };
    for (std::size_t u = 0; u < g.nodes.size(); ++u)
        if (colour[u] == White && dfs(u)) break;
    return found;
}

// All source-to-sink chains of an acyclic graph.
std::vector<std::vector<std::string>> maximal_chains(const ArrowGraph& g) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> cur;
    std::function<void(std::size_t)> walk = [&](std::size_t u) {
        cur.push_back(g.nodes[u]);
        if (g.succ[u].empty()) out.push_back(cur);
        for (std::size_t v : g.succ[u]) walk(v);
        cur.pop_back();
    };
    for (std::size_t u = 0; u < g.nodes.size(); ++u)
        if (g.indeg[u] == 0) walk(u);
    std::sort(out.begin(), out.end());
    return out;
}

void require_acyclic(const GentlePresentation& p, bool relations) {
    if (auto cyc = find_cycle(arrow_graph(p, relations))) {
        if (relations)
            throw Error(Errc::InfiniteGlobalDimension, "relations compose cyclically through " + join(*cyc, "*"));
        throw Error(Errc::InfiniteDimensional, "path " + join(*cyc, "*") + " avoids the ideal and repeats forever");
    }
}

std::string flip_bang(const std::string& name) {
    if (!name.empty() && name.back() == '!') return name.substr(0, name.size() - 1);
    return name + "!";
}

}  // namespace

Quiver::Quiver(std::string name, std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : name_(std::move(name)), vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (const auto& v : vertices_)
        if (!vertex_set_.insert(v).second) throw Error(Errc::DuplicateVertex, "vertex '" + v + "' declared twice");
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& a = arrows_[i];
        if (!arrow_index_.emplace(a.name, i).second)
            throw Error(Errc::DuplicateArrow, "arrow '" + a.name + "' declared twice");
        for (const auto* end : {&a.source, &a.target})
            if (!vertex_set_.count(*end))
                throw Error(Errc::UnknownVertex, "arrow '" + a.name + "' uses undeclared vertex '" + *end + "'");
    }
}

bool Quiver::has_vertex(std::string_view v) const { return vertex_set_.find(v) != vertex_set_.end(); }
bool Quiver::has_arrow(std::string_view a) const { return arrow_index_.find(a) != arrow_index_.end(); }

const Arrow& Quiver::arrow(std::string_view a) const {
    auto it = arrow_index_.find(a);
    if (it == arrow_index_.end()) throw Error(Errc::UnknownArrow, "unknown arrow '" + std::string(a) + "'");
    return arrows_[it->second];
}

std::vector<const Arrow*> Quiver::outgoing(std::string_view v) const {
    std::vector<const Arrow*> out;
    for (const auto& a : arrows_)
        if (a.source == v) out.push_back(&a);
    return out;
}

std::vector<const Arrow*> Quiver::incoming(std::string_view v) const {
    std::vector<const Arrow*> out;
    for (const auto& a : arrows_)
        if (a.target == v) out.push_back(&a);
    return out;
}

std::string Path::str() const { return trivial() ? "e_" + start : join(arrows, "*"); }

GentlePresentation::GentlePresentation(Quiver quiver, RelationSet relations)
    : quiver_(std::move(quiver)), relations_(std::move(relations)) {
    for (const auto& [a, b] : relations_) {
        const Arrow& x = quiver_.arrow(a);
        const Arrow& y = quiver_.arrow(b);
        if (x.target != y.source)
            throw Error(Errc::NonComposableRelation, "relation " + a + "*" + b + ": " + a + " ends at " + x.target +
                                                         " but " + b + " starts at " + y.source);
    }
}

bool GentlePresentation::composable(std::string_view a, std::string_view b) const {
    return quiver_.arrow(a).target == quiver_.arrow(b).source;
}

bool GentlePresentation::in_ideal(std::string_view a, std::string_view b) const {
    return relations_.count({std::string(a), std::string(b)}) > 0;
}

bool GentlePresentation::is_path(const Path& p) const {
    if (p.trivial()) return quiver_.has_vertex(p.start);
    for (const auto& a : p.arrows)
        if (!quiver_.has_arrow(a)) return false;
    if (quiver_.arrow(p.arrows.front()).source != p.start) return false;
    for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (!composable(p.arrows[i], p.arrows[i + 1])) return false;
    return true;
}

Path GentlePresentation::make_path(const std::vector<std::string>& arrows) const {
    if (arrows.empty()) throw Error(Errc::PathNotInPresentation, "use a vertex for a trivial path");
    if (!quiver_.has_arrow(arrows.front()))
        throw Error(Errc::PathNotInPresentation, "unknown arrow '" + arrows.front() + "'");
    Path p{quiver_.arrow(arrows.front()).source, arrows};
    if (!is_path(p)) throw Error(Errc::PathNotInPresentation, "'" + p.str() + "' is not a path");
    return p;
}

GentleReport check_gentle_conditions(const GentlePresentation& p) {
    GentleReport r;
    const Quiver& q = p.quiver();
    for (const auto& v : q.vertices()) {
        const auto in = q.incoming(v), out = q.outgoing(v);
        for (auto* list : {&r.literal, &r.standard}) {
            if (in.size() > 2)
                list->push_back({1, "vertex " + v + " has " + std::to_string(in.size()) + " incoming arrows"});
            if (out.size() > 2)
                list->push_back({1, "vertex " + v + " has " + std::to_string(out.size()) + " outgoing arrows"});
        }
    }
    for (const auto& beta : q.arrows()) {
        const auto in = q.incoming(beta.source);
        for (std::size_t i = 0; i < in.size(); ++i)
            for (std::size_t j = i + 1; j < in.size(); ++j) {
                const bool r1 = p.in_ideal(in[i]->name, beta.name), r2 = p.in_ideal(in[j]->name, beta.name);
                if (r1 == r2)
                    r.literal.push_back({2, in[i]->name + "*" + beta.name + " and " + in[j]->name + "*" + beta.name +
                                                (r1 ? " both lie in the ideal" : " both avoid the ideal")});
            }
        std::vector<std::string> rel, free;
        for (const auto* a : in) (p.in_ideal(a->name, beta.name) ? rel : free).push_back(a->name);
        if (rel.size() > 1)
            r.standard.push_back({2, "arrows " + join(rel, ", ") + " all compose with " + beta.name + " in the ideal"});
        if (free.size() > 1)
            r.standard.push_back({2, "arrows " + join(free, ", ") + " all compose with " + beta.name + " outside the ideal"});
    }
    for (const auto& alpha : q.arrows()) {
        const auto out = q.outgoing(alpha.target);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                const bool r1 = p.in_ideal(alpha.name, out[i]->name), r2 = p.in_ideal(alpha.name, out[j]->name);
                if (r1 == r2)
                    r.literal.push_back({3, alpha.name + "*" + out[i]->name + " and " + alpha.name + "*" + out[j]->name +
                                                (r1 ? " both lie in the ideal" : " both avoid the ideal")});
            }
        std::vector<std::string> rel, free;
        for (const auto* b : out) (p.in_ideal(alpha.name, b->name) ? rel : free).push_back(b->name);
        if (rel.size() > 1)
            r.standard.push_back({3, alpha.name + " composes with " + join(rel, ", ") + " in the ideal"});
        if (free.size() > 1)
            r.standard.push_back({3, alpha.name + " composes with " + join(free, ", ") + " outside the ideal"});
    }
    // Condition 4 (relations of length two) holds by construction.
    return r;
}

GentleValidation validate_gentle(Quiver quiver, RelationSet relations, bool strict) {
    GentleValidation v;
    v.presentation = GentlePresentation(std::move(quiver), std::move(relations));
    require_acyclic(v.presentation, false);
    v.report = check_gentle_conditions(v.presentation);
    v.ok = v.report.literal.empty() && (!strict || v.report.standard.empty());
    v.presentation.validated_ = v.ok;
    return v;
}

GentlePresentation require_gentle(Quiver quiver, RelationSet relations, bool strict) {
    auto v = validate_gentle(std::move(quiver), std::move(relations), strict);
    if (!v.ok) {
        std::string msg = "not a gentle pair:";
        const auto& list = !v.report.literal.empty() ? v.report.literal : v.report.standard;
        for (const auto& x : list) msg += " (" + std::to_string(x.condition) + ") " + x.witness + ";";
        throw Error(Errc::NotValidated, msg);
    }
    return std::move(v.presentation);
}

std::string_view thread_kind_name(ThreadKind k) noexcept {
    return k == ThreadKind::Permitted ? "permitted" : "forbidden";
}

std::string Thread::str() const { return join(arrows, "*"); }

std::vector<Thread> enumerate_threads(const GentlePresentation& p, ThreadKind kind) {
    if (!p.validated()) throw Error(Errc::NotValidated, "presentation has not been validated");
    const bool relations = kind == ThreadKind::Forbidden;
    require_acyclic(p, relations);
    std::vector<Thread> out;
    for (auto& chain : maximal_chains(arrow_graph(p, relations))) out.push_back({std::move(chain), kind});
    return out;
}

GentlePresentation koszul_dual(const GentlePresentation& p) {
    const Quiver& q = p.quiver();
    std::vector<Arrow> arrows;
    for (const auto& a : q.arrows()) arrows.push_back({a.name, a.target, a.source});
    RelationSet rels;
    for (const auto& x : q.arrows())
        for (const auto& y : q.arrows())
            if (p.composable(y.name, x.name) && !p.in_ideal(y.name, x.name)) rels.insert({x.name, y.name});
    GentlePresentation dual(Quiver(flip_bang(q.name()), q.vertices(), std::move(arrows)), std::move(rels));
    try {
        require_acyclic(dual, false);
        dual.validated_ = check_gentle_conditions(dual).literal.empty();
    } catch (const Error& e) {
        if (e.code() != Errc::InfiniteDimensional) throw;
    }
    return dual;
}

void AlgebraElement::add(const GentlePresentation& p, const Path& path, double coeff) {
    if (!p.is_path(path)) throw Error(Errc::PathNotInPresentation, "'" + path.str() + "' is not a path");
    for (std::size_t i = 0; i + 1 < path.arrows.size(); ++i)
        if (p.in_ideal(path.arrows[i], path.arrows[i + 1])) return;
    const double v = (terms_[path] += coeff);
    if (v == 0.0) terms_.erase(path);
}

double AlgebraElement::coeff(const Path& path) const {
    auto it = terms_.find(path);
    return it == terms_.end() ? 0.0 : it->second;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out = a;
    for (const auto& [path, k] : b.terms_) {
        const double v = (out.terms_[path] += k);
        if (v == 0.0) out.terms_.erase(path);
    }
    return out;
}

AlgebraElement operator*(double k, const AlgebraElement& a) {
    AlgebraElement out;
    if (k == 0.0) return out;
    for (const auto& [path, c] : a.terms_)
        if (c * k != 0.0) out.terms_.emplace(path, c * k);
    return out;
}

double vertex_hom(const AlgebraElement& x) {
    double s = 0.0;
    for (const auto& [path, k] : x.terms())
        if (path.trivial()) s += k;
    return s;
}

double vertex_hom_q(const GentlePresentation& p, const AlgebraElement& x, const Path& q) {
    double s = 0.0;
    for (const auto& [v, u] : source_weights(p, q)) s += u * x.coeff(Path{v, {}});
    return s;
}

std::map<std::string, unsigned> source_weights(const GentlePresentation& p, const Path& q) {
    if (!p.is_path(q)) throw Error(Errc::PathNotInPresentation, "'" + q.str() + "' is not a path");
    std::map<std::string, unsigned> w;
    for (const auto& a : q.arrows) ++w[p.quiver().arrow(a).source];
    return w;
}

unsigned path_length_via_integral(const GentlePresentation& p, const Path& q) {
    const double twice = 2.0 * multiple_integral_affine_unit_box(source_weights(p, q), 1.0);
    const double r = std::round(twice);
    if (std::abs(twice - r) > 1e-9 || r < 0)
        throw Error(Errc::NonIntegerResult, "2 * integral = " + std::to_string(twice));
    return static_cast<unsigned>(r);
}

double w_projection(const GentlePresentation& dual, const Thread& permitted, const AlgebraElement& x) {
    const auto perm = enumerate_threads(dual, ThreadKind::Permitted);
    Thread probe{permitted.arrows, ThreadKind::Permitted};
    if (!std::binary_search(perm.begin(), perm.end(), probe))
        throw Error(Errc::NotPermitted, "'" + permitted.str() + "' is not a permitted thread");
    return x.coeff(dual.make_path(permitted.arrows));
}

std::vector<std::pair<Thread, Thread>> forb_perm_bijection(const GentlePresentation& p) {
    const auto forb = enumerate_threads(p, ThreadKind::Forbidden);
    const GentlePresentation dual = koszul_dual(p);
    if (!dual.validated()) throw Error(Errc::BijectionFailure, "dual presentation is not gentle");
    const auto perm = enumerate_threads(dual, ThreadKind::Permitted);
    std::vector<std::pair<Thread, Thread>> out;
    std::set<Thread> hit;
    for (const auto& f : forb) {
        Thread image{std::vector<std::string>(f.arrows.rbegin(), f.arrows.rend()), ThreadKind::Permitted};
        if (!std::binary_search(perm.begin(), perm.end(), image))
            throw Error(Errc::BijectionFailure, "image of " + f.str() + " is not a permitted thread of the dual");
        if (image.length() != f.length()) throw Error(Errc::BijectionFailure, "length changed for " + f.str());
        if (!hit.insert(image).second) throw Error(Errc::BijectionFailure, "two threads map to " + image.str());
        out.emplace_back(f, std::move(image));
    }
    if (hit.size() != perm.size()) throw Error(Errc::BijectionFailure, "some permitted threads of the dual are missed");
    return out;
}

std::string_view gldim_method_name(GlDimMethod m) noexcept {
    switch (m) {
        case GlDimMethod::Threads: return "threads";
        case GlDimMethod::Integral: return "integral";
        case GlDimMethod::Stieltjes: return "stieltjes";
    }
    return "?";
}

GlDimMethod parse_gldim_method(std::string_view s) {
    if (s == "threads") return GlDimMethod::Threads;
    if (s == "integral") return GlDimMethod::Integral;
    if (s == "stieltjes") return GlDimMethod::Stieltjes;
    throw Error(Errc::OutOfDomain, "unknown method '" + std::string(s) + "'");
}

unsigned global_dimension(const GentlePresentation& p, GlDimMethod method) {
    if (!p.validated()) throw Error(Errc::NotValidated, "presentation has not been validated");
    unsigned best = 0;
    switch (method) {
        case GlDimMethod::Threads:
            for (const auto& f : enumerate_threads(p, ThreadKind::Forbidden))
                best = std::max(best, static_cast<unsigned>(f.length()));
            break;
        case GlDimMethod::Integral:
            for (const auto& f : enumerate_threads(p, ThreadKind::Forbidden))
                best = std::max(best, path_length_via_integral(p, p.make_path(f.arrows)));
            break;
        case GlDimMethod::Stieltjes: {
            require_acyclic(p, true);
            const GentlePresentation dual = koszul_dual(p);
            const RealFn identity = [](double x) { return x; };
            for (const auto& t : enumerate_threads(dual, ThreadKind::Permitted)) {
                const auto phi = StieltjesMeasure::log_power(static_cast<double>(t.length()));
                const double v = stieltjes_integrate(identity, phi, Interval{1.0, 2.0}, 1e-10).value;
                const double r = std::round(v);
                if (std::abs(v - r) > 1e-9 || r < 0)
                    throw Error(Errc::NonIntegerResult, "Stieltjes integral " + std::to_string(v));
                best = std::max(best, static_cast<unsigned>(r));
            }
            break;
        }
    }
    return best;
}

GlDimReport global_dimension_all(const GentlePresentation& p) {
    GlDimReport r;
    for (auto m : {GlDimMethod::Threads, GlDimMethod::Integral, GlDimMethod::Stieltjes})
        r.by_method[m] = global_dimension(p, m);
    r.value = r.by_method[GlDimMethod::Threads];
    for (const auto& [m, v] : r.by_method)
        if (v != r.value)
            throw Error(Errc::MethodDisagreement, std::string(gldim_method_name(m)) + " gives " + std::to_string(v) +
                                                      ", threads give " + std::to_string(r.value));
    for (const auto& f : enumerate_threads(p, ThreadKind::Forbidden))
        if (f.length() == r.value) r.witnesses.push_back(f);
    return r;
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_length) {
    std::vector<Path> out;
    std::vector<std::string> names;
    for (const auto& a : q.arrows()) names.push_back(a.name);
    std::sort(names.begin(), names.end());
    std::function<void(Path&)> extend = [&](Path& p) {
        out.push_back(p);
        if (p.length() == max_length) return;
        const std::string& end = q.arrow(p.arrows.back()).target;
        for (const auto& n : names)
            if (q.arrow(n).source == end) {
                p.arrows.push_back(n);
                extend(p);
                p.arrows.pop_back();
            }
    };
    if (max_length == 0) return out;
    for (const auto& n : names) {
        Path p{q.arrow(n).source, {n}};
        extend(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace catint
