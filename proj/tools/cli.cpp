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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "catint/dsl.hpp"
#include "catint/elemfn.hpp"
#include "catint/error.hpp"
#include "catint/fn_expr.hpp"
#include "catint/integrator.hpp"
#include "catint/iposet.hpp"
#include "catint/json_io.hpp"
#include "catint/quiver.hpp"

namespace catint::cli {
namespace {

using nlohmann::json;

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(15) << v;
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::OutOfDomain, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Interval parse_pair(const std::string& s, const std::string& what) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError(what, "expected two numbers as a,b");
    try {
        std::size_t used = 0;
        const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        const double lo = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(a);
        const double hi = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(b);
        return make_interval(lo, hi);
    } catch (const std::logic_error&) {
        throw CLI::ValidationError(what, "expected two numbers as a,b");
    }
}

StieltjesMeasure parse_measure(const std::string& spec) {
    if (spec == "lebesgue") return StieltjesMeasure::lebesgue();
    if (spec.rfind("log:", 0) == 0) {
        try {
            return StieltjesMeasure::log_power(std::stod(spec.substr(4)));
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("--phi", "log:L needs a number L");
        }
    }
    const FnExpr phi = parse_fn_expr(spec);
    const FnExpr dphi = phi.derivative();
    return {[phi](double x) { return phi(x); }, [dphi](double x) { return dphi(x); }};
}

struct Common {
    bool json = false;
    double tol = 1e-6;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

GentlePresentation load(const std::string& file) { return to_presentation(parse_quiver_dsl(read_file(file))); }

GentlePresentation load_gentle(const std::string& file, bool strict) {
    const QuiverDoc d = parse_quiver_dsl(read_file(file));
    return require_gentle(Quiver(d.name, d.vertices, d.arrows), RelationSet(d.relations.begin(), d.relations.end()),
                          strict);
}

json violations_json(const std::vector<Violation>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back({{"condition", v.condition}, {"witness", v.witness}});
    return a;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"catint: categorified integration and gentle-algebra tools", "catint"};
    app.require_subcommand(1);
    Common c;
    app.add_flag("--json", c.json, "Machine-readable output");

    std::string file, method = "all", kind = "all", expr, gexpr, domain, phi, name, first, second, ambient;
    bool strict = false;
    double at = 0.0;
    std::optional<double> truncate;

    auto* validate = app.add_subcommand("validate", "Check the gentle-pair conditions of a .qv file");
    validate->add_option("file", file, "Quiver file")->required()->check(CLI::ExistingFile);
    validate->add_flag("--strict", strict, "Also require the standard formulation");

    auto* threads = app.add_subcommand("threads", "List permitted and forbidden threads");
    threads->add_option("file", file, "Quiver file")->required()->check(CLI::ExistingFile);
    threads->add_option("--kind", kind, "permitted, forbidden or all")
        ->check(CLI::IsMember({"permitted", "forbidden", "all"}));
    threads->add_flag("--strict", strict, "Validate with the standard formulation too");

    auto* koszul = app.add_subcommand("koszul", "Emit the Koszul dual presentation");
    koszul->add_option("file", file, "Quiver file")->required()->check(CLI::ExistingFile);

    auto* gldim = app.add_subcommand("gldim", "Global dimension");
    gldim->add_option("file", file, "Quiver file")->required()->check(CLI::ExistingFile);
    gldim->add_option("--method", method, "threads, integral, stieltjes or all")
        ->check(CLI::IsMember({"threads", "integral", "stieltjes", "all"}));
    gldim->add_flag("--strict", strict, "Validate with the standard formulation too");

    auto* integrate = app.add_subcommand("integrate", "Integrate an expression in t over a,b");
    integrate->add_option("--expr", expr, "Integrand")->required();
    integrate->add_option("--domain", domain, "Interval a,b")->required();
    integrate->add_option("--tol", c.tol, "Enclosure width")->check(CLI::PositiveNumber);
    integrate->add_option("--truncate", truncate, "Move non-finite ends inward by this much")
        ->check(CLI::PositiveNumber);

    auto* stieltjes = app.add_subcommand("stieltjes", "Lebesgue-Stieltjes integral of an expression");
    stieltjes->add_option("--expr", expr, "Integrand")->required();
    stieltjes->add_option("--phi", phi, "lebesgue, log:L (L ln t) or an increasing expression")->required();
    stieltjes->add_option("--domain", domain, "Interval a,b")->required();
    stieltjes->add_option("--tol", c.tol, "Tolerance")->check(CLI::PositiveNumber);

    auto* elemfn = app.add_subcommand("elemfn", "Elementary functions from integrals");
    elemfn->add_option("--name", name, "asin, acos, sin, cos, ln, exp or K")->required();
    elemfn->add_option("--at", at, "Argument");
    elemfn->add_option("--tol", c.tol, "Enclosure width")->check(CLI::PositiveNumber);

    auto* iposet = app.add_subcommand("iposet-add", "Add two i.poset elements");
    iposet->add_option("--f", expr, "Step expression backing the first element")->required();
    iposet->add_option("--g", gexpr, "Step expression backing the second element (default: f)");
    iposet->add_option("--ambient", ambient, "Ambient interval c,d")->required();
    iposet->add_option("--first", first, "Interval u,v of the first element")->required();
    iposet->add_option("--second", second, "Interval s,t of the second element")->required();

    for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", c.json, "Machine-readable output");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n"
            << app.help() << "\nQuiver file grammar:\n"
            << kQuiverGrammar << "\nExpression grammar:\n"
            << kExprGrammar;
        return kExitUsage;
    }

    try {
        if (validate->parsed()) {
            const QuiverDoc d = parse_quiver_dsl(read_file(file));
            const auto v = validate_gentle(Quiver(d.name, d.vertices, d.arrows),
                                           RelationSet(d.relations.begin(), d.relations.end()), strict);
            if (c.json) {
                emit(out, {{"name", d.name},
                           {"gentle", v.ok},
                           {"strict", strict},
                           {"literal", violations_json(v.report.literal)},
                           {"standard", violations_json(v.report.standard)}});
            } else {
                out << d.name << ": " << (v.ok ? "gentle" : "not gentle") << "\n";
                out << "  literal conditions: " << (v.report.literal.empty() ? "hold" : "violated") << "\n";
                for (const auto& x : v.report.literal) out << "    (" << x.condition << ") " << x.witness << "\n";
                out << "  standard conditions: " << (v.report.standard.empty() ? "hold" : "violated") << "\n";
                for (const auto& x : v.report.standard) out << "    (" << x.condition << ") " << x.witness << "\n";
            }
            return v.ok ? kExitOk : kExitDomain;
        }
        if (threads->parsed()) {
            const GentlePresentation p = load_gentle(file, strict);
            std::vector<Thread> all;
            if (kind != "permitted")
                for (auto& t : enumerate_threads(p, ThreadKind::Forbidden)) all.push_back(t);
            if (kind != "forbidden")
                for (auto& t : enumerate_threads(p, ThreadKind::Permitted)) all.push_back(t);
            if (c.json) {
                emit(out, {{"name", p.quiver().name()}, {"threads", all}});
            } else {
                for (const auto& t : all)
                    out << thread_kind_name(t.kind) << " " << t.str() << " (length " << t.length() << ")\n";
            }
            return kExitOk;
        }
        if (koszul->parsed()) {
            const GentlePresentation dual = koszul_dual(load(file));
            if (c.json) emit(out, {{"dual", to_doc(dual)}, {"gentle", dual.validated()}});
            else out << emit_dsl(to_doc(dual));
            return kExitOk;
        }
        if (gldim->parsed()) {
            const GentlePresentation p = load_gentle(file, strict);
            json values = json::object();
            unsigned value = 0;
            if (method == "all") {
                const GlDimReport r = global_dimension_all(p);
                value = r.value;
                for (const auto& [m, v] : r.by_method) values[std::string(gldim_method_name(m))] = v;
            } else {
                value = global_dimension(p, parse_gldim_method(method));
                values[method] = value;
            }
            if (c.json) {
                emit(out, {{"gldim", value},
                           {"method_values", values},
                           {"threads", enumerate_threads(p, ThreadKind::Forbidden)},
                           {"dual", to_doc(koszul_dual(p))}});
            } else {
                out << "gl.dim = " << value << " (";
                bool firstv = true;
                for (const auto* m : {"threads", "integral", "stieltjes"}) {
                    if (!values.contains(m)) continue;
                    out << (firstv ? "" : ", ") << m << "=" << values[m].get<unsigned>();
                    firstv = false;
                }
                out << ")\n";
            }
            return kExitOk;
        }
        if (integrate->parsed()) {
            const FnExpr f = parse_fn_expr(expr);
            const Interval dom = parse_pair(domain, "--domain");
            if (f.is_step()) {
                const double v = integrate_step(to_step_function(f, dom));
                if (c.json) emit(out, {{"value", v}, {"exact", true}});
                else out << "integral = " << num(v) << " (exact)\n";
                return kExitOk;
            }
            const IntegrandPlan plan = plan_integrand(f, dom, truncate);
            const auto r = integrate_enclosure([&f](double t) { return f(t); }, plan.domain, plan.pieces.pieces, c.tol);
            if (c.json) {
                json j = r.enclosure;
                j["converged"] = r.converged;
                j["domain"] = plan.domain;
                j["truncated"] = plan.truncated_lo || plan.truncated_hi;
                j["pieces"] = plan.pieces.pieces;
                j["pieces_certified"] = plan.pieces.certified;
                emit(out, j);
            } else {
                out << "integral in [" << num(r.enclosure.lower) << ", " << num(r.enclosure.upper) << "] width "
                    << num(r.enclosure.width()) << (r.converged ? "" : " (tolerance not reached)") << "\n";
                if (plan.truncated_lo || plan.truncated_hi)
                    out << "truncated to [" << num(plan.domain.lo) << ", " << num(plan.domain.hi) << "]\n";
            }
            return kExitOk;
        }
        if (stieltjes->parsed()) {
            const FnExpr f = parse_fn_expr(expr);
            const Interval dom = parse_pair(domain, "--domain");
            const StieltjesMeasure m = parse_measure(phi);
            if (f.is_step()) {
                const double v = stieltjes_integrate(to_step_function(f, dom), m, dom);
                if (c.json) emit(out, {{"value", v}, {"exact", true}});
                else out << "integral = " << num(v) << " (exact)\n";
                return kExitOk;
            }
            const auto r = stieltjes_integrate([&f](double t) { return f(t); }, m, dom, c.tol);
            if (c.json) {
                json j = {{"value", r.value}, {"converged", r.converged}, {"density_agrees", r.density_agrees}};
                j["density_check"] = r.density_check ? json(*r.density_check) : json(nullptr);
                emit(out, j);
            } else {
                out << "integral = " << num(r.value) << (r.converged ? "" : " (tolerance not reached)") << "\n";
                if (r.density_check)
                    out << "density check [" << num(r.density_check->lower) << ", " << num(r.density_check->upper)
                        << "] " << (r.density_agrees ? "agrees" : "DISAGREES") << "\n";
            }
            return kExitOk;
        }
        if (elemfn->parsed()) {
            Enclosure e;
            std::string label;
            if (name == "K") {
                e = K_constant(c.tol);
                label = "K";
            } else {
                const ElemName n = parse_elem_name(name);
                e = (*elem_handle(n, c.tol))(at);
                label = std::string(elem_name(n)) + "(" + num(at) + ")";
            }
            if (c.json) emit(out, e);
            else out << label << " in [" << num(e.lower) << ", " << num(e.upper) << "]\n";
            return kExitOk;
        }
        if (iposet->parsed()) {
            const Interval amb = parse_pair(ambient, "--ambient");
            const auto f = share(to_step_function(parse_fn_expr(expr), amb));
            const auto g = gexpr.empty() ? f : share(to_step_function(parse_fn_expr(gexpr), amb));
            const IPosetElement e1 = make_element(f, parse_pair(first, "--first"));
            const IPosetElement e2 = make_element(g, parse_pair(second, "--second"));
            const Addition a = add_elements_detailed(e1, e2);
            if (c.json) {
                emit(out, {{"first", e1},
                           {"second", e2},
                           {"case", std::string(case_name(a.branch))},
                           {"branch_value", a.branch_value},
                           {"sum", a.sum}});
            } else {
                const Interval u = (*a.sum.set.hull())[0];
                out << "case " << case_name(a.branch) << "\n";
                out << "sum = ([" << num(u.lo) << ", " << num(u.hi) << "], " << num(a.sum.value) << ")\n";
            }
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace catint::cli
