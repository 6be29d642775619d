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

#include "catint/fn_expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "catint/dsl.hpp"
#include "catint/error.hpp"

namespace catint {

const char* const kExprGrammar =
    "expr    := term ((\"+\" | \"-\") term)*\n"
    "term    := unary ((\"*\" | \"/\") unary)*\n"
    "unary   := \"-\" unary | power\n"
    "power   := primary [\"^\" ratio]\n"
    "ratio   := [\"-\"] NUMBER [\"/\" NUMBER] | \"(\" [\"-\"] NUMBER [\"/\" NUMBER] \")\"\n"
    "primary := NUMBER | \"t\" | \"sqrt\" \"(\" expr \")\" | \"indicator\" \"(\" NUMBER \",\" NUMBER \")\" | \"(\" expr \")\"\n";

enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Sqrt, Indicator };

struct FnExpr::Node {
    Op op;
    double value = 0.0;         // Const
    long num = 1, den = 1;      // Pow exponent num/den, den > 0
    double a = 0.0, b = 0.0;    // Indicator
    std::shared_ptr<const Node> l, r;
};

namespace {

using NodeP = std::shared_ptr<const FnExpr::Node>;

NodeP make(Op op, NodeP l = nullptr, NodeP r = nullptr) {
    auto n = std::make_shared<FnExpr::Node>();
    n->op = op;
    n->l = std::move(l);
    n->r = std::move(r);
    return n;
}

NodeP constant(double v) {
    auto n = std::make_shared<FnExpr::Node>();
    n->op = Op::Const;
    n->value = v;
    return n;
}

bool is_const(const NodeP& n, double v) { return n->op == Op::Const && n->value == v; }

NodeP add(NodeP x, NodeP y) {
    if (is_const(x, 0)) return y;
    if (is_const(y, 0)) return x;
    if (x->op == Op::Const && y->op == Op::Const) return constant(x->value + y->value);
    return make(Op::Add, std::move(x), std::move(y));
}

NodeP sub(NodeP x, NodeP y) {
    if (is_const(y, 0)) return x;
    if (x->op == Op::Const && y->op == Op::Const) return constant(x->value - y->value);
    if (is_const(x, 0)) return make(Op::Neg, std::move(y));
    return make(Op::Sub, std::move(x), std::move(y));
}

NodeP mul(NodeP x, NodeP y) {
    if (is_const(x, 0) || is_const(y, 0)) return constant(0);
    if (is_const(x, 1)) return y;
    if (is_const(y, 1)) return x;
    if (x->op == Op::Const && y->op == Op::Const) return constant(x->value * y->value);
    return make(Op::Mul, std::move(x), std::move(y));
}

NodeP div(NodeP x, NodeP y) {
    if (is_const(x, 0)) return constant(0);
    if (is_const(y, 1)) return x;
    return make(Op::Div, std::move(x), std::move(y));
}

NodeP power(NodeP base, long num, long den) {
    const long g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (num == 0) return constant(1);
    if (num == 1 && den == 1) return base;
    auto n = std::make_shared<FnExpr::Node>();
    n->op = Op::Pow;
    n->num = num;
    n->den = den;
    n->l = std::move(base);
    return n;
}

double rational_pow(double x, long num, long den) {
    if (den == 1) return std::pow(x, static_cast<double>(num));
    const double r = static_cast<double>(num) / static_cast<double>(den);
    if (x >= 0) return std::pow(x, r);
    if (den % 2 == 0) return std::numeric_limits<double>::quiet_NaN();
    const double m = std::pow(-x, r);
    return (num % 2 != 0) ? -m : m;
}

double eval(const NodeP& n, double t) {
    switch (n->op) {
        case Op::Const: return n->value;
        case Op::Var: return t;
        case Op::Add: return eval(n->l, t) + eval(n->r, t);
        case Op::Sub: return eval(n->l, t) - eval(n->r, t);
        case Op::Mul: return eval(n->l, t) * eval(n->r, t);
        case Op::Div: return eval(n->l, t) / eval(n->r, t);
        case Op::Neg: return -eval(n->l, t);
        case Op::Pow: return rational_pow(eval(n->l, t), n->num, n->den);
        case Op::Sqrt: {
            const double x = eval(n->l, t);
            return x < 0 ? std::numeric_limits<double>::quiet_NaN() : std::sqrt(x);
        }
        case Op::Indicator: return (n->a <= t && t <= n->b) ? 1.0 : 0.0;
    }
    return 0.0;
}

NodeP deriv(const NodeP& n) {
    switch (n->op) {
        case Op::Const:
        case Op::Indicator: return constant(0);
        case Op::Var: return constant(1);
        case Op::Add: return add(deriv(n->l), deriv(n->r));
        case Op::Sub: return sub(deriv(n->l), deriv(n->r));
        case Op::Neg: {
            auto d = deriv(n->l);
            return is_const(d, 0) ? d : make(Op::Neg, d);
        }
        case Op::Mul: return add(mul(deriv(n->l), n->r), mul(n->l, deriv(n->r)));
        case Op::Div:
            return div(sub(mul(deriv(n->l), n->r), mul(n->l, deriv(n->r))), mul(n->r, n->r));
        case Op::Pow: {
            const double r = static_cast<double>(n->num) / static_cast<double>(n->den);
            return mul(mul(constant(r), power(n->l, n->num - n->den, n->den)), deriv(n->l));
        }
        case Op::Sqrt: return div(deriv(n->l), mul(constant(2), n));
    }
    return constant(0);
}

using R = std::optional<Interval>;

R hull(std::initializer_list<double> xs) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double x : xs) {
        if (!std::isfinite(x)) return std::nullopt;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    return Interval{lo, hi};
}

R range_of(const NodeP& n, const Interval& x) {
    switch (n->op) {
        case Op::Const: return Interval{n->value, n->value};
        case Op::Var: return x;
        case Op::Indicator: {
            if (n->a <= x.lo && x.hi <= n->b) return Interval{1, 1};
            if (x.hi <= n->a || x.lo >= n->b) return Interval{0, 0};
            return Interval{0, 1};
        }
        case Op::Neg: {
            auto u = range_of(n->l, x);
            if (!u) return u;
            return Interval{-u->hi, -u->lo};
        }
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Div: {
            auto u = range_of(n->l, x), v = range_of(n->r, x);
            if (!u || !v) return std::nullopt;
            if (n->op == Op::Add) return hull({u->lo + v->lo, u->hi + v->hi});
            if (n->op == Op::Sub) return hull({u->lo - v->hi, u->hi - v->lo});
            if (n->op == Op::Mul) return hull({u->lo * v->lo, u->lo * v->hi, u->hi * v->lo, u->hi * v->hi});
            if (v->lo <= 0 && 0 <= v->hi) return std::nullopt;
            return hull({u->lo / v->lo, u->lo / v->hi, u->hi / v->lo, u->hi / v->hi});
        }
        case Op::Sqrt: {
            auto u = range_of(n->l, x);
            if (!u || u->hi < 0) return std::nullopt;
            if (u->lo < 0) return std::nullopt;
            return Interval{std::sqrt(u->lo), std::sqrt(u->hi)};
        }
        case Op::Pow: {
            auto u = range_of(n->l, x);
            if (!u) return u;
            const bool straddles = u->lo < 0 && 0 < u->hi;
            if (n->num < 0 && u->lo <= 0 && 0 <= u->hi) return std::nullopt;
            const double a = rational_pow(u->lo, n->num, n->den), b = rational_pow(u->hi, n->num, n->den);
            if (straddles) return hull({a, b, rational_pow(0.0, n->num, n->den)});
            return hull({a, b});
        }
    }
    return std::nullopt;
}

bool has_free_var(const NodeP& n) {
    if (!n) return false;
    if (n->op == Op::Var) return true;
    return has_free_var(n->l) || has_free_var(n->r);
}

void collect_breaks(const NodeP& n, std::vector<double>& out) {
    if (!n) return;
    if (n->op == Op::Indicator) {
        out.push_back(n->a);
        out.push_back(n->b);
    }
    collect_breaks(n->l, out);
    collect_breaks(n->r, out);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

int prec(Op op) {
    switch (op) {
        case Op::Add:
        case Op::Sub: return 1;
        case Op::Mul:
        case Op::Div: return 2;
        case Op::Neg: return 3;
        case Op::Pow: return 4;
        default: return 5;
    }
}

std::string show(const NodeP& n) {
    auto wrap = [](const NodeP& c, int p) {
        const std::string s = show(c);
        return prec(c->op) < p || (c->op == Op::Const && c->value < 0) ? "(" + s + ")" : s;
    };
    switch (n->op) {
        case Op::Const: return fmt(n->value);
        case Op::Var: return "t";
        case Op::Indicator: return "indicator(" + fmt(n->a) + ", " + fmt(n->b) + ")";
        case Op::Sqrt: return "sqrt(" + show(n->l) + ")";
        case Op::Neg: return "-" + wrap(n->l, 3);
        case Op::Add: return show(n->l) + " + " + wrap(n->r, 1);
        case Op::Sub: return show(n->l) + " - " + wrap(n->r, 2);
        case Op::Mul: return wrap(n->l, 2) + "*" + wrap(n->r, 3);
        case Op::Div: return wrap(n->l, 2) + "/" + wrap(n->r, 3);
        case Op::Pow: {
            std::string e = std::to_string(n->num);
            if (n->den != 1) e += "/" + std::to_string(n->den);
            if (n->den != 1 || n->num < 0) e = "(" + e + ")";
            return wrap(n->l, 5) + "^" + e;
        }
    }
    return "?";
}

class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    NodeP parse() {
        NodeP e = expr();
        skip();
        if (i_ != s_.size()) fail("operator or end of input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        skip();
        const std::string found = i_ < s_.size() ? "'" + std::string(1, s_[i_]) + "'" : "end of input";
        throw SyntaxError(1, i_ + 1, expected, found);
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("'") + c + "'");
    }

    bool word(std::string_view w) {
        skip();
        if (s_.substr(i_, w.size()) != w) return false;
        const std::size_t j = i_ + w.size();
        if (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) return false;
        i_ = j;
        return true;
    }

    bool at_number() {
        skip();
        return i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.');
    }

    double number() {
        if (!at_number()) fail("number");
        const std::string tmp(s_.substr(i_));
        char* end = nullptr;
        const double v = std::strtod(tmp.c_str(), &end);
        const std::size_t used = static_cast<std::size_t>(end - tmp.c_str());
        if (used == 0) fail("number");
        i_ += used;
        return v;
    }

    double signed_number() {
        const bool neg = accept('-');
        const double v = number();
        return neg ? -v : v;
    }

    long integer() {
        const std::size_t start = (skip(), i_);
        const double v = number();
        if (v != std::floor(v) || std::abs(v) > 1e9) {
            i_ = start;
            fail("integer");
        }
        return static_cast<long>(v);
    }

    NodeP expr() {
        NodeP e = term();
        for (;;) {
            if (accept('+')) e = make(Op::Add, e, term());
            else if (accept('-')) e = make(Op::Sub, e, term());
            else return e;
        }
    }

    NodeP term() {
        NodeP e = unary();
        for (;;) {
            if (accept('*')) e = make(Op::Mul, e, unary());
            else if (accept('/')) e = make(Op::Div, e, unary());
            else return e;
        }
    }

    NodeP unary() {
        if (accept('-')) return make(Op::Neg, unary());
        return pow();
    }

    NodeP pow() {
        NodeP base = primary();
        if (!accept('^')) return base;
        const bool paren = accept('(');
        const bool neg = accept('-');
        long num = integer();
        long den = 1;
        if (accept('/')) den = integer();
        if (paren) expect(')');
        if (den <= 0) fail("positive denominator");
        if (neg) num = -num;
        auto n = std::make_shared<FnExpr::Node>();
        const long g = std::gcd(num, den);
        n->op = Op::Pow;
        n->num = num / g;
        n->den = den / g;
        n->l = std::move(base);
        return n;
    }

    NodeP primary() {
        if (at_number()) return constant(number());
        if (word("t")) return make(Op::Var);
        if (word("sqrt")) {
            expect('(');
            NodeP e = expr();
            expect(')');
            return make(Op::Sqrt, e);
        }
        if (word("indicator")) {
            expect('(');
            const double a = signed_number();
            expect(',');
            const double b = signed_number();
            expect(')');
            if (!(a <= b)) throw Error(Errc::OrderViolation, "indicator needs a <= b");
            auto n = std::make_shared<FnExpr::Node>();
            n->op = Op::Indicator;
            n->a = a;
            n->b = b;
            return n;
        }
        if (accept('(')) {
            NodeP e = expr();
            expect(')');
            return e;
        }
        fail("number, 't', 'sqrt', 'indicator' or '('");
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

double FnExpr::operator()(double t) const { return root_ ? eval(root_, t) : 0.0; }

FnExpr FnExpr::derivative() const { return FnExpr(root_ ? deriv(root_) : constant(0)); }

bool FnExpr::is_step() const { return !has_free_var(root_); }

std::vector<double> FnExpr::breakpoints() const {
    std::vector<double> out;
    collect_breaks(root_, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Interval> FnExpr::range(const Interval& x) const {
    return root_ ? range_of(root_, x) : std::optional<Interval>(Interval{0, 0});
}

std::string FnExpr::str() const { return root_ ? show(root_) : "0"; }

FnExpr parse_fn_expr(std::string_view text) { return FnExpr(ExprParser(text).parse()); }

namespace {

std::vector<double> cuts_in(const FnExpr& f, const Interval& domain) {
    std::vector<double> cuts{domain.lo};
    for (double b : f.breakpoints())
        if (domain.lo < b && b < domain.hi) cuts.push_back(b);
    cuts.push_back(domain.hi);
    return cuts;
}

}  // namespace

MonotonePieces monotone_pieces(const FnExpr& f, const Interval& domain, unsigned max_depth) {
    const FnExpr d = f.derivative();
    const FnExpr dd = d.derivative();
    MonotonePieces out;
    if (domain.degenerate()) {
        out.pieces.push_back(domain);
        return out;
    }
    const auto cuts = cuts_in(f, domain);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        // (piece, sign) with sign -1, 0, +1; 0 means constant
        std::vector<std::pair<Interval, int>> found;
        auto split = [&](auto&& self, double lo, double hi, unsigned depth) -> void {
            const auto r = d.range(Interval{lo, hi});
            if (r && (r->lo >= 0 || r->hi <= 0)) {
                const int sign = (r->lo == 0 && r->hi == 0) ? 0 : (r->lo >= 0 ? 1 : -1);
                found.push_back({Interval{lo, hi}, sign});
                return;
            }
            // f' monotone here: at most one sign change, located by bisection.
            const auto r2 = dd.range(Interval{lo, hi});
            if (r && r2 && (r2->lo > 0 || r2->hi < 0)) {
                const double da = d(lo), db = d(hi);
                const int sa = da > 0 ? 1 : (da < 0 ? -1 : 0), sb = db > 0 ? 1 : (db < 0 ? -1 : 0);
                if (sa * sb >= 0) {
                    found.push_back({Interval{lo, hi}, sa != 0 ? sa : sb});
                    return;
                }
                double a = lo, b = hi;
                for (;;) {
                    const double m = 0.5 * (a + b);
                    if (!(a < m && m < b)) break;
                    const double dm = d(m);
                    if (dm == 0) {
                        a = b = m;
                        break;
                    }
                    ((dm > 0) == (sa > 0) ? a : b) = m;
                }
                found.push_back({Interval{lo, b}, sa});
                found.push_back({Interval{b, hi}, sb});
                return;
            }
            const double mid = 0.5 * (lo + hi);
            if (depth >= max_depth || !(lo < mid && mid < hi)) {
                out.certified = false;
                found.push_back({Interval{lo, hi}, 2});
                return;
            }
            self(self, lo, mid, depth + 1);
            self(self, mid, hi, depth + 1);
        };
        split(split, cuts[c], cuts[c + 1], 0);
        // Merge neighbours that move the same way.
        std::vector<std::pair<Interval, int>> merged;
        for (const auto& [iv, s] : found) {
            if (!merged.empty() && s != 2 && merged.back().second != 2 &&
                (s == 0 || merged.back().second == 0 || s == merged.back().second)) {
                merged.back().first.hi = iv.hi;
                if (merged.back().second == 0) merged.back().second = s;
            } else {
                merged.push_back({iv, s});
            }
        }
        for (const auto& [iv, s] : merged) out.pieces.push_back(iv);
    }
    return out;
}

StepFunction to_step_function(const FnExpr& f, const Interval& ambient) {
    if (!f.is_step()) throw Error(Errc::OutOfDomain, "expression depends on t outside indicators");
    const auto cuts = cuts_in(f, ambient);
    std::vector<Piece> pieces;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double v = f(0.5 * (cuts[c] + cuts[c + 1]));
        if (!std::isfinite(v)) throw Error(Errc::NonFinite, "step expression is not finite");
        if (v != 0.0) pieces.push_back({Box{Interval{cuts[c], cuts[c + 1]}}, v});
    }
    return StepFunction(Box{ambient}, pieces);
}

IntegrandPlan plan_integrand(const FnExpr& f, const Interval& domain, std::optional<double> truncate) {
    IntegrandPlan plan;
    plan.domain = domain;
    auto bad = [&](double t) { return !std::isfinite(f(t)); };
    if (bad(domain.lo) || bad(domain.hi)) {
        if (!truncate)
            throw Error(Errc::DomainAnnotationMissing,
                        "integrand is not finite at an end of [" + std::to_string(domain.lo) + ", " +
                            std::to_string(domain.hi) + "]; pass a truncation");
        if (!(*truncate > 0.0) || 2.0 * *truncate >= domain.length())
            throw Error(Errc::OutOfDomain, "truncation must be positive and smaller than half the domain");
        if (bad(domain.lo)) {
            plan.domain.lo += *truncate;
            plan.truncated_lo = true;
        }
        if (bad(domain.hi)) {
            plan.domain.hi -= *truncate;
            plan.truncated_hi = true;
        }
    }
    plan.pieces = monotone_pieces(f, plan.domain);
    return plan;
}

}  // namespace catint
