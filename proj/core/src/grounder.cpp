//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include <lpodc/grounder.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace lpodc::asp {

namespace {

using Binding = std::map<std::string, Value>;

bool contains(const std::vector<std::string>& xs, const std::string& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

std::vector<std::string> variables(const Term& t) {
    std::vector<std::string> out;
    t.collectVariables(out);
    return out;
}

std::vector<std::string> variables(const Literal& l) {
    std::vector<std::string> out;
    if (l.kind == Literal::Kind::Atom) {
        l.atom.collectVariables(out);
    }
    else {
        l.lhs.collectVariables(out);
        l.rhs.collectVariables(out);
    }
    return out;
}

bool bound(const std::vector<std::string>& vars, const Binding& b) {
    return std::all_of(vars.begin(), vars.end(), [&](const std::string& v) { return b.count(v) != 0; });
}

bool compare(const Value& l, CmpOp op, const Value& r) {
    switch (op) {
        case CmpOp::Eq: return l == r;
        case CmpOp::Ne: return l != r;
        case CmpOp::Lt: return l < r;
        case CmpOp::Le: return l <= r;
        case CmpOp::Gt: return l > r;
        case CmpOp::Ge: return l >= r;
    }
    return false;
}

/// Variables occurring in body literals or aggregate bounds; aggregate variables not
/// among them are local to their element.
struct StatementInfo {
    std::vector<std::string> globals;
};

class Grounder {
public:
    Grounder(const std::vector<Statement>& statements, const std::vector<Constant>& constants)
        : statements_(statements) {
        for (const auto& c : constants) {
            auto v = eval(c.value, {});
            if (!v) {
                throw GroundingError("constant " + c.name + " is not ground");
            }
            constants_[c.name] = *v;
        }
        for (const auto& s : statements_) {
            StatementInfo info;
            for (const auto& item : s.body) {
                if (const auto* l = std::get_if<Literal>(&item)) {
                    for (auto& v : variables(*l)) {
                        addUnique(info.globals, v);
                    }
                }
                else {
                    const auto& a = std::get<Aggregate>(item);
                    for (const auto* t : {a.lower ? &*a.lower : nullptr, a.upper ? &*a.upper : nullptr}) {
                        if (t) {
                            for (auto& v : variables(*t)) {
                                addUnique(info.globals, v);
                            }
                        }
                    }
                }
            }
            info_.push_back(std::move(info));
        }
    }

    GroundProgram run(const std::vector<Atom>& facts) {
        for (const auto& f : facts) {
            addDomain(f);
        }
        for (std::size_t before = SIZE_MAX; before != domain_.size();) {
            before = domain_.size();
            for (std::size_t i = 0; i != statements_.size(); ++i) {
                collect(i);
            }
        }
        GroundProgram g;
        for (const auto& f : facts) {
            g.fact(f);
        }
        for (std::size_t i = 0; i != statements_.size(); ++i) {
            instantiate(i, g);
        }
        for (const auto& a : domain_) {
            g.intern(a);
        }
        return g;
    }

private:
    static void addUnique(std::vector<std::string>& xs, const std::string& x) {
        if (!contains(xs, x)) {
            xs.push_back(x);
        }
    }

    void addDomain(const Atom& a) {
        if (domain_.insert(a).second) {
            byPredicate_[{a.predicate, a.args.size()}].push_back(a);
        }
    }

    std::optional<Value> eval(const Term& t, const Binding& b) const {
        switch (t.kind) {
            case Term::Kind::Integer: return Value::integer(t.value);
            case Term::Kind::Symbol : {
                auto it = constants_.find(t.name);
                return it != constants_.end() ? it->second : Value::symbol(t.name);
            }
            case Term::Kind::Variable: {
                auto it = b.find(t.name);
                if (it == b.end()) {
                    throw GroundingError("unsafe variable " + t.name);
                }
                return it->second;
            }
            case Term::Kind::Function: {
                std::vector<Value> args;
                for (const auto& a : t.args) {
                    auto v = eval(a, b);
                    if (!v) {
                        return std::nullopt;
                    }
                    args.push_back(std::move(*v));
                }
                return Value::function(t.name, std::move(args));
            }
            case Term::Kind::Binary: {
                auto l = eval(t.args[0], b);
                auto r = eval(t.args[1], b);
                if (!l || !r || !l->isInteger() || !r->isInteger()) {
                    return std::nullopt;
                }
                auto x = l->asInteger(), y = r->asInteger();
                switch (t.name[0]) {
                    case '+': return Value::integer(x + y);
                    case '-': return Value::integer(x - y);
                    case '*': return Value::integer(x * y);
                    default : return std::nullopt;
                }
            }
            case Term::Kind::Interval:
            case Term::Kind::Pool    : throw GroundingError("interval or pool in unsupported position: " + t.str());
        }
        return std::nullopt;
    }

    /// All values of `t`, expanding pools and intervals.
    std::vector<Value> expand(const Term& t, const Binding& b) const {
        switch (t.kind) {
            case Term::Kind::Pool: {
                std::vector<Value> out;
                for (const auto& a : t.args) {
                    auto xs = expand(a, b);
                    out.insert(out.end(), xs.begin(), xs.end());
                }
                return out;
            }
            case Term::Kind::Interval: {
                auto lo = eval(t.args[0], b), hi = eval(t.args[1], b);
                if (!lo || !hi || !lo->isInteger() || !hi->isInteger()) {
                    return {};
                }
                std::vector<Value> out;
                for (auto v = lo->asInteger(); v <= hi->asInteger(); ++v) {
                    out.push_back(Value::integer(v));
                }
                return out;
            }
            case Term::Kind::Function: {
                std::vector<std::vector<Value>> args{{}};
                for (const auto& a : t.args) {
                    std::vector<std::vector<Value>> next;
                    for (const auto& v : expand(a, b)) {
                        for (auto prefix : args) {
                            prefix.push_back(v);
                            next.push_back(std::move(prefix));
                        }
                    }
                    args = std::move(next);
                }
                std::vector<Value> out;
                for (auto& a : args) {
                    out.push_back(Value::function(t.name, std::move(a)));
                }
                return out;
            }
            default: {
                auto v = eval(t, b);
                return v ? std::vector<Value>{*v} : std::vector<Value>{};
            }
        }
    }

    static Atom toAtom(const Value& v) { return Atom::fromValue(v); }

    std::optional<Atom> evalAtom(const Term& t, const Binding& b) const {
        auto v = eval(t, b);
        if (!v || v->isInteger()) {
            return std::nullopt;
        }
        return toAtom(*v);
    }

    /// Matches `pattern` against `v`, extending `b`. Arithmetic subterms must be bound.
    bool match(const Term& pattern, const Value& v, Binding& b) const {
        switch (pattern.kind) {
            case Term::Kind::Variable: {
                auto [it, inserted] = b.emplace(pattern.name, v);
                return inserted || it->second == v;
            }
            case Term::Kind::Function:
                if (v.kind() != Value::Kind::Function || v.name() != pattern.name ||
                    v.args().size() != pattern.args.size()) {
                    return false;
                }
                for (std::size_t i = 0; i != pattern.args.size(); ++i) {
                    if (!match(pattern.args[i], v.args()[i], b)) {
                        return false;
                    }
                }
                return true;
            default: {
                auto w = eval(pattern, b);
                return w && *w == v;
            }
        }
    }

    /// True if every variable below an arithmetic subterm of `t` is bound.
    static bool matchable(const Term& t, const Binding& b) {
        if (t.kind == Term::Kind::Binary) {
            return bound(variables(t), b);
        }
        return std::all_of(t.args.begin(), t.args.end(), [&](const Term& a) { return matchable(a, b); });
    }

    const std::vector<Atom>& atomsLike(const Term& t) const {
        static const std::vector<Atom> none;
        auto it = byPredicate_.find({t.name, t.kind == Term::Kind::Function ? t.args.size() : 0});
        return it != byPredicate_.end() ? it->second : none;
    }

    /// Globals of an aggregate element set occurring outside it.
    static std::vector<std::string> aggregateGlobals(const Aggregate& a, const std::vector<std::string>& globals) {
        std::vector<std::string> out;
        for (const auto& e : a.elements) {
            for (auto& v : variables(e.literal)) {
                if (contains(globals, v)) {
                    addUnique(out, v);
                }
            }
            for (const auto& c : e.condition) {
                for (auto& v : variables(c)) {
                    if (contains(globals, v)) {
                        addUnique(out, v);
                    }
                }
            }
        }
        return out;
    }

    struct Item {
        const Literal*   literal   = nullptr;
        const Aggregate* aggregate = nullptr;
    };

    using Callback = std::function<void(const Binding&)>;

    /// Enumerates bindings satisfying the binding items: positive atoms over the
    /// domain, comparisons, and assignment aggregates.
    void enumerate(std::vector<Item> items, const Binding& b, const std::vector<std::string>& globals,
                   const Callback& f) const {
        if (items.empty()) {
            f(b);
            return;
        }
        auto take = [&](std::size_t i) {
            auto rest = items;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            return rest;
        };
        for (std::size_t i = 0; i != items.size(); ++i) {
            const auto* l = items[i].literal;
            if (l && l->kind == Literal::Kind::Comparison && bound(variables(*l), b)) {
                if (l->rhs.kind == Term::Kind::Interval || l->rhs.kind == Term::Kind::Pool) {
                    auto lhs = eval(l->lhs, b);
                    auto xs  = expand(l->rhs, b);
                    if (!lhs || l->op != CmpOp::Eq || std::find(xs.begin(), xs.end(), *lhs) == xs.end()) {
                        return;
                    }
                }
                else {
                    auto lhs = eval(l->lhs, b), rhs = eval(l->rhs, b);
                    if (!lhs || !rhs || !compare(*lhs, l->op, *rhs)) {
                        return;
                    }
                }
                enumerate(take(i), b, globals, f);
                return;
            }
        }
        for (std::size_t i = 0; i != items.size(); ++i) {
            const auto* l = items[i].literal;
            if (!l || l->kind != Literal::Kind::Comparison || l->op != CmpOp::Eq) {
                continue;
            }
            for (auto [var, other] : {std::pair{&l->lhs, &l->rhs}, std::pair{&l->rhs, &l->lhs}}) {
                if (var->kind == Term::Kind::Variable && b.count(var->name) == 0 && bound(variables(*other), b)) {
                    auto rest = take(i);
                    for (const auto& v : expand(*other, b)) {
                        auto c = b;
                        c.emplace(var->name, v);
                        enumerate(rest, c, globals, f);
                    }
                    return;
                }
            }
        }
        for (std::size_t i = 0; i != items.size(); ++i) {
            const auto* l = items[i].literal;
            if (!l || l->kind != Literal::Kind::Atom || l->negated || !matchable(l->atom, b)) {
                continue;
            }
            auto rest = take(i);
            for (const auto& a : atomsLike(l->atom)) {
                auto c = b;
                if (match(l->atom, a.toValue(), c)) {
                    enumerate(rest, c, globals, f);
                }
            }
            return;
        }
        for (std::size_t i = 0; i != items.size(); ++i) {
            const auto* a = items[i].aggregate;
            if (!a || !bound(aggregateGlobals(*a, globals), b)) {
                continue;
            }
            auto rest = take(i);
            auto agg  = groundAggregate(*a, b, globals);
            if (!agg) {
                return;
            }
            auto        hi  = agg->fixed + static_cast<std::int64_t>(agg->elements.size());
            const auto& lhs = *a->lower;
            if (lhs.kind == Term::Kind::Variable && b.count(lhs.name) == 0) {
                for (auto n = agg->fixed; n <= hi; ++n) {
                    auto c = b;
                    c.emplace(lhs.name, Value::integer(n));
                    enumerate(rest, c, globals, f);
                }
                return;
            }
            auto v = eval(lhs, b);
            if (v && v->isInteger() && v->asInteger() >= agg->fixed && v->asInteger() <= hi) {
                enumerate(rest, b, globals, f);
            }
            return;
        }
        std::string what;
        for (const auto& it : items) {
            what += (what.empty() ? "" : ", ") + (it.literal ? it.literal->str() : it.aggregate->str());
        }
        throw GroundingError("cannot bind variables in: " + what);
    }

    /// Ground elements of `a` under `b`; comparisons and atoms outside the domain
    /// are decided. Bounds are not evaluated. Returns nullopt if a bound is undefined.
    std::optional<CountAggregate> groundAggregate(const Aggregate& a, const Binding& b,
                                                  const std::vector<std::string>& globals,
                                                  GroundProgram* g = nullptr) const {
        CountAggregate out;
        for (const auto& e : a.elements) {
            std::vector<Item> cond;
            for (const auto& c : e.condition) {
                if (c.kind != Literal::Kind::Comparison) {
                    throw GroundingError("atoms in aggregate conditions are not supported: " + e.str());
                }
                cond.push_back({&c, nullptr});
            }
            if (e.literal.kind == Literal::Kind::Atom && !e.literal.negated) {
                cond.push_back({&e.literal, nullptr});
            }
            enumerate(cond, b, globals, [&](const Binding& c) {
                const auto& l = e.literal;
                if (l.kind == Literal::Kind::Comparison) {
                    auto lhs = eval(l.lhs, c), rhs = eval(l.rhs, c);
                    out.fixed += lhs && rhs && compare(*lhs, l.op, *rhs) ? 1 : 0;
                    return;
                }
                auto atom = evalAtom(l.atom, c);
                if (!atom) {
                    return;
                }
                bool known = domain_.count(*atom) != 0;
                if (l.negated && !known) {
                    ++out.fixed;
                }
                else if (known) {
                    out.elements.push_back(GroundLiteral{g ? g->intern(*atom) : AtomId{0}, l.negated});
                }
            });
        }
        return out;
    }

    std::vector<Item> bindingItems(const Statement& s) const {
        std::vector<Item> items;
        for (const auto& item : s.body) {
            if (const auto* l = std::get_if<Literal>(&item)) {
                if (!(l->kind == Literal::Kind::Atom && l->negated)) {
                    items.push_back({l, nullptr});
                }
            }
            else if (const auto& a = std::get<Aggregate>(item); a.assign) {
                items.push_back({nullptr, &a});
            }
        }
        return items;
    }

    std::vector<Atom> headAtoms(const Statement& s, const Binding& b, const std::vector<std::string>& globals) const {
        std::vector<Atom> out;
        if (s.kind != Statement::Kind::Rule) {
            return out;
        }
        if (s.head.kind == Head::Kind::Atom) {
            for (const auto& v : expand(s.head.atom, b)) {
                if (!v.isInteger()) {
                    out.push_back(toAtom(v));
                }
            }
        }
        else if (s.head.kind == Head::Kind::Choice) {
            for (const auto& e : s.head.choice.elements) {
                if (e.literal.kind != Literal::Kind::Atom || e.literal.negated) {
                    throw GroundingError("choice elements must be atoms: " + e.str());
                }
                std::vector<Item> cond;
                for (const auto& c : e.condition) {
                    if (c.kind != Literal::Kind::Comparison) {
                        throw GroundingError("atoms in choice conditions are not supported: " + e.str());
                    }
                    cond.push_back({&c, nullptr});
                }
                enumerate(cond, b, globals, [&](const Binding& c) {
                    for (const auto& v : expand(e.literal.atom, c)) {
                        if (!v.isInteger()) {
                            out.push_back(toAtom(v));
                        }
                    }
                });
            }
        }
        return out;
    }

    void collect(std::size_t i) {
        const auto& s = statements_[i];
        if (s.kind != Statement::Kind::Rule || s.head.kind == Head::Kind::None) {
            return;
        }
        const auto&       globals = info_[i].globals;
        std::vector<Atom> found;
        enumerate(bindingItems(s), {}, globals, [&](const Binding& b) {
            auto atoms = headAtoms(s, b, globals);
            found.insert(found.end(), atoms.begin(), atoms.end());
        });
        for (const auto& a : found) {
            addDomain(a);
        }
    }

    std::optional<std::int64_t> boundValue(const std::optional<Term>& t, const Binding& b) const {
        if (!t) {
            return std::nullopt;
        }
        auto v = eval(*t, b);
        if (!v || !v->isInteger()) {
            throw GroundingError("aggregate bound is not an integer: " + t->str());
        }
        return v->asInteger();
    }

    /// Ground body under `b`; nullopt if the body is false.
    std::optional<GroundBody> groundBody(const Statement& s, const Binding& b, const std::vector<std::string>& globals,
                                         GroundProgram& g) const {
        GroundBody out;
        for (const auto& item : s.body) {
            if (const auto* l = std::get_if<Literal>(&item)) {
                if (l->kind != Literal::Kind::Atom) {
                    continue;
                }
                auto atom = evalAtom(l->atom, b);
                if (!atom) {
                    return std::nullopt;
                }
                bool known = domain_.count(*atom) != 0;
                if (!l->negated) {
                    out.positive.push_back(g.intern(*atom));
                }
                else if (known) {
                    out.negative.push_back(g.intern(*atom));
                }
                continue;
            }
            const auto& a   = std::get<Aggregate>(item);
            auto        agg = groundAggregate(a, b, globals, &g);
            if (!agg) {
                return std::nullopt;
            }
            agg->lower = boundValue(a.lower, b);
            agg->upper = a.assign ? agg->lower : boundValue(a.upper, b);
            if (agg->elements.empty()) {
                if ((agg->lower && agg->fixed < *agg->lower) || (agg->upper && agg->fixed > *agg->upper)) {
                    return std::nullopt;
                }
                continue;
            }
            out.aggregates.push_back(std::move(*agg));
        }
        return out;
    }

    void instantiate(std::size_t i, GroundProgram& g) const {
        const auto& s       = statements_[i];
        const auto& globals = info_[i].globals;
        enumerate(bindingItems(s), {}, globals, [&](const Binding& b) {
            auto body = groundBody(s, b, globals, g);
            if (!body) {
                return;
            }
            if (s.kind == Statement::Kind::Weak) {
                auto w = eval(s.weight, b);
                if (!w || !w->isInteger()) {
                    throw GroundingError("weight is not an integer: " + s.str());
                }
                std::vector<Value> terms;
                for (const auto& t : s.terms) {
                    auto v = eval(t, b);
                    if (!v) {
                        return;
                    }
                    terms.push_back(*v);
                }
                g.weak.push_back(WeakConstraint{std::move(*body), w->asInteger(), std::move(terms)});
                return;
            }
            GroundRule r;
            r.body = std::move(*body);
            switch (s.head.kind) {
                case Head::Kind::None: g.rules.push_back(std::move(r)); break;
                case Head::Kind::Atom:
                    r.head = GroundRule::Head::Atom;
                    for (const auto& a : headAtoms(s, b, globals)) {
                        r.headAtoms = {g.intern(a)};
                        g.rules.push_back(r);
                    }
                    break;
                case Head::Kind::Choice:
                    r.head = GroundRule::Head::Choice;
                    for (const auto& a : headAtoms(s, b, globals)) {
                        r.headAtoms.push_back(g.intern(a));
                    }
                    r.lower = boundValue(s.head.choice.lower, b);
                    r.upper = boundValue(s.head.choice.upper, b);
                    g.rules.push_back(std::move(r));
                    break;
            }
        });
    }

    const std::vector<Statement>&                                     statements_;
    std::vector<StatementInfo>                                        info_;
    std::map<std::string, Value>                                      constants_;
    std::set<Atom>                                                    domain_;
    std::map<std::pair<std::string, std::size_t>, std::vector<Atom>> byPredicate_;
};

} // namespace

GroundProgram ground(const std::vector<Statement>& statements, const std::vector<Constant>& constants,
                     const std::vector<Atom>& facts) {
    return Grounder(statements, constants).run(facts);
}

GroundProgram ground(const Document& d, const std::vector<Atom>& facts) {
    return ground(d.statements, d.constants, facts);
}

} // namespace lpodc::asp
