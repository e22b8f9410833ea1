//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include <lpodc/translator.hpp>

#include <algorithm>
#include <set>

namespace lpodc {

using asp::Aggregate;
using asp::BodyItem;
using asp::CmpOp;
using asp::Document;
using asp::Element;
using asp::Head;
using asp::Layer;
using asp::Statement;
using asp::Term;
using Lit = asp::Literal;

namespace {

using Terms = std::vector<Term>;

Terms vars(const std::string& prefix, std::size_t m) {
    Terms out;
    for (std::size_t i = 1; i <= m; ++i) {
        out.push_back(Term::variable(prefix + std::to_string(i)));
    }
    return out;
}

Term var(const std::string& name) { return Term::variable(name); }
Term num(std::int64_t v) { return Term::integer(v); }

Term toTerm(const Value& v) {
    switch (v.kind()) {
        case Value::Kind::Integer: return Term::integer(v.asInteger());
        case Value::Kind::Symbol : return Term::symbol(v.name());
        case Value::Kind::Function: {
            Terms args;
            for (const auto& a : v.args()) {
                args.push_back(toTerm(a));
            }
            return Term::function(v.name(), std::move(args));
        }
    }
    return {};
}

Term fn(const std::string& name, Terms args) { return Term::function(name, std::move(args)); }

Terms concat(Terms a, const Terms& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// a(v) -> a(v, X1, ..., Xm).
Term extend(const Atom& a, const Terms& xs) {
    Terms args;
    for (const auto& v : a.args) {
        args.push_back(toTerm(v));
    }
    return fn(a.predicate, concat(std::move(args), xs));
}

BodyItem extend(const Literal& l, const Terms& xs) {
    return l.negated ? Lit::neg(extend(l.atom, xs)) : Lit::pos(extend(l.atom, xs));
}

std::vector<BodyItem> extend(const std::vector<Literal>& body, const Terms& xs) {
    std::vector<BodyItem> out;
    for (const auto& l : body) {
        out.push_back(extend(l, xs));
    }
    return out;
}

BodyItem pos(Term t) { return Lit::pos(std::move(t)); }
BodyItem neg(Term t) { return Lit::neg(std::move(t)); }
BodyItem cmp(Term l, CmpOp op, Term r) { return Lit::cmp(std::move(l), op, std::move(r)); }

Head atomHead(Term t) {
    Head h;
    h.kind = Head::Kind::Atom;
    h.atom = std::move(t);
    return h;
}

Statement rule(Head head, std::vector<BodyItem> body, std::string tag, Layer layer = Layer::Tuple) {
    Statement s;
    s.head  = std::move(head);
    s.body  = std::move(body);
    s.tag   = std::move(tag);
    s.layer = layer;
    return s;
}

Statement rule(Term head, std::vector<BodyItem> body, std::string tag, Layer layer = Layer::Tuple) {
    return rule(atomHead(std::move(head)), std::move(body), std::move(tag), layer);
}

Statement constraint(std::vector<BodyItem> body, std::string tag, Layer layer = Layer::Tuple) {
    return rule(Head{}, std::move(body), std::move(tag), layer);
}

std::vector<BodyItem> with(std::vector<BodyItem> front, const std::vector<BodyItem>& back) {
    front.insert(front.end(), back.begin(), back.end());
    return front;
}

Aggregate countAggregate(std::vector<Element> elements, std::optional<Term> lower, std::optional<Term> upper) {
    Aggregate a;
    a.lower    = std::move(lower);
    a.upper    = std::move(upper);
    a.elements = std::move(elements);
    return a;
}

Element element(Lit l, std::vector<Lit> condition = {}) { return Element{std::move(l), std::move(condition)}; }

/// `{ap(X1,...,Xm): X1=lo1..hi1, ...}.` and `:~ ap(X1,...,Xm). [-1, X1, ..., Xm]`.
void addApSelection(Document& d, const std::vector<std::pair<int, int>>& ranges) {
    auto            xs = vars("X", ranges.size());
    std::vector<Lit> cond;
    for (std::size_t i = 0; i != ranges.size(); ++i) {
        cond.push_back(Lit::cmp(xs[i], CmpOp::Eq, Term::interval(num(ranges[i].first), num(ranges[i].second))));
    }
    Head h;
    h.kind   = Head::Kind::Choice;
    h.choice = countAggregate({element(Lit::pos(fn("ap", xs)), std::move(cond))}, std::nullopt, std::nullopt);
    d.statements.push_back(rule(std::move(h), {}, std::string(kTagApChoice)));
    Statement w;
    w.kind   = Statement::Kind::Weak;
    w.body   = {pos(fn("ap", xs))};
    w.weight = num(-1);
    w.terms  = xs;
    w.tag    = std::string(kTagApWeak);
    d.statements.push_back(std::move(w));
}

/// Head of an extended regular rule. A choice over atoms that differ only in one
/// integer argument running through lo..hi is written `p(..., H, ...): H=lo..hi`.
Head regularHead(const Rule& r, const Terms& xs) {
    if (!r.choice) {
        return r.head.empty() ? Head{} : atomHead(extend(r.head.front(), xs));
    }
    Head h;
    h.kind = Head::Kind::Choice;
    auto bound = [](const std::optional<int>& b) { return b ? std::optional<Term>(num(*b)) : std::nullopt; };
    h.choice.lower = bound(r.choice->lower);
    h.choice.upper = bound(r.choice->upper);
    const auto& hs = r.head;
    if (hs.size() >= 2) {
        const auto& first = hs.front();
        for (std::size_t pos = 0; pos != first.args.size(); ++pos) {
            bool ok = first.args[pos].isInteger();
            for (std::size_t k = 0; ok && k != hs.size(); ++k) {
                const auto& a = hs[k];
                ok = a.predicate == first.predicate && a.args.size() == first.args.size() && a.args[pos].isInteger() &&
                     a.args[pos].asInteger() == first.args[pos].asInteger() + static_cast<std::int64_t>(k);
                for (std::size_t q = 0; ok && q != a.args.size(); ++q) {
                    ok = q == pos || a.args[q] == first.args[q];
                }
            }
            if (!ok) {
                continue;
            }
            Terms args;
            for (std::size_t q = 0; q != first.args.size(); ++q) {
                args.push_back(q == pos ? var("H") : toTerm(first.args[q]));
            }
            auto range = Term::interval(num(first.args[pos].asInteger()),
                                        num(first.args[pos].asInteger() + static_cast<std::int64_t>(hs.size()) - 1));
            h.choice.elements = {element(Lit::pos(fn(first.predicate, concat(std::move(args), xs))),
                                         {Lit::cmp(var("H"), CmpOp::Eq, std::move(range))})};
            return h;
        }
    }
    for (const auto& a : hs) {
        h.choice.elements.push_back(element(Lit::pos(extend(a, xs))));
    }
    return h;
}

void addRegular(Document& d, const Program& p, const Terms& xs) {
    for (const auto& r : p.rules) {
        if (r.kind == RuleKind::Regular) {
            d.statements.push_back(rule(regularHead(r, xs), with({pos(fn("ap", xs))}, extend(r.body, xs)), "regular"));
        }
    }
}

std::vector<const Rule*> orderedRules(const Program& p) {
    if (p.dialect != Dialect::Lpod) {
        throw std::invalid_argument("expected an LPOD program");
    }
    auto rules = p.indexed();
    if (rules.empty()) {
        throw DegenerateProgram("program has no ordered rules");
    }
    return rules;
}

Term body(int i, const Terms& xs) { return fn("body_" + std::to_string(i), xs); }

Term degree(const Term& p, const Terms& ds) { return fn("degree", concat({p}, ds)); }

/// `pAS(X) :- guard(X), {by(P, ap(X))}0.`
Statement pas(const Terms& xs, Term guard, const std::string& by) {
    auto agg = countAggregate({element(Lit::pos(fn(by, {var("P"), fn("ap", xs)})))}, std::nullopt, num(0));
    return rule(fn("pAS", xs), {pos(std::move(guard)), std::move(agg)}, "pAS", Layer::Preference);
}

/// `prf(P1,P2) :- X=0..maxdegree-1, prf2degree(P1,P2,X+1), X{equ2degree(P1,P2,Y): Y=1..X}.`
Statement prfByDegree() {
    auto x    = var("X");
    auto agg  = countAggregate({element(Lit::pos(fn("equ2degree", {var("P1"), var("P2"), var("Y")})),
                                        {Lit::cmp(var("Y"), CmpOp::Eq, Term::interval(num(1), x))})},
                               x, std::nullopt);
    auto body = std::vector<BodyItem>{
        cmp(x, CmpOp::Eq, Term::interval(num(0), Term::binary('-', Term::symbol("maxdegree"), num(1)))),
        pos(fn("prf2degree", {var("P1"), var("P2"), Term::binary('+', x, num(1))})), std::move(agg)};
    return rule(fn("prf", {var("P1"), var("P2")}), std::move(body), "prf", Layer::Preference);
}

} // namespace

int maxDegree(const Program& p) {
    int out = 0;
    for (const auto* r : p.indexed()) {
        if (r->isOrderedHead()) {
            out = std::max(out, static_cast<int>(r->head.size()));
        }
    }
    return out;
}

Document lpod2aspBase(const Program& p) {
    auto                             rules = orderedRules(p);
    auto                             m     = rules.size();
    auto                             xs    = vars("X", m);
    Document                         d;
    std::vector<std::pair<int, int>> ranges;
    for (const auto* r : rules) {
        ranges.emplace_back(0, static_cast<int>(r->head.size()));
    }
    addApSelection(d, ranges);
    addRegular(d, p, xs);
    auto ap = fn("ap", xs);
    for (const auto* r : rules) {
        auto i  = r->index;
        auto xi = xs[static_cast<std::size_t>(i - 1)];
        d.statements.push_back(rule(body(i, xs), with({pos(ap)}, extend(r->body, xs)), "body"));
        d.statements.push_back(constraint({pos(ap), cmp(xi, CmpOp::Eq, num(0)), pos(body(i, xs))}, "body-false"));
        d.statements.push_back(constraint({pos(ap), cmp(xi, CmpOp::Gt, num(0)), neg(body(i, xs))}, "body-true"));
        auto n = static_cast<int>(r->head.size());
        for (int j = 1; j <= n; ++j) {
            d.statements.push_back(rule(extend(r->head[static_cast<std::size_t>(j - 1)], xs),
                                        {pos(body(i, xs)), cmp(xi, CmpOp::Eq, num(j))}, "option"));
        }
        for (int j = 1; j <= n; ++j) {
            std::vector<BodyItem> b{pos(body(i, xs)), cmp(xi, CmpOp::Ne, num(j))};
            for (int k = 1; k < j; ++k) {
                b.push_back(neg(extend(r->head[static_cast<std::size_t>(k - 1)], xs)));
            }
            b.push_back(pos(extend(r->head[static_cast<std::size_t>(j - 1)], xs)));
            d.statements.push_back(constraint(std::move(b), "first-true"));
        }
    }
    auto             ds = vars("D", m);
    std::vector<Lit> cond;
    for (std::size_t i = 0; i != m; ++i) {
        cond.push_back(Lit::cmp(ds[i], CmpOp::Eq, Term::interval(num(1), num(static_cast<int>(rules[i]->head.size())))));
    }
    Head h;
    h.kind   = Head::Kind::Choice;
    h.choice = countAggregate({element(Lit::pos(degree(ap, ds)), std::move(cond))}, num(1), num(1));
    d.statements.push_back(rule(std::move(h), {pos(ap)}, "degree-choice"));
    for (std::size_t i = 0; i != m; ++i) {
        d.statements.push_back(
            constraint({pos(degree(ap, ds)), cmp(xs[i], CmpOp::Eq, num(0)), cmp(ds[i], CmpOp::Ne, num(1))},
                       "degree-unapplied"));
        d.statements.push_back(
            constraint({pos(degree(ap, ds)), cmp(xs[i], CmpOp::Gt, num(0)), cmp(ds[i], CmpOp::Ne, xs[i])},
                       "degree-applied"));
    }
    return d;
}

Document lpod2aspPreference(const Program& p, Criterion c) {
    auto     m  = orderedRules(p).size();
    auto     xs = vars("X", m);
    auto     ds = vars("D", m);
    auto     d1 = vars("D1", m);
    auto     d2 = vars("D2", m);
    auto     P = var("P"), P1 = var("P1"), P2 = var("P2"), X = var("X"), N = var("N");
    auto     pref = Layer::Preference;
    Document d;
    auto     maxdegree = Term::interval(num(1), Term::symbol("maxdegree"));
    switch (c) {
        case Criterion::Cardinality: {
            std::vector<Element> elems;
            for (const auto& di : ds) {
                elems.push_back(element(Lit::cmp(di, CmpOp::Eq, X)));
            }
            auto count   = countAggregate(std::move(elems), N, std::nullopt);
            count.assign = true;
            d.statements.push_back(rule(fn("card", {P, X, N}),
                                        {pos(degree(P, ds)), cmp(X, CmpOp::Eq, maxdegree), std::move(count)}, "card",
                                        pref));
            d.statements.push_back(rule(fn("equ2degree", {P1, P2, X}),
                                        {pos(fn("card", {P1, X, N})), pos(fn("card", {P2, X, N})),
                                         cmp(P1, CmpOp::Ne, P2)},
                                        "equ2degree", pref));
            d.statements.push_back(rule(fn("prf2degree", {P1, P2, X}),
                                        {pos(fn("card", {P1, X, var("N1")})), pos(fn("card", {P2, X, var("N2")})),
                                         cmp(var("N1"), CmpOp::Gt, var("N2"))},
                                        "prf2degree", pref));
            d.statements.push_back(prfByDegree());
            break;
        }
        case Criterion::Inclusion: {
            d.statements.push_back(rule(fn("even", {Term::pool({num(0), num(2)})}), {}, "even", pref));
            std::vector<BodyItem> equ{cmp(P1, CmpOp::Ne, P2), cmp(X, CmpOp::Eq, maxdegree), pos(degree(P1, d1)),
                                      pos(degree(P2, d2))};
            for (std::size_t i = 0; i != m; ++i) {
                auto count = countAggregate({element(Lit::cmp(d1[i], CmpOp::Eq, X)), element(Lit::cmp(d2[i], CmpOp::Eq, X))},
                                            var("C" + std::to_string(i + 1)), std::nullopt);
                count.assign = true;
                equ.push_back(std::move(count));
            }
            for (std::size_t i = 0; i != m; ++i) {
                equ.push_back(pos(fn("even", {var("C" + std::to_string(i + 1))})));
            }
            d.statements.push_back(rule(fn("equ2degree", {P1, P2, X}), std::move(equ), "equ2degree", pref));
            std::vector<BodyItem> prf{cmp(P1, CmpOp::Ne, P2), cmp(X, CmpOp::Eq, maxdegree),
                                      neg(fn("equ2degree", {P1, P2, X})), pos(degree(P1, d1)), pos(degree(P2, d2))};
            for (std::size_t i = 0; i != m; ++i) {
                prf.push_back(countAggregate(
                    {element(Lit::cmp(d1[i], CmpOp::Ne, X)), element(Lit::cmp(d2[i], CmpOp::Eq, X))}, std::nullopt,
                    num(1)));
            }
            d.statements.push_back(rule(fn("prf2degree", {P1, P2, X}), std::move(prf), "prf2degree", pref));
            d.statements.push_back(prfByDegree());
            break;
        }
        case Criterion::Pareto: {
            d.statements.push_back(
                rule(fn("equ", {P1, P2}), {pos(degree(P1, ds)), pos(degree(P2, ds))}, "equ", pref));
            std::vector<BodyItem> prf{pos(degree(P1, d1)), pos(degree(P2, d2)), neg(fn("equ", {P1, P2}))};
            for (std::size_t i = 0; i != m; ++i) {
                prf.push_back(cmp(d1[i], CmpOp::Le, d2[i]));
            }
            d.statements.push_back(rule(fn("prf", {P1, P2}), std::move(prf), "prf", pref));
            break;
        }
        case Criterion::PenaltySum: {
            auto total = ds.front();
            for (std::size_t i = 1; i != m; ++i) {
                total = Term::binary('+', std::move(total), ds[i]);
            }
            d.statements.push_back(
                rule(fn("sum", {P, N}), {pos(degree(P, ds)), cmp(N, CmpOp::Eq, std::move(total))}, "sum", pref));
            d.statements.push_back(rule(fn("prf", {P1, P2}),
                                        {pos(fn("sum", {P1, var("N1")})), pos(fn("sum", {P2, var("N2")})),
                                         cmp(var("N1"), CmpOp::Lt, var("N2"))},
                                        "prf", pref));
            break;
        }
    }
    d.statements.push_back(pas(xs, fn("ap", xs), "prf"));
    return d;
}

Document lpod2asp(const Program& p, Criterion c) {
    auto d = lpod2aspBase(p);
    d.constants.push_back(asp::Constant{"maxdegree", num(maxDegree(p))});
    auto block = lpod2aspPreference(p, c);
    d.statements.insert(d.statements.end(), block.statements.begin(), block.statements.end());
    return d;
}

Document crp2asp(const Program& p) {
    if (p.dialect != Dialect::Crp2) {
        throw std::invalid_argument("expected a CR-Prolog2 program");
    }
    auto                             rules = p.indexed();
    auto                             m     = rules.size();
    auto                             xs    = vars("X", m);
    auto                             ys    = vars("Y", m);
    auto                             ap    = fn("ap", xs);
    auto                             apY   = fn("ap", ys);
    auto                             pref  = Layer::Preference;
    Document                         d;
    std::vector<std::pair<int, int>> ranges;
    for (const auto* r : rules) {
        auto n = static_cast<int>(r->head.size());
        switch (r->kind) {
            case RuleKind::Cr       : ranges.emplace_back(0, 1); break;
            case RuleKind::OrderedCr: ranges.emplace_back(0, n); break;
            default                 : ranges.emplace_back(1, n); break;
        }
    }
    addApSelection(d, ranges);
    addRegular(d, p, xs);
    for (const auto* r : rules) {
        auto xi = xs[static_cast<std::size_t>(r->index - 1)];
        auto n  = r->kind == RuleKind::Cr ? 1 : static_cast<int>(r->head.size());
        for (int j = 1; j <= n; ++j) {
            auto b = with({pos(ap)}, extend(r->body, xs));
            b.push_back(cmp(xi, CmpOp::Eq, num(j)));
            d.statements.push_back(
                rule(extend(r->head[static_cast<std::size_t>(j - 1)], xs), std::move(b), r->kind == RuleKind::Cr ? "cr" : "option"));
        }
    }
    for (std::size_t i = 0; i != m; ++i) {
        d.statements.push_back(rule(fn("dominate", {ap, apY}),
                                    {pos(ap), pos(apY), cmp(num(0), CmpOp::Lt, xs[i]), cmp(xs[i], CmpOp::Lt, ys[i])},
                                    "dominate-atom", pref));
    }
    auto candidate = pas(xs, ap, "dominate");
    candidate.head = atomHead(fn("candidate", xs));
    candidate.tag  = "candidate";
    d.statements.push_back(std::move(candidate));
    std::vector<Element> differ;
    for (std::size_t i = 0; i != m; ++i) {
        differ.push_back(element(Lit::cmp(xs[i], CmpOp::Ne, ys[i])));
    }
    std::vector<BodyItem> less{pos(fn("candidate", xs)), pos(fn("candidate", ys)),
                               countAggregate(std::move(differ), num(1), std::nullopt)};
    for (std::size_t i = 0; i != m; ++i) {
        less.push_back(cmp(xs[i], CmpOp::Le, ys[i]));
    }
    d.statements.push_back(rule(fn("lessCrRulesApplied", {ap, apY}), std::move(less), "lessCrRulesApplied", pref));
    d.statements.push_back(pas(xs, fn("candidate", xs), "lessCrRulesApplied"));

    auto facts = p.preferIndices();
    if (facts.empty()) {
        return d;
    }
    auto R1 = var("R1"), R2 = var("R2"), R3 = var("R3"), R = var("R");
    for (auto [a, b] : facts) {
        d.statements.push_back(rule(fn("prefer", concat({num(a), num(b)}, xs)), {pos(ap)}, "prefer"));
    }
    d.statements.push_back(
        rule(fn("isPreferred", concat({R1, R2}, xs)), {pos(fn("prefer", concat({R1, R2}, xs)))}, "isPreferred"));
    d.statements.push_back(rule(fn("isPreferred", concat({R1, R3}, xs)),
                                {pos(fn("prefer", concat({R1, R2}, xs))), pos(fn("isPreferred", concat({R2, R3}, xs)))},
                                "isPreferred"));
    d.statements.push_back(constraint({pos(fn("isPreferred", concat({R, R}, xs)))}, "isPreferred-irreflexive"));
    std::set<std::pair<int, int>> closure(facts.begin(), facts.end());
    for (bool grown = true; grown;) {
        grown = false;
        for (auto [a, b] : std::set<std::pair<int, int>>(closure)) {
            for (auto [c, e] : std::set<std::pair<int, int>>(closure)) {
                if (b == c) {
                    grown = closure.insert({a, e}).second || grown;
                }
            }
        }
    }
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : closure) {
        if (a != b) {
            pairs.emplace_back(a, b);
        }
    }
    for (auto [a, b] : pairs) {
        d.statements.push_back(constraint({pos(fn("isPreferred", concat({num(a), num(b)}, xs))),
                                           cmp(xs[static_cast<std::size_t>(a - 1)], CmpOp::Gt, num(0)),
                                           cmp(xs[static_cast<std::size_t>(b - 1)], CmpOp::Gt, num(0))},
                                          "isPreferred-applied"));
    }
    for (auto [a, b] : pairs) {
        d.statements.push_back(rule(fn("dominate", {ap, apY}),
                                    {pos(ap), pos(apY), pos(fn("isPreferred", concat({num(a), num(b)}, xs))),
                                     pos(fn("isPreferred", concat({num(a), num(b)}, ys))),
                                     cmp(xs[static_cast<std::size_t>(a - 1)], CmpOp::Gt, num(0)),
                                     cmp(ys[static_cast<std::size_t>(b - 1)], CmpOp::Gt, num(0))},
                                    "dominate-rule", pref));
    }
    return d;
}

} // namespace lpodc
