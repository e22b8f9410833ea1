//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include <lpodc/crp.hpp>
#include <lpodc/parallel.hpp>

#include <algorithm>
#include <stdexcept>

namespace lpodc {

Value choiceTerm(int rule, int position) {
    return Value::function("choice", {Value::integer(rule), Value::integer(position)});
}

Atom applRule(int index) { return Atom("appl", {Value::integer(index)}); }

Atom applChoice(int rule, int position) { return Atom("appl", {choiceTerm(rule, position)}); }

namespace {

Atom fired(int index) { return Atom("fired", {Value::integer(index)}); }
Atom prefer(const Value& a, const Value& b) { return Atom("prefer", {a, b}); }
Atom isPreferred(const Value& a, const Value& b) { return Atom("isPreferred", {a, b}); }

void requireCrp(const Program& p) {
    if (p.dialect != Dialect::Crp2) {
        throw std::invalid_argument("expected a CR-Prolog2 program");
    }
}

/// Rule indices of cr-rules and ordered cr-rules plus all choice(r,j) terms.
std::vector<Value> preferTerms(const Program& p) {
    std::vector<Value> out;
    for (const auto* r : p.indexed()) {
        if (r->isConsistencyRestoring()) {
            out.push_back(Value::integer(r->index));
        }
    }
    for (const auto* r : p.indexed()) {
        if (r->isOrderedHead()) {
            for (std::size_t j = 1; j <= r->head.size(); ++j) {
                out.push_back(choiceTerm(r->index, static_cast<int>(j)));
            }
        }
    }
    return out;
}

/// isPreferred closure over the prefer facts `facts`, grounded over `terms`. Rules
/// whose prefer atom is not a fact can never fire and are left out.
void addClosure(GroundProgram& g, const std::vector<std::pair<Value, Value>>& facts, const std::vector<Value>& terms) {
    for (const auto& [a, b] : facts) {
        g.fact(prefer(a, b));
        g.rule(isPreferred(a, b), {Literal{prefer(a, b), false}});
        for (const auto& c : terms) {
            g.rule(isPreferred(a, c), {Literal{prefer(a, b), false}, Literal{isPreferred(b, c), false}});
        }
    }
    for (const auto& r : terms) {
        g.constraint({Literal{isPreferred(r, r), false}});
    }
}

AtomSet project(const AtomSet& s, const AtomSet& sigma) {
    AtomSet out;
    std::set_intersection(s.begin(), s.end(), sigma.begin(), sigma.end(), std::inserter(out, out.end()));
    return out;
}

AtomSet applPart(const AtomSet& s) {
    AtomSet out;
    for (const auto& a : s) {
        if (a.predicate == "appl") {
            out.insert(a);
        }
    }
    return out;
}

std::vector<std::pair<Value, Value>> indexPreferFacts(const Program& p) {
    std::vector<std::pair<Value, Value>> out;
    for (auto [a, b] : p.preferIndices()) {
        out.emplace_back(Value::integer(a), Value::integer(b));
    }
    return out;
}

} // namespace

GroundProgram buildHpi(const Program& p, OrderedChoice choice) {
    requireCrp(p);
    GroundProgram g;
    auto          facts = indexPreferFacts(p);
    for (const auto& r : p.rules) {
        if (r.kind == RuleKind::Regular) {
            g.addRules({r});
            continue;
        }
        auto body = r.body;
        if (r.isConsistencyRestoring()) {
            body.push_back(Literal{applRule(r.index), false});
        }
        if (!r.isOrderedHead()) {
            g.rule(r.head.front(), body);
            continue;
        }
        auto n = static_cast<int>(r.head.size());
        for (int j = 1; j <= n; ++j) {
            auto withChoice = body;
            withChoice.push_back(Literal{applChoice(r.index, j), false});
            g.rule(r.head[static_cast<std::size_t>(j - 1)], withChoice);
            g.rule(fired(r.index), {Literal{applChoice(r.index, j), false}});
            if (j < n) {
                facts.emplace_back(choiceTerm(r.index, j), choiceTerm(r.index, j + 1));
            }
        }
        auto unfired = body;
        unfired.push_back(Literal{fired(r.index), true});
        g.constraint(unfired);
        if (choice == OrderedChoice::Required && r.kind == RuleKind::Ordered) {
            g.constraint({Literal{fired(r.index), true}});
        }
    }
    auto terms = preferTerms(p);
    addClosure(g, facts, terms);
    for (const auto& r1 : terms) {
        for (const auto& r2 : terms) {
            g.constraint({Literal{Atom("appl", {r1}), false}, Literal{Atom("appl", {r2}), false},
                          Literal{isPreferred(r1, r2), false}});
        }
    }
    for (const auto& a : applAtoms(p)) {
        g.intern(a);
    }
    return g;
}

std::vector<Atom> applAtoms(const Program& p) {
    std::vector<Atom> out;
    for (const auto& t : preferTerms(p)) {
        out.emplace_back("appl", std::vector<Value>{t});
    }
    return out;
}

std::vector<AtomSet> applSelections(const Program& p) {
    requireCrp(p);
    std::vector<AtomSet> out{AtomSet{}};
    for (const auto* r : p.indexed()) {
        std::vector<AtomSet> next;
        auto                 n = static_cast<int>(r->head.size());
        for (const auto& a : out) {
            switch (r->kind) {
                case RuleKind::Cr: {
                    next.push_back(a);
                    auto b = a;
                    b.insert(applRule(r->index));
                    next.push_back(std::move(b));
                    break;
                }
                case RuleKind::OrderedCr:
                    next.push_back(a);
                    for (int j = 0; j <= n; ++j) {
                        auto b = a;
                        b.insert(applRule(r->index));
                        if (j > 0) {
                            b.insert(applChoice(r->index, j));
                        }
                        next.push_back(std::move(b));
                    }
                    break;
                default:
                    for (int j = 0; j <= n; ++j) {
                        auto b = a;
                        if (j > 0) {
                            b.insert(applChoice(r->index, j));
                        }
                        next.push_back(std::move(b));
                    }
                    break;
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<AtomSet> generalizedAnswerSets(const Program& p, const SolveOptions& opts, OrderedChoice choice) {
    auto                              hpi        = buildHpi(p, choice);
    auto                              selections = applSelections(p);
    std::vector<std::vector<AtomSet>> found(selections.size());
    parallelFor(selections.size(), opts.parallel, [&](std::size_t i) {
        auto g = hpi;
        for (const auto& a : selections[i]) {
            g.fact(a);
        }
        for (auto& s : answerSets(g, opts.engine)) {
            found[i].push_back(std::move(s.atoms));
        }
    });
    std::set<AtomSet> all;
    for (const auto& f : found) {
        all.insert(f.begin(), f.end());
    }
    return {all.begin(), all.end()};
}

bool dominates(const AtomSet& s1, const AtomSet& s2) {
    for (const auto& a : s1) {
        if (a.predicate != "isPreferred" || a.args.size() != 2 || s2.count(a) == 0) {
            continue;
        }
        if (s1.count(Atom("appl", {a.args[0]})) != 0 && s2.count(Atom("appl", {a.args[1]})) != 0) {
            return true;
        }
    }
    return false;
}

std::vector<AtomSet> candidateAnswerSets(const std::vector<AtomSet>& generalized) {
    std::vector<AtomSet> out;
    for (const auto& s : generalized) {
        bool dominated = std::any_of(generalized.begin(), generalized.end(),
                                     [&](const AtomSet& t) { return &t != &s && dominates(t, s); });
        if (!dominated) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<AtomSet> minimalCandidates(const std::vector<AtomSet>& candidates) {
    std::vector<AtomSet> appl;
    for (const auto& c : candidates) {
        appl.push_back(applPart(c));
    }
    std::vector<AtomSet> out;
    for (std::size_t i = 0; i != candidates.size(); ++i) {
        bool smaller = false;
        for (std::size_t j = 0; j != candidates.size() && !smaller; ++j) {
            smaller = appl[j].size() < appl[i].size() &&
                      std::includes(appl[i].begin(), appl[i].end(), appl[j].begin(), appl[j].end());
        }
        if (!smaller) {
            out.push_back(candidates[i]);
        }
    }
    return out;
}

std::vector<AtomSet> projectAll(const Program& p, const std::vector<AtomSet>& sets) {
    auto              sigma = p.signature();
    std::set<AtomSet> out;
    for (const auto& s : sets) {
        out.insert(project(s, sigma));
    }
    return {out.begin(), out.end()};
}

std::vector<AtomSet> preferredAnswerSets(const Program& p, const SolveOptions& opts, OrderedChoice choice) {
    return projectAll(p, minimalCandidates(candidateAnswerSets(generalizedAnswerSets(p, opts, choice))));
}

std::vector<AssumptionList> crpAssumptionTuples(const Program& p) {
    requireCrp(p);
    std::vector<AssumptionList> out{AssumptionList{}};
    for (const auto* r : p.indexed()) {
        int lo = r->kind == RuleKind::Ordered ? 1 : 0;
        int hi = r->kind == RuleKind::Cr ? 1 : static_cast<int>(r->head.size());
        std::vector<AssumptionList> next;
        for (const auto& t : out) {
            for (int v = lo; v <= hi; ++v) {
                auto u = t;
                u.push_back(v);
                next.push_back(std::move(u));
            }
        }
        out = std::move(next);
    }
    return out;
}

GroundProgram crpAssumptionProgram(const Program& p, const AssumptionList& x) {
    requireCrp(p);
    auto rules = p.indexed();
    if (x.size() != rules.size()) {
        throw std::invalid_argument("assumption list has wrong length");
    }
    GroundProgram g;
    for (const auto& r : p.rules) {
        if (r.kind == RuleKind::Regular) {
            g.addRules({r});
            continue;
        }
        auto xi = x[static_cast<std::size_t>(r.index - 1)];
        if (xi == 0) {
            continue;
        }
        g.rule(r.isOrderedHead() ? r.head[static_cast<std::size_t>(xi - 1)] : r.head.front(), r.body);
    }
    std::vector<Value> terms;
    for (const auto* r : rules) {
        if (r->isConsistencyRestoring()) {
            terms.push_back(Value::integer(r->index));
        }
    }
    addClosure(g, indexPreferFacts(p), terms);
    for (const auto& r1 : terms) {
        for (const auto& r2 : terms) {
            if (x[static_cast<std::size_t>(r1.asInteger() - 1)] > 0 && x[static_cast<std::size_t>(r2.asInteger() - 1)] > 0) {
                g.constraint({Literal{isPreferred(r1, r2), false}});
            }
        }
    }
    return g;
}

std::vector<TupleAnswerSets> crpAssumptionAnswerSets(const Program& p, const SolveOptions& opts) {
    auto                         tuples = crpAssumptionTuples(p);
    std::vector<TupleAnswerSets> found(tuples.size());
    parallelFor(tuples.size(), opts.parallel, [&](std::size_t i) {
        found[i].assumption = tuples[i];
        for (auto& s : answerSets(crpAssumptionProgram(p, tuples[i]), opts.engine)) {
            found[i].answerSets.push_back(std::move(s.atoms));
        }
    });
    std::vector<TupleAnswerSets> out;
    for (auto& f : found) {
        if (!f.answerSets.empty()) {
            out.push_back(std::move(f));
        }
    }
    return out;
}

} // namespace lpodc
