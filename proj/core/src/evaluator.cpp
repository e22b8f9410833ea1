//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include <lpodc/evaluator.hpp>
#include <lpodc/grounder.hpp>
#include <lpodc/parallel.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lpodc {

using asp::Document;
using asp::Layer;
using asp::Statement;

namespace {

bool isApChoice(const Statement& s) {
    if (s.tag == kTagApChoice) {
        return true;
    }
    return s.tag.empty() && s.kind == Statement::Kind::Rule && s.head.kind == asp::Head::Kind::Choice &&
           s.body.empty() && s.head.choice.elements.size() == 1 && s.head.choice.elements[0].literal.atom.name == "ap";
}

bool isApWeak(const Statement& s) {
    return s.tag == kTagApWeak || (s.tag.empty() && s.kind == Statement::Kind::Weak);
}

Atom apAtom(const AssumptionList& x) {
    std::vector<Value> args;
    for (auto v : x) {
        args.push_back(Value::integer(v));
    }
    return Atom("ap", std::move(args));
}

AssumptionList tupleOf(const std::vector<Value>& args) {
    AssumptionList x;
    for (const auto& v : args) {
        if (!v.isInteger()) {
            throw std::logic_error("non-integer assumption degree");
        }
        x.push_back(static_cast<int>(v.asInteger()));
    }
    return x;
}

std::vector<Statement> partialStatements(const Document& doc) {
    std::vector<Statement> out;
    for (const auto& s : doc.statements) {
        if (s.layer == Layer::Tuple && !isApChoice(s) && !isApWeak(s)) {
            out.push_back(s);
        }
    }
    return out;
}

/// Solves the partial program of every tuple.
std::vector<TupleEvaluation> evaluateTuples(const Document& doc, const SolveOptions& opts) {
    auto                         partial = partialStatements(doc);
    auto                         tuples  = selectableTuples(doc);
    std::vector<TupleEvaluation> found(tuples.size());
    parallelFor(tuples.size(), opts.parallel, [&](std::size_t i) {
        found[i].assumption = tuples[i];
        auto g              = asp::ground(partial, doc.constants, {apAtom(tuples[i])});
        for (auto& s : answerSets(g, opts.engine)) {
            found[i].answerSets.push_back(std::move(s.atoms));
        }
    });
    std::vector<TupleEvaluation> out;
    for (auto& f : found) {
        if (!f.answerSets.empty()) {
            out.push_back(std::move(f));
        }
    }
    return out;
}

void collectPredicates(const asp::Literal& l, std::set<std::string>& out) {
    if (l.kind == asp::Literal::Kind::Atom) {
        out.insert(l.atom.name);
    }
}

/// Predicates the preference layer reads but does not define.
std::set<std::string> interfacePredicates(const std::vector<Statement>& layer) {
    std::set<std::string> used, defined;
    for (const auto& s : layer) {
        if (s.head.kind == asp::Head::Kind::Atom) {
            defined.insert(s.head.atom.name);
        }
        for (const auto& item : s.body) {
            if (const auto* l = std::get_if<asp::Literal>(&item)) {
                collectPredicates(*l, used);
            }
            else {
                for (const auto& e : std::get<asp::Aggregate>(item).elements) {
                    collectPredicates(e.literal, used);
                }
            }
        }
    }
    std::set<std::string> out;
    std::set_difference(used.begin(), used.end(), defined.begin(), defined.end(), std::inserter(out, out.end()));
    return out;
}

/// Interface atoms of every consistent tuple. They must agree across the answer
/// sets of a tuple.
std::vector<Atom> interfaceFacts(const std::vector<TupleEvaluation>& tuples, const std::set<std::string>& preds) {
    std::vector<Atom> out;
    for (const auto& t : tuples) {
        std::optional<AtomSet> shared;
        for (const auto& s : t.answerSets) {
            AtomSet part;
            std::copy_if(s.begin(), s.end(), std::inserter(part, part.end()),
                         [&](const Atom& a) { return preds.count(a.predicate) != 0; });
            if (shared && *shared != part) {
                throw std::logic_error("answer sets of tuple " + apAtom(t.assumption).str() +
                                       " disagree on atoms read by the preference layer");
            }
            shared = std::move(part);
        }
        out.insert(out.end(), shared->begin(), shared->end());
    }
    return out;
}

/// Grounds and solves the preference layer over the interface facts; the layer is
/// stratified, so there is exactly one answer set.
AtomSet encodedPreference(const Document& doc, const std::vector<TupleEvaluation>& tuples,
                          const EngineOptions& opts) {
    auto layer = doc.layer(Layer::Preference);
    auto g     = asp::ground(layer, doc.constants, interfaceFacts(tuples, interfacePredicates(layer)));
    auto sets  = answerSets(g, opts);
    if (sets.size() != 1) {
        throw std::logic_error("preference layer has " + std::to_string(sets.size()) + " answer sets");
    }
    return sets.front().atoms;
}

std::vector<AssumptionList> tuplesOf(const AtomSet& s, const std::string& predicate) {
    std::vector<AssumptionList> out;
    for (const auto& a : s) {
        if (a.predicate == predicate) {
            out.push_back(tupleOf(a.args));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t constantValue(const Document& doc, const std::string& name) {
    for (const auto& c : doc.constants) {
        if (c.name == name && c.value.kind == asp::Term::Kind::Integer) {
            return c.value.value;
        }
    }
    throw std::invalid_argument("document does not define " + name);
}

/// Degree list of tuple x, read from its degree atom.
DegreeList degreeAtom(const TupleEvaluation& t) {
    auto ap = apAtom(t.assumption).toValue();
    for (const auto& a : t.answerSets.front()) {
        if (a.predicate == "degree" && !a.args.empty() && a.args.front() == ap) {
            return tupleOf({a.args.begin() + 1, a.args.end()});
        }
    }
    throw std::logic_error("no degree atom for " + apAtom(t.assumption).str());
}

/// prf over degree lists as defined by the rule block of each criterion.
bool nativePrf(const DegreeList& d1, const DegreeList& d2, bool distinct, Criterion c, std::int64_t maxdegree) {
    auto m     = d1.size();
    auto count = [&](const DegreeList& d, std::int64_t x) { return std::count(d.begin(), d.end(), x); };
    switch (c) {
        case Criterion::Cardinality:
        case Criterion::Inclusion: {
            auto equ2degree = [&](std::int64_t x) {
                if (!distinct) {
                    return false;
                }
                if (c == Criterion::Cardinality) {
                    return count(d1, x) == count(d2, x);
                }
                for (std::size_t i = 0; i != m; ++i) {
                    if ((d1[i] == x) != (d2[i] == x)) {
                        return false;
                    }
                }
                return true;
            };
            auto prf2degree = [&](std::int64_t x) {
                if (c == Criterion::Cardinality) {
                    return count(d1, x) > count(d2, x);
                }
                if (!distinct || equ2degree(x)) {
                    return false;
                }
                for (std::size_t i = 0; i != m; ++i) {
                    if (d2[i] == x && d1[i] != x) {
                        return false;
                    }
                }
                return true;
            };
            for (std::int64_t x = 0; x <= maxdegree - 1; ++x) {
                std::int64_t equal = 0;
                for (std::int64_t y = 1; y <= x; ++y) {
                    equal += equ2degree(y) ? 1 : 0;
                }
                if (prf2degree(x + 1) && equal >= x) {
                    return true;
                }
            }
            return false;
        }
        case Criterion::Pareto: {
            if (d1 == d2) {
                return false;
            }
            for (std::size_t i = 0; i != m; ++i) {
                if (d1[i] > d2[i]) {
                    return false;
                }
            }
            return true;
        }
        case Criterion::PenaltySum: {
            std::int64_t s1 = 0, s2 = 0;
            for (std::size_t i = 0; i != m; ++i) {
                s1 += d1[i];
                s2 += d2[i];
            }
            return s1 < s2;
        }
    }
    return false;
}

std::vector<AssumptionList> consistent(const std::vector<TupleEvaluation>& tuples) {
    std::vector<AssumptionList> out;
    for (const auto& t : tuples) {
        out.push_back(t.assumption);
    }
    return out;
}

/// isPreferred(r1, r2) pairs of tuple t.
std::set<std::pair<Value, Value>> isPreferredPairs(const TupleEvaluation& t) {
    std::set<std::pair<Value, Value>> out;
    for (const auto& a : t.answerSets.front()) {
        if (a.predicate == "isPreferred" && a.args.size() == 2 + t.assumption.size()) {
            out.emplace(a.args[0], a.args[1]);
        }
    }
    return out;
}

bool applied(const AssumptionList& x, const Value& r) {
    if (!r.isInteger() || r.asInteger() < 1 || static_cast<std::size_t>(r.asInteger()) > x.size()) {
        return false;
    }
    return x[static_cast<std::size_t>(r.asInteger() - 1)] > 0;
}

} // namespace

std::vector<AssumptionList> selectableTuples(const Document& doc) {
    std::vector<Statement> choice;
    std::copy_if(doc.statements.begin(), doc.statements.end(), std::back_inserter(choice), isApChoice);
    if (choice.size() != 1) {
        throw std::invalid_argument("document has no unique ap choice");
    }
    auto                     g = asp::ground(choice, doc.constants, {});
    std::set<AssumptionList> out;
    for (const auto& r : g.rules) {
        for (auto id : r.headAtoms) {
            out.insert(tupleOf(g.atom(id).args));
        }
    }
    return {out.begin(), out.end()};
}

GroundProgram tupleProgram(const Document& doc, const AssumptionList& x) {
    return asp::ground(partialStatements(doc), doc.constants, {apAtom(x)});
}

const TupleEvaluation* EvaluatedTranslation::find(const AssumptionList& x) const {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), x,
                               [](const TupleEvaluation& t, const AssumptionList& y) { return t.assumption < y; });
    return it != tuples.end() && it->assumption == x ? &*it : nullptr;
}

AtomSet shrink(const AtomSet& s, const AssumptionList& x, const AtomSet& sigma) {
    AtomSet out;
    for (const auto& a : s) {
        if (a.args.size() < x.size()) {
            continue;
        }
        auto cut = a.args.size() - x.size();
        bool ok  = true;
        for (std::size_t i = 0; ok && i != x.size(); ++i) {
            ok = a.args[cut + i] == Value::integer(x[i]);
        }
        if (!ok) {
            continue;
        }
        Atom b(a.predicate, {a.args.begin(), a.args.begin() + static_cast<std::ptrdiff_t>(cut)});
        if (sigma.count(b) != 0) {
            out.insert(std::move(b));
        }
    }
    return out;
}

EvaluatedTranslation evalLpod(const Document& doc, const Program& p, Criterion c, const EvalOptions& opts) {
    (void)p;
    EvaluatedTranslation e;
    e.tuples     = evaluateTuples(doc, opts.solve);
    e.candidates = consistent(e.tuples);
    if (opts.route == PreferenceRoute::Encoded) {
        e.preference = encodedPreference(doc, e.tuples, opts.solve.engine);
        e.preferred  = tuplesOf(e.preference, "pAS");
        return e;
    }
    auto                    maxdegree = constantValue(doc, "maxdegree");
    std::vector<DegreeList> degrees;
    for (const auto& t : e.tuples) {
        degrees.push_back(degreeAtom(t));
    }
    for (std::size_t j = 0; j != e.tuples.size(); ++j) {
        bool beaten = false;
        for (std::size_t i = 0; i != e.tuples.size() && !beaten; ++i) {
            beaten = nativePrf(degrees[i], degrees[j], i != j, c, maxdegree);
        }
        if (!beaten) {
            e.preferred.push_back(e.tuples[j].assumption);
        }
    }
    return e;
}

EvaluatedTranslation evalCrp(const Document& doc, const Program& p, const EvalOptions& opts) {
    (void)p;
    EvaluatedTranslation e;
    e.tuples = evaluateTuples(doc, opts.solve);
    if (opts.route == PreferenceRoute::Encoded) {
        e.preference = encodedPreference(doc, e.tuples, opts.solve.engine);
        e.candidates = tuplesOf(e.preference, "candidate");
        e.preferred  = tuplesOf(e.preference, "pAS");
        return e;
    }
    auto n = e.tuples.size();
    std::vector<std::set<std::pair<Value, Value>>> prefs;
    for (const auto& t : e.tuples) {
        prefs.push_back(isPreferredPairs(t));
    }
    auto dominates = [&](std::size_t i, std::size_t j) {
        const auto& x = e.tuples[i].assumption;
        const auto& y = e.tuples[j].assumption;
        for (std::size_t k = 0; k != x.size(); ++k) {
            if (0 < x[k] && x[k] < y[k]) {
                return true;
            }
        }
        for (const auto& pr : prefs[i]) {
            if (prefs[j].count(pr) != 0 && applied(x, pr.first) && applied(y, pr.second)) {
                return true;
            }
        }
        return false;
    };
    std::vector<std::size_t> cands;
    for (std::size_t j = 0; j != n; ++j) {
        bool dominated = false;
        for (std::size_t i = 0; i != n && !dominated; ++i) {
            dominated = dominates(i, j);
        }
        if (!dominated) {
            cands.push_back(j);
        }
    }
    auto less = [&](const AssumptionList& x, const AssumptionList& y) {
        return x != y && std::equal(x.begin(), x.end(), y.begin(), [](int a, int b) { return a <= b; });
    };
    for (auto j : cands) {
        const auto& y = e.tuples[j].assumption;
        e.candidates.push_back(y);
        if (std::none_of(cands.begin(), cands.end(), [&](std::size_t i) { return less(e.tuples[i].assumption, y); })) {
            e.preferred.push_back(y);
        }
    }
    return e;
}

std::vector<Candidate> lpodCandidates(const EvaluatedTranslation& e, const Program& p) {
    auto                   sigma = p.signature();
    std::vector<Candidate> out;
    for (const auto& t : e.tuples) {
        auto degrees = degreeAtom(t);
        for (const auto& s : t.answerSets) {
            out.push_back(Candidate{shrink(s, t.assumption, sigma), degrees, t.assumption});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Candidate> lpodPreferred(const EvaluatedTranslation& e, const Program& p) {
    std::vector<Candidate> out;
    for (auto& c : lpodCandidates(e, p)) {
        if (std::binary_search(e.preferred.begin(), e.preferred.end(), c.assumption)) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<AtomSet> onSigma(const EvaluatedTranslation& e, const std::vector<AssumptionList>& tuples,
                             const Program& p) {
    auto              sigma = p.signature();
    std::set<AtomSet> out;
    for (const auto& x : tuples) {
        const auto* t = e.find(x);
        if (!t) {
            throw std::logic_error("tuple " + apAtom(x).str() + " is not consistent");
        }
        for (const auto& s : t->answerSets) {
            out.insert(shrink(s, x, sigma));
        }
    }
    return {out.begin(), out.end()};
}

std::vector<AtomSet> generalizedOnSigma(const EvaluatedTranslation& e, const Program& p) {
    return onSigma(e, consistent(e.tuples), p);
}

std::vector<AnswerSet> solveMonolithic(const Document& doc, const EngineOptions& opts) {
    return optimalAnswerSets(asp::ground(doc), opts);
}

} // namespace lpodc
