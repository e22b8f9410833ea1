//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include <lpodc/lpod.hpp>
#include <lpodc/parallel.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lpodc {

std::string_view toString(Criterion c) {
    switch (c) {
        case Criterion::Cardinality: return "cardinality";
        case Criterion::Inclusion  : return "inclusion";
        case Criterion::Pareto     : return "pareto";
        case Criterion::PenaltySum : return "penalty-sum";
    }
    return "?";
}

std::optional<Criterion> criterionFromString(std::string_view s) {
    for (auto c : kCriteria) {
        if (toString(c) == s) {
            return c;
        }
    }
    return std::nullopt;
}

namespace {

std::vector<const Rule*> ordered(const Program& p) {
    auto rules = p.indexed();
    for (const auto* r : rules) {
        if (r->kind != RuleKind::Ordered) {
            throw std::invalid_argument("expected an LPOD program");
        }
    }
    return rules;
}

std::vector<Rule> regular(const Program& p) {
    std::vector<Rule> out;
    std::copy_if(p.rules.begin(), p.rules.end(), std::back_inserter(out),
                 [](const Rule& r) { return r.kind == RuleKind::Regular; });
    return out;
}

/// Calls f for every tuple with t[i] in [lo[i], hi[i]], last position fastest.
template <class F>
void forEachTuple(const std::vector<int>& lo, const std::vector<int>& hi, F&& f) {
    std::vector<int> t = lo;
    for (;;) {
        f(t);
        auto i = t.size();
        while (i != 0) {
            --i;
            if (t[i] < hi[i]) {
                ++t[i];
                break;
            }
            t[i] = lo[i];
            if (i == 0) {
                return;
            }
        }
        if (t.empty()) {
            return;
        }
    }
}

AtomSet project(const AtomSet& s, const AtomSet& sigma) {
    AtomSet out;
    std::set_intersection(s.begin(), s.end(), sigma.begin(), sigma.end(), std::inserter(out, out.end()));
    return out;
}

bool satisfies(const std::vector<Literal>& body, const AtomSet& s) {
    return std::all_of(body.begin(), body.end(), [&](const Literal& l) { return (s.count(l.atom) != 0) != l.negated; });
}

} // namespace

Rule option(const Rule& r, int i) {
    if (!r.isOrderedHead() || i < 1 || static_cast<std::size_t>(i) > r.head.size()) {
        throw std::out_of_range("option index out of range");
    }
    Rule out;
    out.head = {r.head[static_cast<std::size_t>(i - 1)]};
    out.body = r.body;
    for (int j = 0; j != i - 1; ++j) {
        out.body.push_back(Literal{r.head[static_cast<std::size_t>(j)], true});
    }
    return out;
}

std::vector<GroundProgram> splitPrograms(const Program& p) {
    auto             rules = ordered(p);
    std::vector<int> lo(rules.size(), 1), hi;
    for (const auto* r : rules) {
        hi.push_back(static_cast<int>(r->head.size()));
    }
    auto                       base = regular(p);
    std::vector<GroundProgram> out;
    forEachTuple(lo, hi, [&](const std::vector<int>& k) {
        GroundProgram g;
        g.addRules(base);
        for (std::size_t i = 0; i != rules.size(); ++i) {
            g.addRules({option(*rules[i], k[i])});
        }
        out.push_back(std::move(g));
    });
    return out;
}

Atom bodyAtom(int index) { return Atom("body_" + std::to_string(index)); }

std::vector<Rule> assumption(const Rule& r, int x) {
    if (!r.isOrderedHead() || x < 0 || static_cast<std::size_t>(x) > r.head.size()) {
        throw std::out_of_range("assumption degree out of range");
    }
    auto              body = bodyAtom(r.index);
    std::vector<Rule> out;
    Rule              def;
    def.head = {body};
    def.body = r.body;
    out.push_back(def);
    Rule guard;
    guard.body = {Literal{body, x > 0}};
    out.push_back(guard);
    if (x > 0) {
        Rule head;
        head.head = {r.head[static_cast<std::size_t>(x - 1)]};
        head.body = {Literal{body, false}};
        out.push_back(head);
    }
    for (std::size_t j = 1; j <= r.head.size(); ++j) {
        if (static_cast<int>(j) == x) {
            continue;
        }
        Rule first;
        first.body = {Literal{body, false}};
        for (std::size_t k = 1; k < j; ++k) {
            first.body.push_back(Literal{r.head[k - 1], true});
        }
        first.body.push_back(Literal{r.head[j - 1], false});
        out.push_back(first);
    }
    return out;
}

GroundProgram assumptionProgram(const Program& p, const AssumptionList& x) {
    auto rules = ordered(p);
    if (x.size() != rules.size()) {
        throw std::invalid_argument("assumption list has wrong length");
    }
    GroundProgram g;
    g.addRules(regular(p));
    for (std::size_t i = 0; i != rules.size(); ++i) {
        g.addRules(assumption(*rules[i], x[i]));
    }
    return g;
}

std::vector<AssumptionList> lpodAssumptionTuples(const Program& p) {
    auto             rules = ordered(p);
    std::vector<int> lo(rules.size(), 0), hi;
    for (const auto* r : rules) {
        hi.push_back(static_cast<int>(r->head.size()));
    }
    std::vector<AssumptionList> out;
    forEachTuple(lo, hi, [&](const std::vector<int>& t) { out.push_back(t); });
    return out;
}

DegreeList degreesFromAssumption(const AssumptionList& x) {
    DegreeList d;
    for (auto xi : x) {
        d.push_back(xi == 0 ? 1 : xi);
    }
    return d;
}

DegreeList degreesOf(const Program& p, const AtomSet& s) {
    DegreeList d;
    for (const auto* r : ordered(p)) {
        int deg = 1;
        if (satisfies(r->body, s)) {
            auto it = std::find_if(r->head.begin(), r->head.end(), [&](const Atom& a) { return s.count(a) != 0; });
            if (it != r->head.end()) {
                deg = static_cast<int>(it - r->head.begin()) + 1;
            }
        }
        d.push_back(deg);
    }
    return d;
}

std::vector<AtomSet> splitCandidates(const Program& p, const SolveOptions& opts) {
    auto                              programs = splitPrograms(p);
    auto                              sigma    = p.signature();
    std::vector<std::vector<AtomSet>> found(programs.size());
    parallelFor(programs.size(), opts.parallel, [&](std::size_t i) {
        for (const auto& s : answerSets(programs[i], opts.engine)) {
            found[i].push_back(project(s.atoms, sigma));
        }
    });
    std::set<AtomSet> all;
    for (const auto& f : found) {
        all.insert(f.begin(), f.end());
    }
    return {all.begin(), all.end()};
}

std::vector<Candidate> assumptionCandidates(const Program& p, const SolveOptions& opts) {
    auto                                tuples = lpodAssumptionTuples(p);
    auto                                sigma  = p.signature();
    std::vector<std::vector<Candidate>> found(tuples.size());
    parallelFor(tuples.size(), opts.parallel, [&](std::size_t i) {
        auto degrees = degreesFromAssumption(tuples[i]);
        for (const auto& s : answerSets(assumptionProgram(p, tuples[i]), opts.engine)) {
            Candidate c{project(s.atoms, sigma), degrees, tuples[i]};
            if (degreesOf(p, c.atoms) != degrees) {
                throw std::logic_error("degree mismatch for candidate " + toString(c.atoms));
            }
            found[i].push_back(std::move(c));
        }
    });
    std::vector<Candidate> out;
    for (auto& f : found) {
        out.insert(out.end(), f.begin(), f.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool preferredTo(const DegreeList& a, const DegreeList& b, Criterion c) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("degree lists differ in length");
    }
    auto maxDegree = 0;
    for (std::size_t i = 0; i != a.size(); ++i) {
        maxDegree = std::max({maxDegree, a[i], b[i]});
    }
    switch (c) {
        case Criterion::Cardinality:
            for (int deg = 1; deg <= maxDegree; ++deg) {
                auto na = std::count(a.begin(), a.end(), deg);
                auto nb = std::count(b.begin(), b.end(), deg);
                if (na != nb) {
                    return na > nb;
                }
            }
            return false;
        case Criterion::Inclusion:
            for (int deg = 1; deg <= maxDegree; ++deg) {
                bool same = true, bInA = true;
                for (std::size_t i = 0; i != a.size(); ++i) {
                    same = same && ((a[i] == deg) == (b[i] == deg));
                    bInA = bInA && (b[i] != deg || a[i] == deg);
                }
                if (!same) {
                    return bInA;
                }
            }
            return false;
        case Criterion::Pareto: {
            bool better = false;
            for (std::size_t i = 0; i != a.size(); ++i) {
                if (b[i] < a[i]) {
                    return false;
                }
                better = better || a[i] < b[i];
            }
            return better;
        }
        case Criterion::PenaltySum:
            return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    }
    return false;
}

Comparison compare(const Candidate& s1, const Candidate& s2, Criterion c) {
    if (preferredTo(s1.degrees, s2.degrees, c)) {
        return Comparison::FirstPreferred;
    }
    if (preferredTo(s2.degrees, s1.degrees, c)) {
        return Comparison::SecondPreferred;
    }
    return Comparison::Neither;
}

std::vector<Candidate> preferred(const std::vector<Candidate>& candidates, Criterion c) {
    std::vector<Candidate> out;
    for (const auto& s : candidates) {
        bool beaten = std::any_of(candidates.begin(), candidates.end(),
                                  [&](const Candidate& t) { return preferredTo(t.degrees, s.degrees, c); });
        if (!beaten) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<Candidate> preferred(const Program& p, Criterion c, const SolveOptions& opts) {
    return preferred(assumptionCandidates(p, opts), c);
}

std::vector<AtomSet> atomSets(const std::vector<Candidate>& candidates) {
    std::set<AtomSet> s;
    for (const auto& c : candidates) {
        s.insert(c.atoms);
    }
    return {s.begin(), s.end()};
}

} // namespace lpodc
