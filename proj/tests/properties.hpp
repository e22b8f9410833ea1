//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#pragma once

#include "support.hpp"

#include <algorithm>

namespace lpodc::test {

struct PropertyResult {
    std::size_t              programs = 0;
    std::size_t              checks   = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

inline bool satisfies(const AtomSet& s, const std::vector<Literal>& body) {
    return std::all_of(body.begin(), body.end(),
                       [&](const Literal& l) { return (s.count(l.atom) != 0) != l.negated; });
}

inline GroundProgram groundOf(const std::vector<Rule>& rules, const std::vector<Atom>& sigma) {
    GroundProgram g;
    for (const auto& a : sigma) {
        g.intern(a);
    }
    g.addRules(rules);
    return g;
}

inline std::string show(const std::vector<Rule>& rules) {
    std::string out;
    for (const auto& r : rules) {
        out += renderRule(r) + " ";
    }
    return out;
}

/// Rule-addition and rule-removal invariants of answer sets, and the 1-1
/// correspondence for definitions over fresh atoms, on random ground programs.
inline PropertyResult engineInvariants(std::size_t programs, std::uint64_t seed = kGroundSeed) {
    std::mt19937_64 rng(seed);
    PropertyResult  res;
    EngineOptions   unlimitedEngine;
    unlimitedEngine.cap = 0;
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    auto coin = [&] { return std::bernoulli_distribution(0.5)(rng); };

    for (std::size_t i = 0; i != programs; ++i, ++res.programs) {
        auto              rules = randomRegularRules(rng);
        std::set<Atom>    sig{Atom("p0")};
        for (const auto& r : rules) {
            sig.insert(r.head.begin(), r.head.end());
            for (const auto& l : r.body) {
                sig.insert(l.atom);
            }
        }
        std::vector<Atom> sigma(sig.begin(), sig.end());
        auto              base = groundOf(rules, sigma);
        auto              sets = answerSets(base, unlimitedEngine);
        auto fail = [&](const std::string& what) { res.failures.push_back(what + " in: " + show(rules)); };
        auto expect = [&](bool cond, const std::string& what) {
            ++res.checks;
            if (!cond) {
                fail(what);
            }
        };
        auto randomBody = [&] {
            std::vector<Literal> body;
            for (auto k = pick(3); k != 0; --k) {
                body.push_back(Literal{sigma[pick(sigma.size())], coin()});
            }
            return body;
        };
        auto falsified = [&](const AtomSet& s) {
            auto body = randomBody();
            if (satisfies(s, body)) {
                const auto& a = sigma[pick(sigma.size())];
                body.push_back(Literal{a, s.count(a) != 0});
            }
            return body;
        };

        auto reference = base;
        EngineOptions subsets = unlimitedEngine;
        subsets.strategy      = EngineOptions::Strategy::Subsets;
        expect(answerSets(reference, subsets) == sets, "search strategies disagree");

        for (const auto& as : sets) {
            const auto& s = as.atoms;
            expect(isAnswerSet(base, s), "returned set is not an answer set");
            if (!s.empty()) {
                std::vector<Atom> members(s.begin(), s.end());
                Rule              r;
                r.head.push_back(members[pick(members.size())]);
                r.body     = randomBody();
                auto extra = rules;
                extra.push_back(r);
                expect(isAnswerSet(groundOf(extra, sigma), s), "(a) adding a rule with a true head");
            }
            {
                Rule r;
                r.body = falsified(s);
                if (coin()) {
                    r.head.push_back(sigma[pick(sigma.size())]);
                }
                else {
                    r.head   = {sigma[pick(sigma.size())], sigma[pick(sigma.size())]};
                    r.choice = ChoiceBounds{};
                    if (r.head[0] == r.head[1]) {
                        r.head.pop_back();
                    }
                }
                auto extra = rules;
                extra.push_back(r);
                expect(isAnswerSet(groundOf(extra, sigma), s), "(b) adding a rule with a false body");
            }
            for (std::size_t k = 0; k != rules.size(); ++k) {
                auto fewer = rules;
                fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
                if (rules[k].isConstraint()) {
                    expect(isAnswerSet(groundOf(fewer, sigma), s), "(e) removing a satisfied constraint");
                }
                else if (!satisfies(s, rules[k].body)) {
                    expect(isAnswerSet(groundOf(fewer, sigma), s), "(c) removing a rule with a false body");
                }
            }
            {
                Rule c;
                c.body     = falsified(s);
                auto extra = rules;
                extra.push_back(c);
                expect(isAnswerSet(groundOf(extra, sigma), s), "(d) adding a satisfied constraint");
            }
        }

        auto defs  = rules;
        auto fresh = sigma;
        for (auto q = pick(3) + 1; q != 0; --q) {
            Atom a("q" + std::to_string(q));
            fresh.push_back(a);
            for (auto k = pick(2) + 1; k != 0; --k) {
                Rule r;
                r.head.push_back(a);
                r.body = randomBody();
                defs.push_back(r);
            }
        }
        std::set<AtomSet> image;
        auto              extended = answerSets(groundOf(defs, fresh), unlimitedEngine);
        for (const auto& x : extended) {
            AtomSet restricted;
            std::copy_if(x.atoms.begin(), x.atoms.end(), std::inserter(restricted, restricted.end()),
                         [&](const Atom& a) { return sig.count(a) != 0; });
            image.insert(restricted);
        }
        std::set<AtomSet> original;
        for (const auto& as : sets) {
            original.insert(as.atoms);
        }
        expect(image.size() == extended.size() && image == original, "definitions over fresh atoms");
    }
    return res;
}

/// Split-program candidates against assumption-program candidates.
inline PropertyResult splitVsAssumption(const std::vector<Program>& corpus, const SolveOptions& opts) {
    PropertyResult res;
    for (const auto& p : corpus) {
        ++res.programs;
        ++res.checks;
        auto split = splitCandidates(p, opts);
        auto other = atomSets(assumptionCandidates(p, opts));
        if (split != other) {
            res.failures.push_back(render(p));
        }
    }
    return res;
}

/// checkLpod on every program under every criterion.
inline PropertyResult lpodAgreement(const std::vector<Program>& corpus, const EvalOptions& opts) {
    PropertyResult res;
    for (const auto& p : corpus) {
        ++res.programs;
        for (auto c : kCriteria) {
            ++res.checks;
            auto r = checkLpod(p, c, opts);
            for (const auto& m : r.mismatches) {
                res.failures.push_back(std::string(toString(c)) + ": " + m + " in:\n" + render(p));
            }
        }
    }
    return res;
}

/// checkCrp on every program.
inline PropertyResult crpAgreement(const std::vector<Program>& corpus, const EvalOptions& opts,
                                   OrderedChoice choice) {
    PropertyResult res;
    for (const auto& p : corpus) {
        ++res.programs;
        ++res.checks;
        auto r = checkCrp(p, opts, choice);
        for (const auto& m : r.mismatches) {
            res.failures.push_back(m + " in:\n" + render(p));
        }
    }
    return res;
}

} // namespace lpodc::test
