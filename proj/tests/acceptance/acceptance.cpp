//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include "../properties.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

using namespace lpodc;
using namespace lpodc::test;

namespace {

struct Outcome {
    bool        pass = true;
    std::string detail;
};

using Tuples = std::vector<AssumptionList>;

void require(Outcome& o, bool cond, const std::string& what) {
    if (!cond && o.pass) {
        o.pass   = false;
        o.detail = what;
    }
}

std::string firstFailure(const PropertyResult& r) {
    return r.failures.empty() ? "" : r.failures.front();
}

Outcome example1() {
    Outcome o;
    auto    p = sample("pi1.lpod");
    for (auto c : kCriteria) {
        auto e  = evalLpod(lpod2asp(p, c), p, c);
        auto cs = lpodCandidates(e, p);
        std::vector<std::pair<AtomSet, DegreeList>> got;
        for (const auto& x : cs) {
            got.emplace_back(x.atoms, x.degrees);
        }
        std::vector<std::pair<AtomSet, DegreeList>> want{
            {atoms({"a", "b"}), {1, 1}}, {atoms({"b"}), {2, 1}}, {atoms({"c"}), {1, 2}}};
        require(o, got == want, std::string(toString(c)) + ": candidates differ");
        auto best = lpodPreferred(e, p);
        require(o, best.size() == 1 && best[0].atoms == atoms({"a", "b"}),
                std::string(toString(c)) + ": preferred differs");
    }
    o.detail = o.pass ? "3 candidates, {a, b} preferred under all 4 criteria" : o.detail;
    return o;
}

Outcome example2() {
    Outcome o;
    auto    p  = sample("pi2.lpod");
    auto    s1 = atoms({"hotel(1)", "close", "star2"});
    auto    s2 = atoms({"hotel(2)", "med", "star3"});
    auto    s3 = atoms({"hotel(3)", "tooFar", "star4"});
    std::vector<std::pair<Criterion, std::vector<AtomSet>>> want{{Criterion::Cardinality, {s1}},
                                                                 {Criterion::Inclusion, {s1, s3}},
                                                                 {Criterion::Pareto, {s1, s2, s3}},
                                                                 {Criterion::PenaltySum, {s1, s2}}};
    for (const auto& [c, sets] : want) {
        auto e = evalLpod(lpod2asp(p, c), p, c);
        std::vector<DegreeList> degrees;
        for (const auto& x : lpodCandidates(e, p)) {
            degrees.push_back(x.degrees);
        }
        require(o, degrees == std::vector<DegreeList>{{1, 3}, {2, 2}, {4, 1}},
                std::string(toString(c)) + ": degree lists differ");
        require(o, atomSets(lpodPreferred(e, p)) == sets, std::string(toString(c)) + ": preferred differs");
    }
    o.detail = o.pass ? "S1 / S1,S3 / S1,S2,S3 / S1,S2" : o.detail;
    return o;
}

Outcome example3() {
    Outcome o;
    auto    p   = sample("pi3.crp");
    auto    gen = generalizedAnswerSets(p);
    auto    e   = evalCrp(crp2asp(p), p);
    require(o, gen.size() == 5 && e.tuples.size() == 5, "expected 5 generalized answer sets");
    require(o, candidateAnswerSets(gen).size() == 3 && e.candidates.size() == 3, "expected 3 candidates");
    auto best = std::vector<AtomSet>{atoms({"q", "r"}), atoms({"q", "s", "t"})};
    require(o, preferredAnswerSets(p) == best, "reference preferred differs");
    require(o, onSigma(e, e.preferred, p) == best, "translation preferred differs");
    auto q  = sample("pi3p.crp");
    auto eq = evalCrp(crp2asp(q), q);
    require(o, preferredAnswerSets(q) == std::vector<AtomSet>{atoms({"q", "r"})}, "reference preferred with prefer");
    require(o, onSigma(eq, eq.preferred, q) == std::vector<AtomSet>{atoms({"q", "r"})},
            "translation preferred with prefer");
    o.detail = o.pass ? "5 generalized, 3 candidates, preferred {t,q,s} {q,r}; with prefer {q,r}" : o.detail;
    return o;
}

Outcome goldenTexts() {
    Outcome o;
    auto    same = [](const asp::Document& d, const std::string& file) {
        return asp::tokenize(asp::emit(d)) == asp::tokenize(golden(file));
    };
    require(o, same(lpod2aspBase(sample("pi1.lpod")), "pi1_base.lp"), "pi1_base.lp");
    auto p2 = sample("pi2.lpod");
    for (auto c : kCriteria) {
        auto file = "pi2_" + std::string(toString(c)) + ".lp";
        require(o, same(lpod2asp(p2, c), file), file);
    }
    require(o, same(crp2asp(sample("pi3.crp")), "pi3.lp"), "pi3.lp");
    auto          a = crp2asp(sample("pi3.crp"));
    auto          b = crp2asp(sample("pi3p.crp"));
    asp::Document tail;
    if (b.statements.size() >= a.statements.size()) {
        tail.statements.assign(b.statements.begin() + static_cast<std::ptrdiff_t>(a.statements.size()),
                               b.statements.end());
    }
    require(o, same(tail, "pi3p_R.lp"), "pi3p_R.lp");
    o.detail = o.pass ? "7 listings token-identical" : o.detail + " differs";
    return o;
}

Outcome splitAgreement(const std::vector<Program>& corpus) {
    SolveOptions s;
    s.engine.cap = 0;
    auto    r    = splitVsAssumption(corpus, s);
    Outcome o{r.ok(), std::to_string(r.programs - r.failures.size()) + "/" + std::to_string(r.programs) + " agree"};
    if (!r.ok()) {
        o.detail += "; first: " + firstFailure(r);
    }
    return o;
}

Outcome lpodTranslation(const std::vector<Program>& corpus) {
    auto    r = lpodAgreement(corpus, unlimited());
    Outcome o{r.ok(), std::to_string(r.checks - r.failures.size()) + "/" + std::to_string(r.checks) +
                          " program-criterion pairs agree"};
    if (!r.ok()) {
        o.detail += "; first: " + firstFailure(r);
    }
    return o;
}

Outcome crpTranslation(const std::vector<Program>& corpus) {
    auto        literal  = crpAgreement(corpus, unlimited(), OrderedChoice::Optional);
    auto        required = crpAgreement(corpus, unlimited(), OrderedChoice::Required);
    std::size_t preferredOnly = 0;
    for (const auto& f : literal.failures) {
        preferredOnly += f.starts_with("translation preferred") ? 1 : 0;
    }
    Outcome o{literal.ok(), std::to_string(literal.programs - literal.failures.size()) + "/" +
                                std::to_string(literal.programs) + " agree"};
    if (!literal.ok()) {
        o.detail += " (" + std::to_string(preferredOnly) + " of " + std::to_string(literal.failures.size()) +
                    " mismatches on preferred only; " + std::to_string(required.programs - required.failures.size()) +
                    "/" + std::to_string(required.programs) +
                    " agree when every ordered rule must select a position)";
    }
    return o;
}

Outcome engineChecks() {
    auto    r = engineInvariants(500);
    Outcome o{r.ok(), std::to_string(r.checks - r.failures.size()) + "/" + std::to_string(r.checks) + " checks on " +
                          std::to_string(r.programs) + " programs"};
    if (!r.ok()) {
        o.detail += "; first: " + firstFailure(r);
    }
    return o;
}

Outcome monolithic() {
    Outcome       o;
    auto          p = sample("pi1.lpod");
    EngineOptions unlimitedEngine;
    unlimitedEngine.cap = 0;
    for (auto c : kCriteria) {
        auto doc  = lpod2asp(p, c);
        auto best = solveMonolithic(doc, unlimitedEngine);
        auto e    = evalLpod(doc, p, c);
        if (best.size() != 1) {
            require(o, false, std::string(toString(c)) + ": " + std::to_string(best.size()) + " optimal answer sets");
            continue;
        }
        const auto& k = best[0].atoms;
        AtomSet     split;
        for (const auto& t : e.tuples) {
            require(o, t.answerSets.size() == 1, "tuple with several answer sets");
            split.insert(t.answerSets.front().begin(), t.answerSets.front().end());
        }
        auto whole = split;
        whole.insert(e.preference.begin(), e.preference.end());
        require(o, k == whole, std::string(toString(c)) + ": optimal answer set differs from the per-tuple union");
        Tuples pas;
        for (const auto& a : k) {
            if (a.predicate == "pAS") {
                AssumptionList x;
                for (const auto& v : a.args) {
                    x.push_back(static_cast<int>(v.asInteger()));
                }
                pas.push_back(x);
            }
        }
        require(o, pas == e.preferred, std::string(toString(c)) + ": pAS differs");
    }
    o.detail = o.pass ? "one optimal answer set per criterion, equal to the per-tuple union and pAS" : o.detail;
    return o;
}

} // namespace

int main() {
    auto lpods = lpodCorpus(200);
    auto crps  = crpCorpus(100);

    struct Criterion_ {
        int                      id;
        const char*              name;
        double                   limit;
        std::function<Outcome()> run;
    };
    std::vector<Criterion_> all{
        {1, "example 1 reproduction", 1, example1},
        {2, "example 2 reproduction", 5, example2},
        {3, "example 3 reproduction", 5, example3},
        {4, "golden translation texts", 0, goldenTexts},
        {5, "split vs assumption candidates, 200 LPODs", 60, [&] { return splitAgreement(lpods); }},
        {6, "translation vs reference preferred, 200 LPODs x 4 criteria", 300, [&] { return lpodTranslation(lpods); }},
        {7, "cr translation vs reference, 100 programs", 300, [&] { return crpTranslation(crps); }},
        {8, "engine rule invariants and fresh definitions, 500 programs", 0, engineChecks},
        {9, "monolithic vs per-tuple evaluation of example 1", 0, monolithic},
    };

    int failed = 0;
    for (const auto& c : all) {
        auto    start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        }
        catch (const std::exception& e) {
            o = Outcome{false, std::string("exception: ") + e.what()};
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit > 0 && secs >= c.limit) {
            o.pass = false;
            o.detail += "; over the " + std::to_string(static_cast<int>(c.limit)) + " s limit";
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " [" << std::fixed
                  << std::setprecision(2) << secs << " s] " << o.detail << std::endl;
    }
    return failed;
}
