//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include "../support.hpp"

#include <doctest.h>

using namespace lpodc;
using namespace lpodc::test;

namespace {

AtomSet applOf(const AtomSet& s) {
    AtomSet out;
    for (const auto& a : s) {
        if (a.predicate == "appl") {
            out.insert(a);
        }
    }
    return out;
}

} // namespace

TEST_CASE("generalized answer sets of the cr example") {
    auto p   = sample("pi3.crp");
    auto gen = generalizedAnswerSets(p);
    REQUIRE(gen.size() == 5);
    std::set<AtomSet> appl;
    for (const auto& s : gen) {
        appl.insert(applOf(s));
    }
    auto c21 = applChoice(2, 1);
    auto c22 = applChoice(2, 2);
    CHECK(appl == std::set<AtomSet>{{applRule(1)},
                                    {applRule(2), c21},
                                    {applRule(2), c22},
                                    {applRule(1), applRule(2), c21},
                                    {applRule(1), applRule(2), c22}});

    auto cands = candidateAnswerSets(gen);
    REQUIRE(cands.size() == 3);
    std::set<AtomSet> candAppl;
    for (const auto& s : cands) {
        candAppl.insert(applOf(s));
    }
    CHECK(candAppl == std::set<AtomSet>{{applRule(1)}, {applRule(2), c21}, {applRule(1), applRule(2), c21}});
    CHECK(preferredAnswerSets(p) == std::vector<AtomSet>{atoms({"q", "r"}), atoms({"q", "s", "t"})});
}

TEST_CASE("prefer facts restrict the cr example") {
    CHECK(preferredAnswerSets(sample("pi3p.crp")) == std::vector<AtomSet>{atoms({"q", "r"})});
}

TEST_CASE("programs with only regular rules") {
    auto p = parse("a :- not b.\nb :- not a.\n", Dialect::Crp2);
    CHECK(preferredAnswerSets(p) == std::vector<AtomSet>{atoms({"a"}), atoms({"b"})});
    CHECK(crpAssumptionTuples(p) == std::vector<AssumptionList>{AssumptionList{}});
}

TEST_CASE("assumption tuple domains") {
    auto p = sample("pi3.crp");
    CHECK(crpAssumptionTuples(p).size() == 2 * 3);
    auto q = parse("o: a * b * c :- d.\n", Dialect::Crp2);
    CHECK(crpAssumptionTuples(q) == std::vector<AssumptionList>{{1}, {2}, {3}});
}

TEST_CASE("assumption programs reproduce the generalized answer sets on random programs") {
    for (const auto& p : crpCorpus()) {
        std::vector<AtomSet> byTuple;
        for (const auto& t : crpAssumptionAnswerSets(p)) {
            byTuple.insert(byTuple.end(), t.answerSets.begin(), t.answerSets.end());
        }
        INFO(render(p));
        CHECK(projectAll(p, generalizedAnswerSets(p)) == projectAll(p, byTuple));
    }
}

TEST_CASE("both ordered-choice readings agree on generalized answer sets on sigma") {
    for (const auto& p : crpCorpus()) {
        auto optional = projectAll(p, generalizedAnswerSets(p));
        auto required = projectAll(p, generalizedAnswerSets(p, {}, OrderedChoice::Required));
        INFO(render(p));
        CHECK(optional == required);
    }
}
