//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include "../properties.hpp"

#include <doctest.h>

using namespace lpodc;
using namespace lpodc::test;

namespace {

std::vector<AtomSet> preferredSets(const Program& p, Criterion c) {
    return atomSets(preferred(p, c));
}

} // namespace

TEST_CASE("candidates of the first example") {
    auto p  = sample("pi1.lpod");
    auto cs = assumptionCandidates(p);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].atoms == atoms({"a", "b"}));
    CHECK(cs[0].degrees == DegreeList{1, 1});
    CHECK(cs[1].atoms == atoms({"b"}));
    CHECK(cs[1].degrees == DegreeList{2, 1});
    CHECK(cs[2].atoms == atoms({"c"}));
    CHECK(cs[2].degrees == DegreeList{1, 2});
    CHECK(splitCandidates(p) == atomSets(cs));
    for (auto c : kCriteria) {
        CHECK(preferredSets(p, c) == std::vector<AtomSet>{atoms({"a", "b"})});
    }
}

TEST_CASE("preferred sets of the hotel example") {
    auto p  = sample("pi2.lpod");
    auto s1 = atoms({"hotel(1)", "close", "star2"});
    auto s2 = atoms({"hotel(2)", "med", "star3"});
    auto s3 = atoms({"hotel(3)", "tooFar", "star4"});
    auto cs = assumptionCandidates(p);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].degrees == DegreeList{1, 3});
    CHECK(cs[1].degrees == DegreeList{2, 2});
    CHECK(cs[2].degrees == DegreeList{4, 1});
    CHECK(preferredSets(p, Criterion::Cardinality) == std::vector<AtomSet>{s1});
    CHECK(preferredSets(p, Criterion::Inclusion) == std::vector<AtomSet>{s1, s3});
    CHECK(preferredSets(p, Criterion::Pareto) == std::vector<AtomSet>{s1, s2, s3});
    CHECK(preferredSets(p, Criterion::PenaltySum) == std::vector<AtomSet>{s1, s2});
}

TEST_CASE("assumption x gives degrees") {
    CHECK(degreesFromAssumption({0, 2, 1}) == DegreeList{1, 2, 1});
    auto p = sample("pi1.lpod");
    CHECK(degreesOf(p, atoms({"c"})) == DegreeList{1, 2});
    CHECK(lpodAssumptionTuples(p).size() == 9);
}

TEST_CASE("assumption blocks") {
    auto p = sample("pi1.lpod");
    CHECK(assumption(p.rules[0], 0).size() == 2 + 2);
    CHECK(assumption(p.rules[0], 1).size() == 2 + 2);
    auto opt = option(p.rules[0], 2);
    CHECK(opt.head == std::vector<Atom>{Atom("b")});
    CHECK(opt.body.size() == 2);
}

TEST_CASE("preference relations are irreflexive and asymmetric") {
    std::vector<DegreeList> lists;
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            for (int c = 1; c <= 3; ++c) {
                lists.push_back({a, b, c});
            }
        }
    }
    for (auto c : kCriteria) {
        CAPTURE(toString(c));
        for (const auto& x : lists) {
            CHECK_FALSE(preferredTo(x, x, c));
            for (const auto& y : lists) {
                CHECK_FALSE((preferredTo(x, y, c) && preferredTo(y, x, c)));
            }
        }
    }
    CHECK(preferredTo({1, 3}, {2, 2}, Criterion::Cardinality));
    CHECK(preferredTo({1, 3}, {2, 2}, Criterion::Inclusion));
    CHECK_FALSE(preferredTo({1, 3}, {4, 1}, Criterion::Inclusion));
    CHECK(preferredTo({1, 2}, {1, 3}, Criterion::Pareto));
    CHECK(preferredTo({2, 2}, {4, 1}, Criterion::PenaltySum));
}

TEST_CASE("inconsistent program has no candidates") {
    auto p = parse("a * b.\n:- a.\n:- b.\n", Dialect::Lpod);
    CHECK(assumptionCandidates(p).empty());
    CHECK(splitCandidates(p).empty());
}

TEST_CASE("split programs and assumption programs agree on random programs") {
    auto res = splitVsAssumption(lpodCorpus(), {});
    CHECK(res.programs == 200);
    for (const auto& f : res.failures) {
        FAIL_CHECK(f);
    }
}
