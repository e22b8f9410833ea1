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

using Tuples = std::vector<AssumptionList>;

EvaluatedTranslation evalSample(const char* name, Criterion c, PreferenceRoute route) {
    auto        p = sample(name);
    EvalOptions o;
    o.route = route;
    return evalLpod(lpod2asp(p, c), p, c, o);
}

} // namespace

TEST_CASE("shrink projects a tuple's atoms onto sigma") {
    auto sigma = atoms({"a", "b", "c", "d"});
    auto s     = atoms({"ap(0,2)", "ap(1,1)", "ap(2,1)", "a(1,1)", "b(1,1)", "b(2,1)", "c(0,2)"});
    CHECK(shrink(s, {1, 1}, sigma) == atoms({"a", "b"}));
    CHECK(shrink(s, {0, 2}, sigma) == atoms({"c"}));
    CHECK(shrink({}, {1, 1}, sigma).empty());
}

TEST_CASE("monolithic optimum of the first example") {
    EngineOptions o;
    o.cap     = 0;
    auto best = solveMonolithic(lpod2aspBase(sample("pi1.lpod")), o);
    REQUIRE(best.size() == 1);
    CHECK(best[0].atoms == atoms({"ap(0,2)", "ap(1,1)", "ap(2,1)", "a(1,1)", "b(1,1)", "b(2,1)", "c(0,2)",
                                  "body_1(1,1)", "body_1(2,1)", "body_2(0,2)", "body_2(1,1)", "body_2(2,1)",
                                  "degree(ap(0,2),1,2)", "degree(ap(1,1),1,1)", "degree(ap(2,1),2,1)"}));
}

TEST_CASE("preference layers of the examples") {
    for (auto route : {PreferenceRoute::Encoded, PreferenceRoute::Native}) {
        CAPTURE(static_cast<int>(route));
        CHECK(evalSample("pi1.lpod", Criterion::PenaltySum, route).preferred == Tuples{{1, 1}});
        CHECK(evalSample("pi2.lpod", Criterion::Cardinality, route).preferred == Tuples{{1, 3}});
        CHECK(evalSample("pi2.lpod", Criterion::Inclusion, route).preferred == Tuples{{1, 3}, {4, 1}});
        CHECK(evalSample("pi2.lpod", Criterion::Pareto, route).preferred == Tuples{{1, 3}, {2, 2}, {4, 1}});
        CHECK(evalSample("pi2.lpod", Criterion::PenaltySum, route).preferred == Tuples{{1, 3}, {2, 2}});

        EvalOptions o;
        o.route = route;
        auto p3 = sample("pi3.crp");
        auto e3 = evalCrp(crp2asp(p3), p3, o);
        CHECK(e3.tuples.size() == 5);
        CHECK(e3.candidates == Tuples{{0, 1}, {1, 0}, {1, 1}});
        CHECK(e3.preferred == Tuples{{0, 1}, {1, 0}});
        auto p4 = sample("pi3p.crp");
        CHECK(evalCrp(crp2asp(p4), p4, o).preferred == Tuples{{0, 1}});
    }
}

TEST_CASE("candidates read back from degree atoms") {
    auto p  = sample("pi1.lpod");
    auto e  = evalLpod(lpod2asp(p, Criterion::Pareto), p, Criterion::Pareto);
    auto cs = lpodCandidates(e, p);
    CHECK(cs == assumptionCandidates(p));
    REQUIRE(lpodPreferred(e, p).size() == 1);
    CHECK(lpodPreferred(e, p)[0].atoms == atoms({"a", "b"}));
}

TEST_CASE("regular-only cr program has the empty tuple") {
    auto p = parse("a :- not b.\nb :- not a.\n", Dialect::Crp2);
    auto e = evalCrp(crp2asp(p), p);
    CHECK(e.preferred == Tuples{{}});
    CHECK(onSigma(e, e.preferred, p) == std::vector<AtomSet>{atoms({"a"}), atoms({"b"})});
}

TEST_CASE("tuple evaluation does not depend on the thread count") {
    auto        p = sample("pi2.lpod");
    EvalOptions o;
    o.solve.parallel = 4;
    auto a           = evalLpod(lpod2asp(p, Criterion::Inclusion), p, Criterion::Inclusion);
    auto b           = evalLpod(lpod2asp(p, Criterion::Inclusion), p, Criterion::Inclusion, o);
    CHECK(a.preferred == b.preferred);
    CHECK(a.preference == b.preference);
    CHECK(lpodCandidates(a, p) == lpodCandidates(b, p));
}

TEST_CASE("lpod translation agrees with the reference semantics on random programs") {
    for (auto route : {PreferenceRoute::Encoded, PreferenceRoute::Native}) {
        auto o  = unlimited();
        o.route = route;
        auto r  = lpodAgreement(lpodCorpus(), o);
        CHECK(r.checks == 800);
        for (const auto& f : r.failures) {
            FAIL_CHECK(f);
        }
    }
}

TEST_CASE("cr translation agrees when ordered rules always select a position") {
    for (auto route : {PreferenceRoute::Encoded, PreferenceRoute::Native}) {
        auto o  = unlimited();
        o.route = route;
        auto r  = crpAgreement(crpCorpus(), o, OrderedChoice::Required);
        for (const auto& f : r.failures) {
            FAIL_CHECK(f);
        }
    }
}

TEST_CASE("cr translation agrees on generalized and candidate answer sets") {
    for (const auto& p : crpCorpus()) {
        auto r = checkCrp(p, unlimited());
        INFO(render(p));
        for (const auto& m : r.mismatches) {
            CHECK_MESSAGE(m.starts_with("translation preferred"), m);
        }
    }
}

TEST_CASE("an ordered rule with a false body need not select a position") {
    auto p = parse("r1: c * d :- not a.\nr2: a :+.\n", Dialect::Crp2);
    CHECK(preferredAnswerSets(p) == std::vector<AtomSet>{atoms({"a"}), atoms({"c"})});
    CHECK(preferredAnswerSets(p, {}, OrderedChoice::Required) == std::vector<AtomSet>{atoms({"c"})});
    auto e = evalCrp(crp2asp(p), p);
    CHECK(onSigma(e, e.preferred, p) == std::vector<AtomSet>{atoms({"c"})});
}
