//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include "../support.hpp"

#include <lpodc/grounder.hpp>

#include <doctest.h>

using namespace lpodc;
using namespace lpodc::test;

namespace {

std::vector<AtomSet> solveText(std::string_view text) {
    EngineOptions o;
    o.cap = 0;
    std::vector<AtomSet> out;
    for (const auto& s : answerSets(asp::ground(asp::parseDocument(text)), o)) {
        out.push_back(s.atoms);
    }
    return out;
}

} // namespace

TEST_CASE("tokens ignore whitespace and comments") {
    CHECK(asp::tokenize("a(X):-b(X), X!=1. % c") == asp::tokenize("a( X ) :-\n  b(X),X != 1."));
    CHECK(asp::tokenize("#const n = 2.") == std::vector<std::string>{"#const", "n", "=", "2", "."});
    CHECK(asp::tokenize("1..3") == std::vector<std::string>{"1", "..", "3"});
}

TEST_CASE("golden listings survive parse and emit") {
    for (const auto* name : {"pi1_base.lp", "pi2_cardinality.lp", "pi2_inclusion.lp", "pi2_pareto.lp",
                             "pi2_penalty-sum.lp", "pi3.lp", "pi3p_R.lp"}) {
        CAPTURE(name);
        auto text = golden(name);
        auto doc  = asp::parseDocument(text);
        CHECK(asp::tokenize(asp::emit(doc)) == asp::tokenize(text));
        CHECK(asp::parseDocument(asp::emit(doc)).statements == doc.statements);
    }
}

TEST_CASE("syntax errors carry a position") {
    try {
        (void)asp::parseDocument("a.\nb :- .\n");
        FAIL("expected a syntax error");
    }
    catch (const asp::SyntaxError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("grounding intervals, pools and comparisons") {
    CHECK(solveText("p(1..3). q(X) :- p(X), X > 1.") ==
          std::vector<AtomSet>{atoms({"p(1)", "p(2)", "p(3)", "q(2)", "q(3)"})});
    CHECK(solveText("p(1;2). r(X,Y) :- p(X), p(Y), X < Y.") ==
          std::vector<AtomSet>{atoms({"p(1)", "p(2)", "r(1,2)"})});
    CHECK(solveText("#const n = 2. p(n). q(X+1) :- p(X).") == std::vector<AtomSet>{atoms({"p(2)", "q(3)"})});
}

TEST_CASE("grounding choice rules with ranges") {
    auto sets = solveText("{ s(X) : X=1..3 } 1.");
    CHECK(sets.size() == 4);
    sets = solveText("1 { s(X) : X=1..3 } 1.");
    CHECK(sets.size() == 3);
}

TEST_CASE("grounding count aggregates") {
    CHECK(solveText("p(1). p(2). n(N) :- N = { p(X) : X=1..3 }.").back().count(atomFromString("n(2)")) == 1);
    CHECK(solveText("p(1). ok :- 2 { p(1); p(2) }.").front().count(Atom("ok")) == 0);
    CHECK(solveText("p(1). p(2). ok :- 2 { p(1); p(2) }.").front().count(Atom("ok")) == 1);
    CHECK(solveText("p(1). none :- { p(X) : X=1..2 } 0.").front().count(Atom("none")) == 0);
}

TEST_CASE("negation over atoms outside the domain") {
    CHECK(solveText("a :- not b.") == std::vector<AtomSet>{atoms({"a"})});
}

TEST_CASE("unsafe variables are reported") {
    CHECK_THROWS_AS((void)asp::ground(asp::parseDocument("p(X) :- not q(X).")), asp::GroundingError);
}

TEST_CASE("weak constraints are ground with their terms") {
    auto g = asp::ground(asp::parseDocument("p(1..2). :~ p(X). [-1, X]"));
    CHECK(g.weak.size() == 2);
    auto best = optimalAnswerSets(g);
    REQUIRE(best.size() == 1);
    CHECK(best[0].penalty == -2);
}
