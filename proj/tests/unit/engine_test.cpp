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

std::vector<AtomSet> plain(const std::vector<AnswerSet>& sets) {
    std::vector<AtomSet> out;
    for (const auto& s : sets) {
        out.push_back(s.atoms);
    }
    return out;
}

Literal pos(const char* a) { return Literal{Atom(a), false}; }
Literal neg(const char* a) { return Literal{Atom(a), true}; }

} // namespace

TEST_CASE("empty program has the empty answer set") {
    CHECK(plain(answerSets(GroundProgram{})) == std::vector<AtomSet>{AtomSet{}});
}

TEST_CASE("split programs of the first example") {
    auto splits = splitPrograms(sample("pi1.lpod"));
    REQUIRE(splits.size() == 4);
    CHECK(plain(answerSets(splits[0])) == std::vector<AtomSet>{atoms({"a", "b"})});
    CHECK(plain(answerSets(splits[3])) == std::vector<AtomSet>{atoms({"b"}), atoms({"c"})});
}

TEST_CASE("even loop through negation") {
    GroundProgram g;
    g.rule(Atom("a"), {neg("b")}).rule(Atom("b"), {neg("a")});
    CHECK(plain(answerSets(g)) == std::vector<AtomSet>{atoms({"a"}), atoms({"b"})});
    g.constraint({pos("a")});
    CHECK(plain(answerSets(g)) == std::vector<AtomSet>{atoms({"b"})});
}

TEST_CASE("positive loops are not self-supporting") {
    GroundProgram g;
    g.rule(Atom("a"), {pos("b")}).rule(Atom("b"), {pos("a")});
    CHECK(plain(answerSets(g)) == std::vector<AtomSet>{AtomSet{}});
    CHECK_FALSE(isAnswerSet(g, atoms({"a", "b"})));
}

TEST_CASE("choice bounds act as constraints") {
    GroundProgram g;
    g.choice({Atom("a"), Atom("b"), Atom("c")}, 1, 1);
    CHECK(answerSets(g).size() == 3);
    GroundProgram h;
    h.choice({Atom("a"), Atom("b")}, 2, std::nullopt).constraint({pos("a")});
    CHECK(answerSets(h).empty());
}

TEST_CASE("optimal answer sets minimize the penalty") {
    GroundProgram g;
    g.fact(Atom("a")).weakConstraint({pos("a")}, -1, {Value::integer(-1), Value::symbol("a")});
    auto best = optimalAnswerSets(g);
    REQUIRE(best.size() == 1);
    CHECK(best[0].penalty == -1);

    GroundProgram h;
    h.choice({Atom("a")}, std::nullopt, std::nullopt)
        .weakConstraint({pos("a")}, -1, {Value::integer(-1), Value::symbol("a")});
    best = optimalAnswerSets(h);
    REQUIRE(best.size() == 1);
    CHECK(best[0].atoms == atoms({"a"}));
}

TEST_CASE("penalty counts distinct term tuples once") {
    GroundProgram g;
    g.fact(Atom("a")).fact(Atom("b"));
    g.weakConstraint({pos("a")}, 2, {Value::integer(1)});
    g.weakConstraint({pos("b")}, 2, {Value::integer(1)});
    g.weakConstraint({pos("b")}, 3, {Value::integer(2)});
    CHECK(penalty(g, atoms({"a", "b"})) == 5);
}

TEST_CASE("count aggregates in bodies") {
    GroundProgram g;
    g.choice({Atom("a"), Atom("b"), Atom("c")}, std::nullopt, std::nullopt);
    GroundRule r;
    r.head      = GroundRule::Head::Atom;
    r.headAtoms = {g.intern(Atom("two"))};
    CountAggregate agg;
    agg.lower    = 2;
    agg.elements = {{g.intern(Atom("a")), false}, {g.intern(Atom("b")), false}, {g.intern(Atom("c")), false}};
    r.body.aggregates.push_back(agg);
    g.rules.push_back(r);
    for (const auto& s : answerSets(g)) {
        auto n = s.atoms.size() - s.contains(Atom("two"));
        CHECK(s.contains(Atom("two")) == (n >= 2));
    }
}

TEST_CASE("cap refuses large searches") {
    GroundProgram g;
    std::vector<Atom> head;
    for (int i = 0; i != 8; ++i) {
        head.push_back(Atom("x" + std::to_string(i)));
    }
    g.choice(head, std::nullopt, std::nullopt);
    EngineOptions o;
    o.cap = 4;
    CHECK_THROWS_AS((void)answerSets(g, o), CapExceeded);
    o.cap = 0;
    CHECK(answerSets(g, o).size() == 256);
}

TEST_CASE("rule and constraint invariants on random programs") {
    auto res = engineInvariants(500);
    CHECK(res.programs == 500);
    for (const auto& f : res.failures) {
        FAIL_CHECK(f);
    }
    CHECK(res.ok());
}
