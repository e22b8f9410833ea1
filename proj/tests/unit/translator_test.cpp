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

bool sameTokens(const asp::Document& d, const std::string& text) {
    return asp::tokenize(asp::emit(d)) == asp::tokenize(text);
}

} // namespace

TEST_CASE("base translation of the first example matches its listing") {
    CHECK(sameTokens(lpod2aspBase(sample("pi1.lpod")), golden("pi1_base.lp")));
}

TEST_CASE("hotel translation matches its listings under every criterion") {
    auto p = sample("pi2.lpod");
    for (auto c : kCriteria) {
        CAPTURE(toString(c));
        CHECK(sameTokens(lpod2asp(p, c), golden("pi2_" + std::string(toString(c)) + ".lp")));
    }
}

TEST_CASE("cr translation matches its listing") {
    CHECK(sameTokens(crp2asp(sample("pi3.crp")), golden("pi3.lp")));
}

TEST_CASE("prefer facts append the rule-wise block") {
    auto          a = crp2asp(sample("pi3.crp"));
    auto          b = crp2asp(sample("pi3p.crp"));
    asp::Document tail;
    REQUIRE(b.statements.size() > a.statements.size());
    CHECK(std::equal(a.statements.begin(), a.statements.end(), b.statements.begin()));
    tail.statements.assign(b.statements.begin() + static_cast<std::ptrdiff_t>(a.statements.size()),
                           b.statements.end());
    CHECK(sameTokens(tail, golden("pi3p_R.lp")));
}

TEST_CASE("statement counts of the base translation") {
    std::mt19937_64 rng(11);
    for (int i = 0; i != 50; ++i) {
        auto        p       = randomLpod(rng);
        std::size_t regular = 0;
        std::size_t options = 0;
        for (const auto& r : p.rules) {
            if (r.kind == RuleKind::Regular) {
                ++regular;
            }
            else {
                options += 3 + 2 * r.head.size();
            }
        }
        auto m = p.nonRegularCount();
        CHECK(lpod2aspBase(p).statements.size() == 2 + regular + options + 1 + 2 * m);
    }
}

TEST_CASE("translation is deterministic and layered") {
    auto p = sample("pi2.lpod");
    for (auto c : kCriteria) {
        auto d = lpod2asp(p, c);
        CHECK(asp::emit(d) == asp::emit(lpod2asp(p, c)));
        CHECK(d.layer(asp::Layer::Tuple).size() == lpod2aspBase(p).statements.size());
        CHECK(d.layer(asp::Layer::Tuple).size() + d.layer(asp::Layer::Preference).size() == d.statements.size());
    }
    CHECK(maxDegree(p) == 4);
    CHECK(lpod2asp(p, Criterion::Cardinality).constants.front().name == "maxdegree");
}

TEST_CASE("programs without ordered rules") {
    CHECK_THROWS_AS((void)lpod2aspBase(parse("a.", Dialect::Lpod)), DegenerateProgram);
    auto d = crp2asp(parse("a :- not b.", Dialect::Crp2));
    CHECK_FALSE(d.statements.empty());
}
