//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include <lpodc/generator.hpp>

#include <algorithm>
#include <numeric>

namespace lpodc {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p = 0.5) {
    return std::bernoulli_distribution(p)(rng);
}

Atom letter(int i) {
    return Atom(std::string(1, static_cast<char>('a' + i)));
}

Atom numbered(int i) {
    return Atom("p" + std::to_string(i));
}

std::vector<Atom> distinct(std::mt19937_64& rng, int atoms, int n, Atom (*name)(int)) {
    std::vector<int> pool(static_cast<std::size_t>(atoms));
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Atom> out;
    for (int i = 0; i != std::min(n, atoms); ++i) {
        out.push_back(name(pool[static_cast<std::size_t>(i)]));
    }
    return out;
}

std::vector<Literal> body(std::mt19937_64& rng, int atoms, int maxBody, Atom (*name)(int)) {
    std::vector<Literal> out;
    for (auto& a : distinct(rng, atoms, uniform(rng, 0, maxBody), name)) {
        out.push_back(Literal{std::move(a), coin(rng)});
    }
    return out;
}

Rule regular(std::mt19937_64& rng, int atoms, int maxBody, bool choices, double constraints, Atom (*name)(int)) {
    Rule r;
    r.body = body(rng, atoms, maxBody, name);
    if (coin(rng, constraints)) {
        if (r.body.empty()) {
            r.body = body(rng, atoms, 1, name);
        }
        if (r.body.empty()) {
            r.body.push_back(Literal{name(0), false});
        }
        return r;
    }
    if (choices && coin(rng, 0.15)) {
        r.head = distinct(rng, atoms, uniform(rng, 1, 3), name);
        ChoiceBounds b;
        auto         q = static_cast<int>(r.head.size());
        if (coin(rng)) {
            b.lower = uniform(rng, 0, q);
        }
        if (coin(rng)) {
            b.upper = uniform(rng, b.lower.value_or(0), q);
        }
        r.choice = b;
        return r;
    }
    r.head.push_back(name(uniform(rng, 0, atoms - 1)));
    return r;
}

Rule ordered(std::mt19937_64& rng, RuleKind kind, int atoms, int maxOptions, int maxBody) {
    Rule r;
    r.kind = kind;
    r.head = distinct(rng, atoms, uniform(rng, 2, std::max(2, maxOptions)), letter);
    r.body = body(rng, atoms, maxBody, letter);
    return r;
}

} // namespace

Program randomLpod(std::mt19937_64& rng, const LpodShape& shape) {
    Program p(Dialect::Lpod);
    auto    m = uniform(rng, 1, std::max(1, shape.ordered));
    for (int i = 0; i != m; ++i) {
        p.rules.push_back(ordered(rng, RuleKind::Ordered, shape.atoms, shape.maxOptions, shape.maxBody));
    }
    for (int i = uniform(rng, 0, shape.regular); i != 0; --i) {
        p.rules.push_back(regular(rng, shape.atoms, shape.maxBody, shape.choices, 0.3, letter));
    }
    std::shuffle(p.rules.begin(), p.rules.end(), rng);
    return canonicalize(std::move(p));
}

Program randomCrp(std::mt19937_64& rng, const CrpShape& shape) {
    Program p(Dialect::Crp2);
    for (int i = uniform(rng, 0, shape.cr); i != 0; --i) {
        Rule r;
        r.kind = RuleKind::Cr;
        r.head.push_back(letter(uniform(rng, 0, shape.atoms - 1)));
        r.body = body(rng, shape.atoms, shape.maxBody, letter);
        p.rules.push_back(std::move(r));
    }
    for (int i = uniform(rng, 0, shape.orderedCr); i != 0; --i) {
        p.rules.push_back(ordered(rng, RuleKind::OrderedCr, shape.atoms, 3, shape.maxBody));
    }
    for (int i = uniform(rng, 0, shape.ordered); i != 0; --i) {
        p.rules.push_back(ordered(rng, RuleKind::Ordered, shape.atoms, 3, shape.maxBody));
    }
    for (int i = uniform(rng, 0, shape.regular); i != 0; --i) {
        p.rules.push_back(regular(rng, shape.atoms, shape.maxBody, false, 0.4, letter));
    }
    std::shuffle(p.rules.begin(), p.rules.end(), rng);
    std::vector<std::string> restoring;
    int                      next = 0;
    for (auto& r : p.rules) {
        if (r.kind != RuleKind::Regular) {
            r.label = "r" + std::to_string(++next);
            if (r.isConsistencyRestoring()) {
                restoring.push_back(*r.label);
            }
        }
    }
    if (shape.prefer && restoring.size() >= 2 && coin(rng)) {
        std::shuffle(restoring.begin(), restoring.end(), rng);
        p.preferFacts.push_back(PreferFact{restoring[0], restoring[1], {}});
    }
    return canonicalize(std::move(p));
}

std::vector<Rule> randomRegularRules(std::mt19937_64& rng, const GroundShape& shape) {
    auto              atoms = uniform(rng, 1, shape.atoms);
    std::vector<Rule> out;
    for (int i = uniform(rng, 0, shape.rules); i != 0; --i) {
        out.push_back(regular(rng, atoms, shape.maxBody, true, 0.2, numbered));
    }
    return out;
}

Program minimize(Program p, const std::function<bool(const Program&)>& fails) {
    auto attempt = [&](Program q) {
        q = canonicalize(std::move(q));
        if (!validateProgram(q).ok() || !fails(q)) {
            return false;
        }
        p = std::move(q);
        return true;
    };
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t i = 0; i < p.preferFacts.size(); ++i) {
            auto q = p;
            q.preferFacts.erase(q.preferFacts.begin() + static_cast<std::ptrdiff_t>(i));
            if (attempt(std::move(q))) {
                progress = true;
                --i;
            }
        }
        for (std::size_t i = 0; i < p.rules.size(); ++i) {
            auto q = p;
            q.rules.erase(q.rules.begin() + static_cast<std::ptrdiff_t>(i));
            if (attempt(std::move(q))) {
                progress = true;
                --i;
                continue;
            }
            for (std::size_t j = 0; j < p.rules[i].body.size(); ++j) {
                if (p.rules[i].isConstraint() && p.rules[i].body.size() == 1) {
                    break;
                }
                auto s = p;
                s.rules[i].body.erase(s.rules[i].body.begin() + static_cast<std::ptrdiff_t>(j));
                if (attempt(std::move(s))) {
                    progress = true;
                    --j;
                }
            }
            if (p.rules[i].isOrderedHead()) {
                for (std::size_t j = 0; j < p.rules[i].head.size() && p.rules[i].head.size() > 2; ++j) {
                    auto s = p;
                    s.rules[i].head.erase(s.rules[i].head.begin() + static_cast<std::ptrdiff_t>(j));
                    if (attempt(std::move(s))) {
                        progress = true;
                        --j;
                    }
                }
            }
        }
    }
    return p;
}

} // namespace lpodc
