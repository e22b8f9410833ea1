//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include <lpodc/program.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

namespace lpodc {

std::string_view toString(Dialect d) { return d == Dialect::Lpod ? "lpod" : "crp2"; }

std::string_view toString(RuleKind k) {
    switch (k) {
        case RuleKind::Regular  : return "regular";
        case RuleKind::Ordered  : return "ordered";
        case RuleKind::Cr       : return "cr";
        case RuleKind::OrderedCr: return "ordered-cr";
    }
    return "?";
}

bool operator==(const Rule& lhs, const Rule& rhs) {
    return lhs.kind == rhs.kind && lhs.head == rhs.head && lhs.choice == rhs.choice && lhs.body == rhs.body &&
           lhs.label == rhs.label && lhs.index == rhs.index;
}

AtomSet Program::signature() const {
    AtomSet sig;
    for (const auto& r : rules) {
        sig.insert(r.head.begin(), r.head.end());
        for (const auto& l : r.body) {
            sig.insert(l.atom);
        }
    }
    return sig;
}

std::size_t Program::nonRegularCount() const {
    return static_cast<std::size_t>(
        std::count_if(rules.begin(), rules.end(), [](const Rule& r) { return r.kind != RuleKind::Regular; }));
}

std::vector<const Rule*> Program::indexed() const {
    std::vector<const Rule*> out;
    for (const auto& r : rules) {
        if (r.kind != RuleKind::Regular) {
            out.push_back(&r);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Rule* a, const Rule* b) { return a->index < b->index; });
    return out;
}

Program::Layout Program::layout() const {
    Layout lay;
    for (const auto& r : rules) {
        switch (r.kind) {
            case RuleKind::Regular  : break;
            case RuleKind::Cr       : ++lay.k; break;
            case RuleKind::OrderedCr: ++lay.l; break;
            case RuleKind::Ordered  : ++lay.m; break;
        }
    }
    if (dialect == Dialect::Lpod) {
        return Layout{0, 0, lay.m};
    }
    lay.l += lay.k;
    lay.m += lay.l;
    return lay;
}

std::string Program::labelOf(const Rule& r) { return r.label ? *r.label : "r" + std::to_string(r.index); }

std::map<std::string, int> Program::labelIndex() const {
    std::map<std::string, int> out;
    for (const auto& r : rules) {
        if (r.kind != RuleKind::Regular) {
            out.emplace(labelOf(r), r.index);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Program::preferIndices() const {
    auto                             labels = labelIndex();
    std::vector<std::pair<int, int>> out;
    for (const auto& f : preferFacts) {
        auto a = labels.find(f.first);
        auto b = labels.find(f.second);
        if (a != labels.end() && b != labels.end()) {
            out.emplace_back(a->second, b->second);
        }
    }
    return out;
}

namespace {
constexpr std::array kReserved = {
    "ap",       "degree",     "prf",       "pAS",         "card",      "equ2degree", "prf2degree",
    "even",     "equ",        "sum",       "appl",        "fired",     "choice",     "isPreferred",
    "dominate", "candidate",  "lessCrRulesApplied",
};

bool isBodyPredicate(std::string_view name) {
    constexpr std::string_view prefix = "body_";
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) {
        return false;
    }
    return std::all_of(name.begin() + static_cast<std::ptrdiff_t>(prefix.size()), name.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

// Translation constants must not be shadowed by atom arguments.
bool usesReservedConstant(const Atom& a) {
    return std::any_of(a.args.begin(), a.args.end(),
                       [](const Value& v) { return v.kind() == Value::Kind::Symbol && v.name() == "maxdegree"; });
}
} // namespace

bool isReservedPredicate(std::string_view name) {
    return isBodyPredicate(name) || std::find(kReserved.begin(), kReserved.end(), name) != kReserved.end();
}

ValidationReport validateProgram(const Program& input) {
    ValidationReport rep;
    auto             p = canonicalize(input);

    std::set<std::string> reportedNames;
    auto                  checkAtom = [&](const Atom& a) {
        std::string what;
        if (isReservedPredicate(a.predicate)) {
            what = "reserved predicate " + a.predicate;
        }
        else if (a.predicate == "prefer") {
            what = p.dialect == Dialect::Crp2 && a.args.size() == 2
                       ? "unsupported: prefer atoms derived by rules"
                       : "reserved predicate prefer/" + std::to_string(a.args.size());
        }
        else if (usesReservedConstant(a)) {
            what = "reserved constant maxdegree in " + a.str();
        }
        if (!what.empty() && reportedNames.insert(what).second) {
            rep.violations.push_back(what);
        }
    };

    std::set<std::string> labels;
    std::set<std::string> dupReported;
    for (const auto& r : p.rules) {
        for (const auto& a : r.head) {
            checkAtom(a);
        }
        for (const auto& l : r.body) {
            checkAtom(l.atom);
        }
        if (r.isOrderedHead() && r.head.size() < 2) {
            rep.violations.push_back("ordered head with n < 2 (" + Program::labelOf(r) + ")");
        }
        if (r.kind == RuleKind::Cr && (r.head.size() != 1 || r.choice)) {
            rep.violations.push_back("cr-rule head must be a single atom (" + Program::labelOf(r) + ")");
        }
        if (r.kind != RuleKind::Regular && r.choice) {
            rep.violations.push_back("choice head on non-regular rule (" + Program::labelOf(r) + ")");
        }
        if (r.kind == RuleKind::Regular && !r.choice && r.head.size() > 1) {
            rep.violations.push_back("regular rule with more than one head atom");
        }
        if (r.choice && r.choice->lower && r.choice->upper && *r.choice->lower > *r.choice->upper) {
            rep.violations.push_back("choice bounds with lower > upper");
        }
        if (p.dialect == Dialect::Lpod && r.isConsistencyRestoring()) {
            rep.violations.push_back("cr-rule in LPOD program");
        }
        if (r.label && r.kind == RuleKind::Regular) {
            rep.violations.push_back("label " + *r.label + " on regular rule");
        }
        if (r.kind != RuleKind::Regular) {
            auto name = Program::labelOf(r);
            if (!labels.insert(name).second && dupReported.insert(name).second) {
                rep.violations.push_back("duplicate label " + name);
            }
        }
    }

    if (!p.preferFacts.empty() && p.dialect != Dialect::Crp2) {
        rep.violations.push_back("prefer facts are only allowed in CR-Prolog2 programs");
    }
    else {
        std::map<std::string, RuleKind> kinds;
        for (const auto& r : p.rules) {
            if (r.kind != RuleKind::Regular) {
                kinds.emplace(Program::labelOf(r), r.kind);
            }
        }
        for (const auto& f : p.preferFacts) {
            for (const auto* name : {&f.first, &f.second}) {
                auto it = kinds.find(*name);
                if (it == kinds.end()) {
                    rep.violations.push_back("unknown label " + *name);
                }
                else if (!(it->second == RuleKind::Cr || it->second == RuleKind::OrderedCr)) {
                    rep.violations.push_back("prefer over non-cr rule " + *name);
                }
            }
        }
    }
    return rep;
}

Program canonicalize(Program p) {
    auto rank = [&](RuleKind k) {
        if (p.dialect == Dialect::Lpod) {
            return 0;
        }
        switch (k) {
            case RuleKind::Cr       : return 0;
            case RuleKind::OrderedCr: return 1;
            default                 : return 2;
        }
    };
    std::vector<Rule*> order;
    for (auto& r : p.rules) {
        if (r.kind == RuleKind::Regular) {
            r.index = 0;
        }
        else {
            order.push_back(&r);
        }
    }
    std::stable_sort(order.begin(), order.end(), [&](const Rule* a, const Rule* b) { return rank(a->kind) < rank(b->kind); });
    int next = 1;
    for (auto* r : order) {
        r->index = next++;
    }
    return p;
}

} // namespace lpodc
