//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include <lpodc/engine.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

namespace lpodc {

CapExceeded::CapExceeded(std::size_t needed, std::size_t cap)
    : std::runtime_error("atom cap exceeded: search needs " + std::to_string(needed) + " guessed atoms, cap is " +
                         std::to_string(cap))
    , needed_(needed)
    , cap_(cap) {}

AtomId GroundProgram::intern(const Atom& a) {
    auto [it, added] = index_.emplace(a, static_cast<AtomId>(atoms_.size()));
    if (added) {
        atoms_.push_back(a);
    }
    return it->second;
}

std::optional<AtomId> GroundProgram::find(const Atom& a) const {
    auto it = index_.find(a);
    return it == index_.end() ? std::nullopt : std::optional<AtomId>(it->second);
}

GroundBody GroundProgram::makeBody(const std::vector<Literal>& body) {
    GroundBody b;
    for (const auto& l : body) {
        (l.negated ? b.negative : b.positive).push_back(intern(l.atom));
    }
    return b;
}

GroundProgram& GroundProgram::fact(const Atom& a) { return rule(a, {}); }

GroundProgram& GroundProgram::rule(const Atom& head, const std::vector<Literal>& body) {
    GroundRule r;
    r.head      = GroundRule::Head::Atom;
    r.headAtoms = {intern(head)};
    r.body      = makeBody(body);
    rules.push_back(std::move(r));
    return *this;
}

GroundProgram& GroundProgram::constraint(const std::vector<Literal>& body) {
    GroundRule r;
    r.body = makeBody(body);
    rules.push_back(std::move(r));
    return *this;
}

GroundProgram& GroundProgram::choice(const std::vector<Atom>& head, std::optional<std::int64_t> lower,
                                     std::optional<std::int64_t> upper, const std::vector<Literal>& body) {
    GroundRule r;
    r.head = GroundRule::Head::Choice;
    for (const auto& a : head) {
        r.headAtoms.push_back(intern(a));
    }
    r.lower = lower;
    r.upper = upper;
    r.body  = makeBody(body);
    rules.push_back(std::move(r));
    return *this;
}

GroundProgram& GroundProgram::weakConstraint(const std::vector<Literal>& body, std::int64_t weight,
                                             std::vector<Value> terms) {
    weak.push_back(WeakConstraint{makeBody(body), weight, std::move(terms)});
    return *this;
}

GroundProgram& GroundProgram::addRules(const std::vector<Rule>& in) {
    for (const auto& r : in) {
        if (r.choice) {
            choice(r.head, r.choice->lower, r.choice->upper, r.body);
        }
        else if (r.head.empty()) {
            constraint(r.body);
        }
        else {
            rule(r.head.front(), r.body);
        }
    }
    return *this;
}

namespace {

std::string bodyStr(const GroundProgram& p, const GroundBody& b) {
    std::vector<std::string> parts;
    for (auto a : b.positive) {
        parts.push_back(p.atom(a).str());
    }
    for (auto a : b.negative) {
        parts.push_back("not " + p.atom(a).str());
    }
    for (const auto& agg : b.aggregates) {
        std::string s = agg.lower ? std::to_string(*agg.lower) : "";
        s += "{";
        for (std::size_t i = 0; i != agg.elements.size(); ++i) {
            s += i ? "; " : "";
            s += (agg.elements[i].negated ? "not " : "") + p.atom(agg.elements[i].atom).str();
        }
        if (agg.fixed) {
            s += (agg.elements.empty() ? "" : "; ") + std::string("#true*") + std::to_string(agg.fixed);
        }
        s += "}";
        s += agg.upper ? std::to_string(*agg.upper) : "";
        parts.push_back(s);
    }
    std::string out;
    for (std::size_t i = 0; i != parts.size(); ++i) {
        out += (i ? ", " : "") + parts[i];
    }
    return out;
}

} // namespace

std::string GroundProgram::str() const {
    std::ostringstream os;
    for (const auto& r : rules) {
        switch (r.head) {
            case GroundRule::Head::Atom: os << atom(r.headAtoms.front()).str(); break;
            case GroundRule::Head::None: break;
            case GroundRule::Head::Choice: {
                if (r.lower) {
                    os << *r.lower;
                }
                os << "{";
                for (std::size_t i = 0; i != r.headAtoms.size(); ++i) {
                    os << (i ? "; " : "") << atom(r.headAtoms[i]).str();
                }
                os << "}";
                if (r.upper) {
                    os << *r.upper;
                }
                break;
            }
        }
        auto b = bodyStr(*this, r.body);
        if (!b.empty() || r.head == GroundRule::Head::None) {
            os << (r.head == GroundRule::Head::None ? ":- " : " :- ") << b;
        }
        os << ".\n";
    }
    for (const auto& w : weak) {
        os << ":~ " << bodyStr(*this, w.body) << ". [" << w.weight;
        for (const auto& t : w.terms) {
            os << ", " << t.str();
        }
        os << "]\n";
    }
    return os.str();
}

namespace {

using Truth = std::vector<char>;

bool holds(const GroundLiteral& l, const Truth& t) { return (t[l.atom] != 0) != l.negated; }

bool aggregateHolds(const CountAggregate& agg, const Truth& t) {
    auto n = agg.fixed;
    for (const auto& e : agg.elements) {
        n += holds(e, t) ? 1 : 0;
    }
    return (!agg.lower || n >= *agg.lower) && (!agg.upper || n <= *agg.upper);
}

/// Negative literals and aggregates, which the reduct evaluates against the interpretation.
bool contextHolds(const GroundBody& b, const Truth& t) {
    return std::none_of(b.negative.begin(), b.negative.end(), [&](AtomId a) { return t[a] != 0; }) &&
           std::all_of(b.aggregates.begin(), b.aggregates.end(), [&](const CountAggregate& g) { return aggregateHolds(g, t); });
}

bool bodyHolds(const GroundBody& b, const Truth& t) {
    return std::all_of(b.positive.begin(), b.positive.end(), [&](AtomId a) { return t[a] != 0; }) && contextHolds(b, t);
}

bool boundsHold(const GroundRule& r, const Truth& t) {
    auto n = std::count_if(r.headAtoms.begin(), r.headAtoms.end(), [&](AtomId a) { return t[a] != 0; });
    return (!r.lower || n >= *r.lower) && (!r.upper || n <= *r.upper);
}

Truth toTruth(const GroundProgram& p, const AtomSet& s, bool& outside) {
    Truth t(p.atomCount(), 0);
    outside = false;
    for (const auto& a : s) {
        if (auto id = p.find(a)) {
            t[*id] = 1;
        }
        else {
            outside = true;
        }
    }
    return t;
}

AtomSet toSet(const GroundProgram& p, const Truth& t) {
    AtomSet s;
    for (AtomId i = 0; i != t.size(); ++i) {
        if (t[i]) {
            s.insert(p.atom(i));
        }
    }
    return s;
}

/// Least model of a negation-free program given as (head, positive body) pairs.
Truth leastModel(std::size_t n, const std::vector<std::pair<AtomId, const std::vector<AtomId>*>>& rules) {
    Truth                            model(n, 0);
    std::vector<std::size_t>         missing(rules.size());
    std::vector<std::vector<std::size_t>> watch(n);
    std::vector<AtomId>              queue;
    for (std::size_t i = 0; i != rules.size(); ++i) {
        missing[i] = rules[i].second->size();
        for (auto a : *rules[i].second) {
            watch[a].push_back(i);
        }
        if (missing[i] == 0 && !model[rules[i].first]) {
            model[rules[i].first] = 1;
            queue.push_back(rules[i].first);
        }
    }
    while (!queue.empty()) {
        auto a = queue.back();
        queue.pop_back();
        for (auto ri : watch[a]) {
            if (--missing[ri] == 0 && !model[rules[ri].first]) {
                model[rules[ri].first] = 1;
                queue.push_back(rules[ri].first);
            }
        }
    }
    return model;
}

bool isAnswerSetTruth(const GroundProgram& p, const Truth& t) {
    std::vector<std::pair<AtomId, const std::vector<AtomId>*>> positive;
    for (const auto& r : p.rules) {
        if (!contextHolds(r.body, t)) {
            continue;
        }
        switch (r.head) {
            case GroundRule::Head::None:
                if (bodyHolds(r.body, t)) {
                    return false;
                }
                break;
            case GroundRule::Head::Atom: positive.emplace_back(r.headAtoms.front(), &r.body.positive); break;
            case GroundRule::Head::Choice:
                if (bodyHolds(r.body, t) && !boundsHold(r, t)) {
                    return false;
                }
                for (auto a : r.headAtoms) {
                    if (t[a]) {
                        positive.emplace_back(a, &r.body.positive);
                    }
                }
                break;
        }
    }
    return leastModel(p.atomCount(), positive) == t;
}

std::int64_t penaltyTruth(const GroundProgram& p, const Truth& t) {
    std::set<std::pair<std::int64_t, std::vector<Value>>> violated;
    for (const auto& w : p.weak) {
        if (bodyHolds(w.body, t)) {
            violated.emplace(w.weight, w.terms);
        }
    }
    std::int64_t sum = 0;
    for (const auto& v : violated) {
        sum += v.first;
    }
    return sum;
}

template <class F>
void forEachAtom(const GroundBody& b, F&& f) {
    for (auto a : b.positive) {
        f(a);
    }
    for (auto a : b.negative) {
        f(a);
    }
    for (const auto& g : b.aggregates) {
        for (const auto& e : g.elements) {
            f(e.atom);
        }
    }
}

/// Depth-first search along a topological order of the strongly connected components
/// of the dependency graph. Components defined without choice rules and without
/// internal negative or aggregate dependencies are computed by fixpoint; all other
/// components are guessed and checked locally.
class ComponentSearch {
public:
    ComponentSearch(const GroundProgram& p, std::size_t cap) : p_(p) {
        auto n = p.atomCount();
        defs_.resize(n);
        std::vector<std::vector<AtomId>> deps(n);
        for (std::size_t ri = 0; ri != p.rules.size(); ++ri) {
            const auto& r = p.rules[ri];
            for (auto h : r.headAtoms) {
                defs_[h].push_back(ri);
                forEachAtom(r.body, [&](AtomId a) { deps[h].push_back(a); });
            }
        }
        tarjan(deps);
        pos_.assign(n, 0);
        for (std::size_t c = 0; c != comps_.size(); ++c) {
            for (auto a : comps_[c].atoms) {
                pos_[a] = c;
            }
        }
        std::size_t guessed = 0;
        for (auto& c : comps_) {
            classify(c);
            if (!c.deterministic) {
                guessed += c.atoms.size();
            }
        }
        if (cap != 0 && guessed > cap) {
            throw CapExceeded(guessed, cap);
        }
        checksAt_.resize(comps_.size() + 1);
        auto levelOf = [&](const std::vector<AtomId>& extra, const GroundBody& b) {
            std::size_t lvl = 0;
            auto        see = [&](AtomId a) { lvl = std::max(lvl, pos_[a] + 1); };
            std::for_each(extra.begin(), extra.end(), see);
            forEachAtom(b, see);
            return lvl;
        };
        for (std::size_t ri = 0; ri != p.rules.size(); ++ri) {
            const auto& r = p.rules[ri];
            if (r.head == GroundRule::Head::None) {
                checksAt_[levelOf({}, r.body)].push_back(ri);
            }
            else if (r.head == GroundRule::Head::Choice && (r.lower || r.upper)) {
                checksAt_[levelOf(r.headAtoms, r.body)].push_back(ri);
            }
        }
    }

    void run(const std::function<void(const Truth&)>& visit) {
        Truth t(p_.atomCount(), 0);
        if (check(0, t)) {
            descend(0, t, visit);
        }
    }

private:
    struct Component {
        std::vector<AtomId>      atoms;
        std::vector<std::size_t> rules; ///< rules with a head atom in the component
        bool                     deterministic = true;
    };

    void tarjan(const std::vector<std::vector<AtomId>>& deps) {
        auto                     n = deps.size();
        std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0);
        std::vector<char>        onStack(n, 0);
        std::vector<AtomId>      stack;
        std::size_t              next = 0;
        // Iterative to keep deep dependency chains off the call stack.
        struct Frame {
            AtomId      v;
            std::size_t edge;
        };
        for (AtomId root = 0; root != n; ++root) {
            if (index[root] != SIZE_MAX) {
                continue;
            }
            std::vector<Frame> frames{{root, 0}};
            index[root] = low[root] = next++;
            stack.push_back(root);
            onStack[root] = 1;
            while (!frames.empty()) {
                auto& f = frames.back();
                if (f.edge < deps[f.v].size()) {
                    auto w = deps[f.v][f.edge++];
                    if (index[w] == SIZE_MAX) {
                        index[w] = low[w] = next++;
                        stack.push_back(w);
                        onStack[w] = 1;
                        frames.push_back({w, 0});
                    }
                    else if (onStack[w]) {
                        low[f.v] = std::min(low[f.v], index[w]);
                    }
                    continue;
                }
                auto v = f.v;
                frames.pop_back();
                if (!frames.empty()) {
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                }
                if (low[v] == index[v]) {
                    Component c;
                    AtomId    w = 0;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        onStack[w] = 0;
                        c.atoms.push_back(w);
                    } while (w != v);
                    std::sort(c.atoms.begin(), c.atoms.end());
                    comps_.push_back(std::move(c));
                }
            }
        }
    }

    void classify(Component& c) {
        std::set<std::size_t> rules;
        for (auto a : c.atoms) {
            rules.insert(defs_[a].begin(), defs_[a].end());
        }
        c.rules.assign(rules.begin(), rules.end());
        auto comp = pos_[c.atoms.front()];
        for (auto ri : c.rules) {
            const auto& r = p_.rules[ri];
            if (r.head == GroundRule::Head::Choice) {
                c.deterministic = false;
                return;
            }
            auto internal = [&](AtomId a) { return pos_[a] == comp; };
            bool neg      = std::any_of(r.body.negative.begin(), r.body.negative.end(), internal);
            for (const auto& g : r.body.aggregates) {
                neg = neg || std::any_of(g.elements.begin(), g.elements.end(),
                                         [&](const GroundLiteral& l) { return internal(l.atom); });
            }
            if (neg) {
                c.deterministic = false;
                return;
            }
        }
    }

    bool check(std::size_t level, const Truth& t) const {
        for (auto ri : checksAt_[level]) {
            const auto& r = p_.rules[ri];
            if (!bodyHolds(r.body, t)) {
                continue;
            }
            if (r.head == GroundRule::Head::None || !boundsHold(r, t)) {
                return false;
            }
        }
        return true;
    }

    /// Least fixpoint of the component's reduct. Atoms of the component start false
    /// in `t`; `guess` provides the values used for negation and choice heads.
    void derive(const Component& c, Truth& t, const Truth* guess) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto ri : c.rules) {
                const auto& r = p_.rules[ri];
                if (!std::all_of(r.body.positive.begin(), r.body.positive.end(), [&](AtomId a) { return t[a] != 0; }) ||
                    !contextHolds(r.body, guess ? *guess : t)) {
                    continue;
                }
                for (auto h : r.headAtoms) {
                    if (pos_[h] != pos_[c.atoms.front()] || t[h]) {
                        continue;
                    }
                    if (r.head == GroundRule::Head::Choice && !(guess && (*guess)[h])) {
                        continue;
                    }
                    t[h]    = 1;
                    changed = true;
                }
            }
        }
    }

    void descend(std::size_t k, Truth& t, const std::function<void(const Truth&)>& visit) {
        if (k == comps_.size()) {
            visit(t);
            return;
        }
        const auto& c = comps_[k];
        if (c.deterministic) {
            derive(c, t, nullptr);
            if (check(k + 1, t)) {
                descend(k + 1, t, visit);
            }
            for (auto a : c.atoms) {
                t[a] = 0;
            }
            return;
        }
        auto  size  = c.atoms.size();
        Truth guess = t;
        for (std::uint64_t bits = 0; bits != (std::uint64_t{1} << size); ++bits) {
            for (std::size_t i = 0; i != size; ++i) {
                guess[c.atoms[i]] = static_cast<char>((bits >> i) & 1U);
            }
            derive(c, t, &guess);
            bool stable = std::all_of(c.atoms.begin(), c.atoms.end(), [&](AtomId a) { return t[a] == guess[a]; });
            if (stable && check(k + 1, t)) {
                descend(k + 1, t, visit);
            }
            for (auto a : c.atoms) {
                t[a] = 0;
            }
        }
    }

    const GroundProgram&                  p_;
    std::vector<std::vector<std::size_t>> defs_;
    std::vector<Component>                comps_;
    std::vector<std::size_t>              pos_;
    std::vector<std::vector<std::size_t>> checksAt_;
};

void enumerate(const GroundProgram& p, const EngineOptions& opts, const std::function<void(const Truth&)>& visit) {
    if (opts.strategy == EngineOptions::Strategy::Components) {
        ComponentSearch(p, opts.cap).run(visit);
        return;
    }
    auto n = p.atomCount();
    if ((opts.cap != 0 && n > opts.cap) || n >= 63) {
        throw CapExceeded(n, opts.cap);
    }
    Truth t(n, 0);
    for (std::uint64_t bits = 0; bits != (std::uint64_t{1} << n); ++bits) {
        for (std::size_t i = 0; i != n; ++i) {
            t[i] = static_cast<char>((bits >> i) & 1U);
        }
        if (isAnswerSetTruth(p, t)) {
            visit(t);
        }
    }
}

} // namespace

GroundProgram reduct(const GroundProgram& p, const AtomSet& interpretation) {
    bool          outside = false;
    auto          t       = toTruth(p, interpretation, outside);
    GroundProgram out;
    for (const auto& a : p.atoms()) {
        out.intern(a);
    }
    for (const auto& r : p.rules) {
        if (!contextHolds(r.body, t)) {
            continue;
        }
        GroundRule base;
        base.body.positive = r.body.positive;
        if (r.head == GroundRule::Head::Choice) {
            for (auto a : r.headAtoms) {
                if (t[a]) {
                    auto copy      = base;
                    copy.head      = GroundRule::Head::Atom;
                    copy.headAtoms = {a};
                    out.rules.push_back(std::move(copy));
                }
            }
            continue;
        }
        base.head      = r.head;
        base.headAtoms = r.headAtoms;
        out.rules.push_back(std::move(base));
    }
    return out;
}

bool isAnswerSet(const GroundProgram& p, const AtomSet& interpretation) {
    bool outside = false;
    auto t       = toTruth(p, interpretation, outside);
    return !outside && isAnswerSetTruth(p, t);
}

std::vector<AnswerSet> answerSets(const GroundProgram& p, const EngineOptions& opts) {
    std::vector<AnswerSet> out;
    enumerate(p, opts, [&](const Truth& t) { out.push_back(AnswerSet{toSet(p, t), std::nullopt}); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AnswerSet> optimalAnswerSets(const GroundProgram& p, const EngineOptions& opts) {
    std::vector<AnswerSet> out;
    auto                   best = std::numeric_limits<std::int64_t>::max();
    enumerate(p, opts, [&](const Truth& t) {
        auto cost = penaltyTruth(p, t);
        if (cost > best) {
            return;
        }
        if (cost < best) {
            best = cost;
            out.clear();
        }
        out.push_back(AnswerSet{toSet(p, t), cost});
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t penalty(const GroundProgram& p, const AtomSet& interpretation) {
    bool outside = false;
    return penaltyTruth(p, toTruth(p, interpretation, outside));
}

} // namespace lpodc
