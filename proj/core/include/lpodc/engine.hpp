//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#pragma once

#include <lpodc/program.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lpodc {

using AtomId = std::uint32_t;

struct GroundLiteral {
    AtomId atom    = 0;
    bool   negated = false;

    friend bool operator==(const GroundLiteral&, const GroundLiteral&) = default;
    friend auto operator<=>(const GroundLiteral&, const GroundLiteral&) = default;
};

/// `lower { e1; ...; en } upper` counting true elements. `fixed` counts elements
/// already known to be true (instantiated comparisons).
struct CountAggregate {
    std::optional<std::int64_t> lower;
    std::optional<std::int64_t> upper;
    std::vector<GroundLiteral>  elements;
    std::int64_t                fixed = 0;

    friend bool operator==(const CountAggregate&, const CountAggregate&) = default;
};

struct GroundBody {
    std::vector<AtomId>         positive;
    std::vector<AtomId>         negative;
    std::vector<CountAggregate> aggregates;

    friend bool operator==(const GroundBody&, const GroundBody&) = default;
};

struct GroundRule {
    enum class Head { Atom, None, Choice };

    Head                        head = Head::None;
    std::vector<AtomId>         headAtoms; ///< one atom for Head::Atom
    std::optional<std::int64_t> lower;     ///< choice bounds
    std::optional<std::int64_t> upper;
    GroundBody                  body;

    friend bool operator==(const GroundRule&, const GroundRule&) = default;
};

struct WeakConstraint {
    GroundBody         body;
    std::int64_t       weight = 0;
    std::vector<Value> terms;
};

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t needed, std::size_t cap);
    [[nodiscard]] std::size_t needed() const { return needed_; }
    [[nodiscard]] std::size_t cap() const { return cap_; }

private:
    std::size_t needed_;
    std::size_t cap_;
};

/// Finite propositional program over interned atoms.
class GroundProgram {
public:
    /// Interns `a` and returns its id.
    AtomId intern(const Atom& a);
    [[nodiscard]] std::optional<AtomId> find(const Atom& a) const;
    [[nodiscard]] const Atom& atom(AtomId id) const { return atoms_[id]; }
    [[nodiscard]] std::size_t atomCount() const { return atoms_.size(); }
    [[nodiscard]] const std::vector<Atom>& atoms() const { return atoms_; }

    std::vector<GroundRule>     rules;
    std::vector<WeakConstraint> weak;

    // Builders over atoms.
    GroundProgram& fact(const Atom& a);
    GroundProgram& rule(const Atom& head, const std::vector<Literal>& body);
    GroundProgram& constraint(const std::vector<Literal>& body);
    GroundProgram& choice(const std::vector<Atom>& head, std::optional<std::int64_t> lower,
                          std::optional<std::int64_t> upper, const std::vector<Literal>& body = {});
    GroundProgram& weakConstraint(const std::vector<Literal>& body, std::int64_t weight, std::vector<Value> terms);

    /// Adds the rules of a regular (or already split) propositional rule list.
    GroundProgram& addRules(const std::vector<Rule>& rules);

    GroundBody makeBody(const std::vector<Literal>& body);

    [[nodiscard]] std::string str() const;

private:
    std::vector<Atom>       atoms_;
    std::map<Atom, AtomId>  index_;
};

struct EngineOptions {
    enum class Strategy {
        Components, ///< depth-first search over strongly connected components
        Subsets,    ///< check every subset of the signature (reference)
    };
    /// Maximum number of atoms the search may guess (choice atoms and atoms on
    /// cycles). For Strategy::Subsets the whole signature counts. 0 = unlimited.
    std::size_t cap      = 24;
    Strategy    strategy = Strategy::Components;
};

/// Options shared by the semantics modules and the evaluator.
struct SolveOptions {
    EngineOptions engine;
    std::size_t   parallel = 1; ///< worker threads for independent programs
};

/// Reduct relative to `interpretation`: negation-free rules (choice heads keep the
/// atoms in the interpretation; aggregates are evaluated against it).
[[nodiscard]] GroundProgram reduct(const GroundProgram& p, const AtomSet& interpretation);

/// True iff `interpretation` is the least model of the reduct and satisfies all
/// constraints and choice bounds.
[[nodiscard]] bool isAnswerSet(const GroundProgram& p, const AtomSet& interpretation);

/// All answer sets, sorted. Penalties are unset.
[[nodiscard]] std::vector<AnswerSet> answerSets(const GroundProgram& p, const EngineOptions& opts = {});

/// Answer sets of minimum total weak-constraint penalty, annotated with it.
[[nodiscard]] std::vector<AnswerSet> optimalAnswerSets(const GroundProgram& p, const EngineOptions& opts = {});

/// Penalty of `interpretation`: the sum of weights over distinct violated
/// (weight, terms) tuples.
[[nodiscard]] std::int64_t penalty(const GroundProgram& p, const AtomSet& interpretation);

} // namespace lpodc
