//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#pragma once

#include <lpodc/value.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lpodc {

enum class Dialect { Lpod, Crp2 };

[[nodiscard]] std::string_view toString(Dialect d);

enum class RuleKind {
    Regular,   ///< Head <- Body, where Head is an atom, a bounded choice, or empty.
    Ordered,   ///< C1 x ... x Cn <- Body
    Cr,        ///< Head <-+ Body
    OrderedCr, ///< C1 x ... x Cn <-+ Body
};

[[nodiscard]] std::string_view toString(RuleKind k);

/// Byte range plus 1-based line/column of the range start.
struct SourceSpan {
    std::size_t start  = 0;
    std::size_t end    = 0;
    std::size_t line   = 1;
    std::size_t column = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct ChoiceBounds {
    std::optional<int> lower;
    std::optional<int> upper;

    friend bool operator==(const ChoiceBounds&, const ChoiceBounds&) = default;
};

struct Rule {
    RuleKind                    kind = RuleKind::Regular;
    std::vector<Atom>           head;
    std::optional<ChoiceBounds> choice; ///< set iff the head is `l {a1;...;aq} u`
    std::vector<Literal>        body;
    std::optional<std::string>  label;
    int                         index = 0; ///< 1..m for non-regular rules after canonicalize
    SourceSpan                  span;

    [[nodiscard]] bool isConstraint() const { return kind == RuleKind::Regular && head.empty() && !choice; }
    [[nodiscard]] bool isOrderedHead() const { return kind == RuleKind::Ordered || kind == RuleKind::OrderedCr; }
    [[nodiscard]] bool isConsistencyRestoring() const { return kind == RuleKind::Cr || kind == RuleKind::OrderedCr; }
    [[nodiscard]] std::size_t headSize() const { return head.size(); }

    /// Equality ignores the source span.
    friend bool operator==(const Rule& lhs, const Rule& rhs);
};

/// `prefer(first, second).` where both name cr-rules or ordered cr-rules.
struct PreferFact {
    std::string first;
    std::string second;
    SourceSpan  span;

    friend bool operator==(const PreferFact& lhs, const PreferFact& rhs) {
        return lhs.first == rhs.first && lhs.second == rhs.second;
    }
};

/// A propositional LPOD or CR-Prolog2 program.
class Program {
public:
    Program() = default;
    explicit Program(Dialect d) : dialect(d) {}

    Dialect                 dialect = Dialect::Lpod;
    std::vector<Rule>       rules;
    std::vector<PreferFact> preferFacts;

    /// Every atom that occurs in a rule (prefer facts are not part of it).
    [[nodiscard]] AtomSet signature() const;

    /// Number of non-regular rules.
    [[nodiscard]] std::size_t nonRegularCount() const;

    /// Non-regular rules sorted by index (1..m). Requires a canonical program.
    [[nodiscard]] std::vector<const Rule*> indexed() const;

    /// Counts per class for Crp2: k cr-rules, l-k ordered cr-rules, m-l ordered rules.
    struct Layout {
        std::size_t k = 0;
        std::size_t l = 0;
        std::size_t m = 0;
    };
    [[nodiscard]] Layout layout() const;

    /// Label of a non-regular rule: the explicit one or `r<index>`.
    [[nodiscard]] static std::string labelOf(const Rule& r);

    /// Label -> index of all non-regular rules. Requires a canonical program.
    [[nodiscard]] std::map<std::string, int> labelIndex() const;

    /// Prefer facts as (index, index) pairs; unknown labels are skipped.
    [[nodiscard]] std::vector<std::pair<int, int>> preferIndices() const;

    friend bool operator==(const Program&, const Program&) = default;
};

struct ValidationReport {
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Predicates used by the translations and the CR-Prolog2 semantics.
[[nodiscard]] bool isReservedPredicate(std::string_view name);

[[nodiscard]] ValidationReport validateProgram(const Program& p);

/// Assigns rule indices. Lpod: ordered rules 1..m in textual order. Crp2: cr-rules
/// 1..k, ordered cr-rules k+1..l, ordered rules l+1..m, textual order within each
/// class. Rule order in the vector is unchanged.
[[nodiscard]] Program canonicalize(Program p);

} // namespace lpodc
