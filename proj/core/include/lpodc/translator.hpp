//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#pragma once

#include <lpodc/asp.hpp>
#include <lpodc/lpod.hpp>

#include <stdexcept>

namespace lpodc {

/// Thrown for an LPOD without ordered rules, which has no assumption degrees.
class DegenerateProgram : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Tags of the statements that select assumption tuples.
inline constexpr std::string_view kTagApChoice = "ap-choice";
inline constexpr std::string_view kTagApWeak   = "ap-weak";

/// Choice over ap(X1,...,Xm), the weak constraint, the extended regular rules, the
/// assumption rules of every ordered rule and the degree rules. No constants.
[[nodiscard]] asp::Document lpod2aspBase(const Program& p);

/// Rule block comparing assumption tuples under `c`. Refers to the constant
/// `maxdegree` for cardinality and inclusion.
[[nodiscard]] asp::Document lpod2aspPreference(const Program& p, Criterion c);

/// `#const maxdegree`, the base document and the block for `c`.
[[nodiscard]] asp::Document lpod2asp(const Program& p, Criterion c);

/// Translation of a canonical CR-Prolog2 program. The rule-wise dominance block is
/// appended when the program has prefer facts.
[[nodiscard]] asp::Document crp2asp(const Program& p);

/// max n_i over the ordered rules.
[[nodiscard]] int maxDegree(const Program& p);

} // namespace lpodc
