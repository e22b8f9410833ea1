//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#pragma once

#include <lpodc/asp.hpp>
#include <lpodc/engine.hpp>

#include <stdexcept>

namespace lpodc::asp {

class GroundingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instantiates `d` together with the given facts.
///
/// Atoms are first collected into a domain by a fixpoint that ignores negative
/// literals and non-binding aggregates; every statement is then instantiated over
/// that domain. Negative literals over atoms outside the domain are dropped, and
/// aggregates whose elements are all decided are evaluated in place.
/// Conditions of aggregate elements may contain comparisons only.
[[nodiscard]] GroundProgram ground(const Document& d, const std::vector<Atom>& facts = {});

/// Same, for a statement list and its constants.
[[nodiscard]] GroundProgram ground(const std::vector<Statement>& statements, const std::vector<Constant>& constants,
                                   const std::vector<Atom>& facts);

} // namespace lpodc::asp
