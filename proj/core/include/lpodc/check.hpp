//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#pragma once

#include <lpodc/evaluator.hpp>

#include <string>
#include <vector>

namespace lpodc {

/// Result of comparing the reference semantics with the evaluated translation.
struct CheckReport {
    std::size_t              candidates = 0; ///< oracle candidate answer sets
    std::size_t              preferred  = 0; ///< oracle preferred answer sets
    std::vector<std::string> mismatches;     ///< one line per disagreeing property

    [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

/// Split-program candidates vs assumption-program candidates, candidates with
/// degrees vs the translation, and preferred sets under `c` vs pAS.
[[nodiscard]] CheckReport checkLpod(const Program& p, Criterion c, const EvalOptions& opts = {});

/// Generalized answer sets vs assumption programs and vs the translation, then
/// candidates and preferred answer sets vs candidate and pAS.
[[nodiscard]] CheckReport checkCrp(const Program& p, const EvalOptions& opts = {},
                                   OrderedChoice choice = OrderedChoice::Optional);

} // namespace lpodc
