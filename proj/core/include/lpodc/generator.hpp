//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#pragma once

#include <lpodc/engine.hpp>

#include <functional>
#include <random>

namespace lpodc {

struct LpodShape {
    int  atoms      = 4; ///< signature a, b, c, ...
    int  ordered    = 3; ///< at most, at least 1
    int  maxOptions = 3; ///< n_i in 2..maxOptions
    int  regular    = 3; ///< at most
    int  maxBody    = 2;
    bool choices    = true;
};

struct CrpShape {
    int  atoms     = 4;
    int  cr        = 2; ///< at most
    int  orderedCr = 1; ///< at most
    int  ordered   = 1; ///< at most
    int  regular   = 4; ///< at most
    int  maxBody   = 2;
    bool prefer    = true; ///< at most one prefer fact
};

struct GroundShape {
    int atoms   = 10; ///< at most
    int rules   = 8;  ///< at most
    int maxBody = 3;
};

/// Random canonical LPOD with at least one ordered rule.
[[nodiscard]] Program randomLpod(std::mt19937_64& rng, const LpodShape& shape = {});

/// Random canonical CR-Prolog2 program. Non-regular rules are labelled r1, r2, ...
[[nodiscard]] Program randomCrp(std::mt19937_64& rng, const CrpShape& shape = {});

/// Random regular rules (normal rules, constraints and some choice rules) over
/// atoms p0, p1, ...
[[nodiscard]] std::vector<Rule> randomRegularRules(std::mt19937_64& rng, const GroundShape& shape = {});

/// Greedy one-step reduction of `p` while `fails` holds: drops prefer facts, rules,
/// body literals and ordered-head options. Only valid programs are tried.
[[nodiscard]] Program minimize(Program p, const std::function<bool(const Program&)>& fails);

} // namespace lpodc
