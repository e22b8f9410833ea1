//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#pragma once

#include <lpodc/engine.hpp>

#include <optional>
#include <string_view>

namespace lpodc {

using DegreeList     = std::vector<int>;
using AssumptionList = std::vector<int>;

enum class Criterion { Cardinality, Inclusion, Pareto, PenaltySum };

inline constexpr Criterion kCriteria[] = {Criterion::Cardinality, Criterion::Inclusion, Criterion::Pareto,
                                          Criterion::PenaltySum};

[[nodiscard]] std::string_view toString(Criterion c);
[[nodiscard]] std::optional<Criterion> criterionFromString(std::string_view s);

struct Candidate {
    AtomSet        atoms; ///< over the program signature
    DegreeList     degrees;
    AssumptionList assumption;

    friend bool operator==(const Candidate&, const Candidate&) = default;
    friend auto operator<=>(const Candidate&, const Candidate&) = default;
};

enum class Comparison { FirstPreferred, SecondPreferred, Neither };

/// The i-th option (1-based) of an ordered rule: C^i <- Body, not C^1, ..., not C^{i-1}.
[[nodiscard]] Rule option(const Rule& r, int i);

/// All split programs, ordered by the option tuple (lexicographic).
[[nodiscard]] std::vector<GroundProgram> splitPrograms(const Program& p);

/// Atom `body_i` for the ordered rule with index i.
[[nodiscard]] Atom bodyAtom(int index);

/// O_i(x) for the ordered rule `r` (index i = r.index): body_i <- Body_i, then the
/// constraints for x = 0 or x > 0, the head rule C^x <- body_i, and for every j != x
/// the constraint <- body_i, not C^1, ..., not C^{j-1}, C^j.
[[nodiscard]] std::vector<Rule> assumption(const Rule& r, int x);

/// Regular rules plus O_i(x_i) for every ordered rule.
[[nodiscard]] GroundProgram assumptionProgram(const Program& p, const AssumptionList& x);

/// All tuples (x_1..x_m) with 0 <= x_i <= n_i, lexicographic.
[[nodiscard]] std::vector<AssumptionList> lpodAssumptionTuples(const Program& p);

/// d_i = 1 if x_i = 0, else x_i.
[[nodiscard]] DegreeList degreesFromAssumption(const AssumptionList& x);

/// Satisfaction degrees of `s` computed from the rules.
[[nodiscard]] DegreeList degreesOf(const Program& p, const AtomSet& s);

/// Candidate answer sets via split programs (projection onto the signature).
[[nodiscard]] std::vector<AtomSet> splitCandidates(const Program& p, const SolveOptions& opts = {});

/// Candidate answer sets via assumption programs, sorted.
[[nodiscard]] std::vector<Candidate> assumptionCandidates(const Program& p, const SolveOptions& opts = {});

/// True iff degree list `a` is preferred to `b` under `c`.
[[nodiscard]] bool preferredTo(const DegreeList& a, const DegreeList& b, Criterion c);

[[nodiscard]] Comparison compare(const Candidate& s1, const Candidate& s2, Criterion c);

/// Candidates not beaten by any other candidate under `c`.
[[nodiscard]] std::vector<Candidate> preferred(const std::vector<Candidate>& candidates, Criterion c);
[[nodiscard]] std::vector<Candidate> preferred(const Program& p, Criterion c, const SolveOptions& opts = {});

/// Projection of candidates onto their atom sets, sorted and unique.
[[nodiscard]] std::vector<AtomSet> atomSets(const std::vector<Candidate>& candidates);

} // namespace lpodc
