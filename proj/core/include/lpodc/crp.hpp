//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#pragma once

#include <lpodc/lpod.hpp>

namespace lpodc {

/// `appl(i)` for a cr-rule or ordered cr-rule.
[[nodiscard]] Atom applRule(int index);
/// `appl(choice(r,j))`.
[[nodiscard]] Atom applChoice(int rule, int position);
/// The term `choice(r,j)`.
[[nodiscard]] Value choiceTerm(int rule, int position);

/// Whether an ordered rule whose body is false may leave every appl(choice(r,j))
/// out of a generalized answer set.
enum class OrderedChoice {
    Optional, ///< any subset of the appl atoms
    Required, ///< every ordered rule selects a position
};

/// H_Pi for a canonical CR-Prolog2 program. cr-rules and ordered cr-rules get the
/// guard appl(i); every ordered head is expanded into choice rules over
/// appl(choice(r,j)) with fired(r), the prefer chain and the constraint
/// <- Body(r), not fired(r); the isPreferred closure is instantiated over rule
/// indices of cr-rules and ordered cr-rules and all choice(r,j) terms. With
/// OrderedChoice::Required every ordered rule also gets <- not fired(r).
[[nodiscard]] GroundProgram buildHpi(const Program& p, OrderedChoice choice = OrderedChoice::Optional);

/// All appl atoms occurring in H_Pi.
[[nodiscard]] std::vector<Atom> applAtoms(const Program& p);

/// Sets A of appl atoms tried for generalized answer sets: appl(choice(r,j)) for an
/// ordered cr-rule only together with appl(r), and at most one position per rule.
[[nodiscard]] std::vector<AtomSet> applSelections(const Program& p);

/// Answer sets of H_Pi u A over all selections A, sorted.
[[nodiscard]] std::vector<AtomSet> generalizedAnswerSets(const Program& p, const SolveOptions& opts = {},
                                                         OrderedChoice choice = OrderedChoice::Optional);

/// S1 dominates S2 iff appl(r1) in S1, appl(r2) in S2 and isPreferred(r1,r2) in both.
[[nodiscard]] bool dominates(const AtomSet& s1, const AtomSet& s2);

/// Generalized answer sets not dominated by any other one.
[[nodiscard]] std::vector<AtomSet> candidateAnswerSets(const std::vector<AtomSet>& generalized);

/// Candidates whose appl atoms are subset-minimal among the candidates.
[[nodiscard]] std::vector<AtomSet> minimalCandidates(const std::vector<AtomSet>& candidates);

/// Preferred answer sets projected onto the signature, sorted and unique.
[[nodiscard]] std::vector<AtomSet> preferredAnswerSets(const Program& p, const SolveOptions& opts = {},
                                                       OrderedChoice choice = OrderedChoice::Optional);

/// Projection onto the program signature, sorted and unique.
[[nodiscard]] std::vector<AtomSet> projectAll(const Program& p, const std::vector<AtomSet>& sets);

/// Tuples over D_i: {0,1} for cr-rules, {0..n_i} for ordered cr-rules, {1..n_i} for
/// ordered rules, lexicographic.
[[nodiscard]] std::vector<AssumptionList> crpAssumptionTuples(const Program& p);

/// AP(x): regular rules, applied cr-rules, chosen assumptions, prefer facts over rule
/// indices, the isPreferred closure, and <- isPreferred(r1,r2) for applied r1, r2.
[[nodiscard]] GroundProgram crpAssumptionProgram(const Program& p, const AssumptionList& x);

struct TupleAnswerSets {
    AssumptionList       assumption;
    std::vector<AtomSet> answerSets;
};

/// Answer sets of every consistent assumption program.
[[nodiscard]] std::vector<TupleAnswerSets> crpAssumptionAnswerSets(const Program& p, const SolveOptions& opts = {});

} // namespace lpodc
