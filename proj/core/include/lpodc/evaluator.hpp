//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#pragma once

#include <lpodc/crp.hpp>
#include <lpodc/translator.hpp>

namespace lpodc {

/// How the preference layer of a translation is evaluated.
enum class PreferenceRoute {
    Encoded, ///< ground the layer's statements over the tuple facts and solve them
    Native,  ///< compute the layer's relations directly from the tuple facts
};

struct EvalOptions {
    SolveOptions    solve;
    PreferenceRoute route = PreferenceRoute::Encoded;
};

struct TupleEvaluation {
    AssumptionList       assumption;
    std::vector<AtomSet> answerSets; ///< answer sets of the tuple's partial program
};

struct EvaluatedTranslation {
    std::vector<TupleEvaluation> tuples;     ///< consistent tuples, lexicographic
    AtomSet                      preference; ///< atoms of the preference layer
    std::vector<AssumptionList>  candidates; ///< LPOD: every consistent tuple; CRP: candidate(x)
    std::vector<AssumptionList>  preferred;  ///< pAS(x)

    [[nodiscard]] const TupleEvaluation* find(const AssumptionList& x) const;
};

/// { a(v) | a(v, x1, ..., xm) in s and a(v) in sigma }.
[[nodiscard]] AtomSet shrink(const AtomSet& s, const AssumptionList& x, const AtomSet& sigma);

/// Tuples selectable by the ap choice of a translated document, lexicographic.
[[nodiscard]] std::vector<AssumptionList> selectableTuples(const asp::Document& doc);

/// Ground partial program of tuple x: the tuple layer without the ap choice and the
/// weak constraint, plus the fact ap(x).
[[nodiscard]] GroundProgram tupleProgram(const asp::Document& doc, const AssumptionList& x);

/// Evaluates `doc` = lpod2asp(p, c) tuple by tuple: the partial program of every
/// tuple x is the tuple layer with the ap choice replaced by the fact ap(x); the
/// preference layer is then evaluated over the consistent tuples.
[[nodiscard]] EvaluatedTranslation evalLpod(const asp::Document& doc, const Program& p, Criterion c,
                                            const EvalOptions& opts = {});

/// Same for `doc` = crp2asp(p).
[[nodiscard]] EvaluatedTranslation evalCrp(const asp::Document& doc, const Program& p, const EvalOptions& opts = {});

/// Candidates on sigma with degrees read from the degree atoms, sorted.
[[nodiscard]] std::vector<Candidate> lpodCandidates(const EvaluatedTranslation& e, const Program& p);
/// Candidates whose tuple satisfies pAS, sorted.
[[nodiscard]] std::vector<Candidate> lpodPreferred(const EvaluatedTranslation& e, const Program& p);

/// Shrunk answer sets of the given tuples, sorted and unique.
[[nodiscard]] std::vector<AtomSet> onSigma(const EvaluatedTranslation& e, const std::vector<AssumptionList>& tuples,
                                           const Program& p);
/// Shrunk answer sets of all consistent tuples, sorted and unique.
[[nodiscard]] std::vector<AtomSet> generalizedOnSigma(const EvaluatedTranslation& e, const Program& p);

/// Optimal answer sets of the whole ground document.
[[nodiscard]] std::vector<AnswerSet> solveMonolithic(const asp::Document& doc, const EngineOptions& opts = {});

} // namespace lpodc
