//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include <lpodc/check.hpp>

#include <set>

namespace lpodc {

namespace {

std::string show(const std::vector<AtomSet>& sets) {
    std::string out = "[";
    for (const auto& s : sets) {
        out += (out.size() > 1 ? ", " : "") + toString(s);
    }
    return out + "]";
}

std::string show(const std::vector<Candidate>& cs) {
    std::string out = "[";
    for (const auto& c : cs) {
        out += (out.size() > 1 ? ", " : "") + toString(c.atoms) + "/(";
        for (std::size_t i = 0; i != c.degrees.size(); ++i) {
            out += (i ? "," : "") + std::to_string(c.degrees[i]);
        }
        out += ")";
    }
    return out + "]";
}

template <class T>
void expectEqual(CheckReport& rep, const char* what, const std::vector<T>& oracle, const std::vector<T>& other) {
    if (oracle != other) {
        rep.mismatches.push_back(std::string(what) + ": oracle " + show(oracle) + " != " + show(other));
    }
}

std::vector<Candidate> withoutAssumption(std::vector<Candidate> cs) {
    for (auto& c : cs) {
        c.assumption.clear();
    }
    std::sort(cs.begin(), cs.end());
    return cs;
}

} // namespace

CheckReport checkLpod(const Program& p, Criterion c, const EvalOptions& opts) {
    CheckReport rep;
    auto        split = splitCandidates(p, opts.solve);
    std::vector<Candidate> oracle;
    for (const auto& s : split) {
        oracle.push_back(Candidate{s, degreesOf(p, s), {}});
    }
    std::sort(oracle.begin(), oracle.end());
    auto best      = preferred(oracle, c);
    rep.candidates = oracle.size();
    rep.preferred  = best.size();

    auto byAssumption = assumptionCandidates(p, opts.solve);
    expectEqual(rep, "assumption-program candidates", split, atomSets(byAssumption));

    auto e = evalLpod(lpod2asp(p, c), p, c, opts);
    expectEqual(rep, "translation candidates", oracle, withoutAssumption(lpodCandidates(e, p)));
    expectEqual(rep, "translation preferred", best, withoutAssumption(lpodPreferred(e, p)));
    return rep;
}

CheckReport checkCrp(const Program& p, const EvalOptions& opts, OrderedChoice choice) {
    CheckReport rep;
    auto        generalized = generalizedAnswerSets(p, opts.solve, choice);
    auto        candidates  = candidateAnswerSets(generalized);
    auto        best        = projectAll(p, minimalCandidates(candidates));
    auto        onSigma_    = projectAll(p, generalized);
    auto        candOnSigma = projectAll(p, candidates);
    rep.candidates          = candOnSigma.size();
    rep.preferred           = best.size();

    std::vector<AtomSet> byAssumption;
    for (const auto& t : crpAssumptionAnswerSets(p, opts.solve)) {
        byAssumption.insert(byAssumption.end(), t.answerSets.begin(), t.answerSets.end());
    }
    expectEqual(rep, "assumption-program answer sets", onSigma_, projectAll(p, byAssumption));

    auto e = evalCrp(crp2asp(p), p, opts);
    expectEqual(rep, "translation generalized", onSigma_, generalizedOnSigma(e, p));
    expectEqual(rep, "translation candidates", candOnSigma, onSigma(e, e.candidates, p));
    expectEqual(rep, "translation preferred", best, onSigma(e, e.preferred, p));
    return rep;
}

} // namespace lpodc
