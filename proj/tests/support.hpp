//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#pragma once

#include <lpodc/check.hpp>
#include <lpodc/generator.hpp>
#include <lpodc/parser.hpp>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace lpodc::test {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string sourcePath(const std::string& rel) {
    return std::string(LPODC_SOURCE_DIR) + "/" + rel;
}

inline Program sample(const std::string& name) {
    auto dialect = name.ends_with(".crp") ? Dialect::Crp2 : Dialect::Lpod;
    return parse(slurp(sourcePath("samples/" + name)), dialect);
}

inline std::string golden(const std::string& name) {
    return slurp(sourcePath("tests/golden/" + name));
}

inline AtomSet atoms(std::initializer_list<const char*> names) {
    AtomSet out;
    for (const auto* n : names) {
        out.insert(atomFromString(n));
    }
    return out;
}

/// Seeds of the random corpora shared by the property suites and the acceptance run.
inline constexpr std::uint64_t kLpodSeed   = 20261019;
inline constexpr std::uint64_t kCrpSeed    = 1910;
inline constexpr std::uint64_t kGroundSeed = 5;

inline std::vector<Program> lpodCorpus(std::size_t n = 200) {
    std::mt19937_64      rng(kLpodSeed);
    std::vector<Program> out;
    while (out.size() != n) {
        out.push_back(randomLpod(rng));
    }
    return out;
}

inline std::vector<Program> crpCorpus(std::size_t n = 100) {
    std::mt19937_64      rng(kCrpSeed);
    std::vector<Program> out;
    while (out.size() != n) {
        out.push_back(randomCrp(rng));
    }
    return out;
}

inline EvalOptions unlimited() {
    EvalOptions o;
    o.solve.engine.cap = 0;
    return o;
}

} // namespace lpodc::test
