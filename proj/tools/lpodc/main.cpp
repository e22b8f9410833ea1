//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include <lpodc/check.hpp>
#include <lpodc/generator.hpp>
#include <lpodc/parser.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef LPODC_VERSION
#define LPODC_VERSION "unknown"
#endif

namespace {

using namespace lpodc;
using nlohmann::json;

enum ExitCode : int {
    ExitOk         = 0,
    ExitUsage      = 1,
    ExitValidation = 2,
    ExitCap        = 3,
    ExitMismatch   = 4,
};

struct RunConfig {
    std::string                subcommand;
    std::string                dialect;
    std::optional<std::string> criterion;
    std::string                input;
    std::string                output;
    std::string                format        = "text";
    std::size_t                cap           = 24;
    std::size_t                parallel      = 1;
    std::size_t                random        = 0;
    std::uint64_t              seed          = 1;
    std::string                route         = "encoded";
    std::string                orderedChoice = "optional";
    bool                       dumpGround    = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string readInput(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Dialect dialectOf(const RunConfig& cfg) {
    if (cfg.dialect == "lpod") {
        return Dialect::Lpod;
    }
    if (cfg.dialect == "crp2") {
        return Dialect::Crp2;
    }
    auto n = cfg.input.size();
    return n >= 4 && cfg.input.compare(n - 4, 4, ".crp") == 0 ? Dialect::Crp2 : Dialect::Lpod;
}

std::vector<Criterion> criteriaOf(const RunConfig& cfg, Dialect d, bool allByDefault) {
    if (!cfg.criterion) {
        if (d == Dialect::Crp2 || !allByDefault) {
            return d == Dialect::Crp2 ? std::vector<Criterion>{} : std::vector<Criterion>{Criterion::Cardinality};
        }
        return {std::begin(kCriteria), std::end(kCriteria)};
    }
    if (d == Dialect::Crp2) {
        throw ValidationError("--criterion applies to LPOD programs only");
    }
    return {*criterionFromString(*cfg.criterion)};
}

EvalOptions evalOptions(const RunConfig& cfg) {
    EvalOptions o;
    o.solve.engine.cap = cfg.cap;
    o.solve.parallel   = cfg.parallel;
    o.route            = cfg.route == "native" ? PreferenceRoute::Native : PreferenceRoute::Encoded;
    return o;
}

OrderedChoice orderedChoiceOf(const RunConfig& cfg) {
    return cfg.orderedChoice == "required" ? OrderedChoice::Required : OrderedChoice::Optional;
}

Program load(const RunConfig& cfg) {
    auto d = dialectOf(cfg);
    auto p = parse(readInput(cfg.input), d);
    auto r = validateProgram(p);
    if (!r.ok()) {
        std::string msg;
        for (const auto& v : r.violations) {
            msg += (msg.empty() ? "" : "\n") + v;
        }
        throw ValidationError(msg);
    }
    return p;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) {
                throw UsageError("cannot write " + path);
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string tupleStr(const std::vector<int>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i != xs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(xs[i]);
    }
    return out + ")";
}

json atomsJson(const AtomSet& s) {
    json out = json::array();
    for (const auto& a : s) {
        out.push_back(a.str());
    }
    return out;
}

json candidateJson(const Candidate& c) {
    return json{{"atoms", atomsJson(c.atoms)}, {"degrees", c.degrees}, {"assumption", c.assumption}};
}

void dumpGround(const asp::Document& doc) {
    for (const auto& x : selectableTuples(doc)) {
        std::cerr << "% tuple " << tupleStr(x) << "\n" << tupleProgram(doc, x).str() << "\n";
    }
}

int cmdTranslate(const RunConfig& cfg) {
    auto          p = load(cfg);
    auto          criteria = criteriaOf(cfg, p.dialect, false);
    asp::Document doc;
    try {
        if (p.dialect == Dialect::Crp2) {
            doc = crp2asp(p);
        }
        else {
            doc = cfg.criterion ? lpod2asp(p, criteria.front()) : lpod2aspBase(p);
        }
    }
    catch (const DegenerateProgram& e) {
        std::cerr << "warning: " << e.what() << "; empty translation\n";
    }
    doc.comments.insert(doc.comments.begin(),
                        {"lpodc " LPODC_VERSION, "source: " + (cfg.input.empty() ? std::string("<stdin>") : cfg.input),
                         "dialect: " + std::string(toString(p.dialect))});
    if (cfg.criterion) {
        doc.comments.insert(doc.comments.begin() + 3, "criterion: " + *cfg.criterion);
    }
    Output out(cfg.output);
    out.stream() << asp::emit(doc);
    return ExitOk;
}

/// Candidates of an LPOD without ordered rules: its answer sets, all preferred.
std::vector<Candidate> plainCandidates(const Program& p, const EvalOptions& opts) {
    std::vector<Candidate> out;
    for (const auto& s : splitCandidates(p, opts.solve)) {
        out.push_back(Candidate{s, {}, {}});
    }
    return out;
}

int cmdSolve(const RunConfig& cfg) {
    auto   p    = load(cfg);
    auto   opts = evalOptions(cfg);
    json   doc;
    Output out(cfg.output);
    auto&  os = out.stream();
    if (p.dialect == Dialect::Crp2) {
        auto t = crp2asp(p);
        if (cfg.dumpGround) {
            dumpGround(t);
        }
        auto e     = evalCrp(t, p, opts);
        auto sigma = p.signature();
        auto sets  = [&](const std::vector<AssumptionList>& tuples) {
            std::vector<Candidate> cs;
            for (const auto& x : tuples) {
                for (const auto& s : e.find(x)->answerSets) {
                    cs.push_back(Candidate{shrink(s, x, sigma), {}, x});
                }
            }
            std::sort(cs.begin(), cs.end());
            return cs;
        };
        auto candidates = sets(e.candidates);
        auto preferred  = sets(e.preferred);
        if (cfg.format == "json") {
            doc["candidates"] = json::array();
            doc["preferred"]  = json::array();
            for (const auto& c : candidates) {
                doc["candidates"].push_back(candidateJson(c));
            }
            for (const auto& c : preferred) {
                doc["preferred"].push_back(candidateJson(c));
            }
            os << doc.dump(2) << "\n";
            return ExitOk;
        }
        os << "candidates:\n";
        for (const auto& c : candidates) {
            os << "  " << toString(c.atoms) << "  assumption " << tupleStr(c.assumption) << "\n";
        }
        os << "preferred:\n";
        for (const auto& c : preferred) {
            os << "  " << toString(c.atoms) << "\n";
        }
        return ExitOk;
    }

    bool first = true;
    for (auto c : criteriaOf(cfg, p.dialect, false)) {
        std::vector<Candidate> candidates, best;
        if (p.nonRegularCount() == 0) {
            std::cerr << "warning: program has no ordered rules\n";
            candidates = plainCandidates(p, opts);
            best       = candidates;
        }
        else {
            auto t = lpod2asp(p, c);
            if (cfg.dumpGround && first) {
                dumpGround(t);
            }
            auto e     = evalLpod(t, p, c, opts);
            candidates = lpodCandidates(e, p);
            best       = lpodPreferred(e, p);
        }
        if (cfg.format == "json") {
            doc["candidates"] = json::array();
            doc["preferred"]  = json::array();
            for (const auto& x : candidates) {
                doc["candidates"].push_back(candidateJson(x));
            }
            for (const auto& x : best) {
                doc["preferred"].push_back(candidateJson(x));
            }
            doc["criterion"] = std::string(toString(c));
            continue;
        }
        if (first) {
            os << "candidates:\n";
            for (const auto& x : candidates) {
                os << "  " << toString(x.atoms) << "  degrees " << tupleStr(x.degrees) << "  assumption "
                   << tupleStr(x.assumption) << "\n";
            }
        }
        os << "preferred (" << toString(c) << "):\n";
        for (const auto& x : best) {
            os << "  " << toString(x.atoms) << "\n";
        }
        first = false;
    }
    if (cfg.format == "json") {
        os << doc.dump(2) << "\n";
    }
    return ExitOk;
}

using Reports = std::vector<std::pair<std::string, CheckReport>>;

/// Reports per criterion (LPOD) or a single report (CR-Prolog2).
Reports checkOne(const Program& p, const std::vector<Criterion>& criteria, const EvalOptions& opts,
                 OrderedChoice choice) {
    if (p.dialect == Dialect::Crp2) {
        return {{"", checkCrp(p, opts, choice)}};
    }
    Reports out;
    for (auto c : criteria) {
        out.emplace_back(std::string(toString(c)), checkLpod(p, c, opts));
    }
    return out;
}

std::vector<std::string> mismatches(const Reports& reports) {
    std::vector<std::string> out;
    for (const auto& [name, r] : reports) {
        for (const auto& m : r.mismatches) {
            out.push_back(name.empty() ? m : name + ": " + m);
        }
    }
    return out;
}

void reportMismatch(std::ostream& os, const Program& p, const std::vector<Criterion>& criteria,
                    const EvalOptions& opts, OrderedChoice choice) {
    auto fails = [&](const Program& q) {
        try {
            return !mismatches(checkOne(q, criteria, opts, choice)).empty();
        }
        catch (const DegenerateProgram&) {
            return false;
        }
    };
    auto m = minimize(p, fails);
    os << "MISMATCH\n";
    for (const auto& line : mismatches(checkOne(p, criteria, opts, choice))) {
        os << "  " << line << "\n";
    }
    os << "minimized counterexample:\n" << render(m);
    for (const auto& line : mismatches(checkOne(m, criteria, opts, choice))) {
        os << "  " << line << "\n";
    }
}

int cmdCheck(const RunConfig& cfg) {
    auto   opts   = evalOptions(cfg);
    auto   choice = orderedChoiceOf(cfg);
    Output out(cfg.output);
    auto&  os = out.stream();
    if (cfg.random > 0) {
        auto            d        = dialectOf(cfg);
        auto            criteria = criteriaOf(cfg, d, true);
        std::mt19937_64 rng(cfg.seed);
        for (std::size_t i = 0; i != cfg.random; ++i) {
            auto p = d == Dialect::Crp2 ? randomCrp(rng) : randomLpod(rng);
            if (!mismatches(checkOne(p, criteria, opts, choice)).empty()) {
                os << "program " << i + 1 << " of " << cfg.random << ": ";
                reportMismatch(os, p, criteria, opts, choice);
                return ExitMismatch;
            }
        }
        os << "OK: " << cfg.random << " random programs, oracle == translation\n";
        return ExitOk;
    }
    auto p = load(cfg);
    if (p.dialect == Dialect::Lpod && p.nonRegularCount() == 0) {
        std::cerr << "warning: program has no ordered rules; nothing to check\n";
        os << "OK: " << plainCandidates(p, opts).size() << " candidates, nothing to translate\n";
        return ExitOk;
    }
    auto criteria = criteriaOf(cfg, p.dialect, true);
    auto reports  = checkOne(p, criteria, opts, choice);
    if (!mismatches(reports).empty()) {
        reportMismatch(os, p, criteria, opts, choice);
        return ExitMismatch;
    }
    for (const auto& [name, r] : reports) {
        os << (reports.size() > 1 ? name + ": " : "") << "OK: " << r.candidates << " candidates, " << r.preferred
           << " preferred, oracle == translation\n";
    }
    return ExitOk;
}

std::size_t defaultCap() {
    if (const char* env = std::getenv("LPODC_CAP")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        }
        catch (const std::exception&) {
            std::cerr << "warning: ignoring LPODC_CAP=" << env << "\n";
        }
    }
    return 24;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    cfg.cap = defaultCap();

    CLI::App app{"Compiles LPOD and CR-Prolog2 programs to ASP with weak constraints", "lpodc"};
    app.set_version_flag("--version", LPODC_VERSION);
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--dialect", cfg.dialect, "Input dialect (default: crp2 for *.crp, else lpod)")
            ->check(CLI::IsMember({"lpod", "crp2"}));
        sub->add_option("--criterion", cfg.criterion, "LPOD preference criterion")
            ->check(CLI::IsMember({"cardinality", "inclusion", "pareto", "penalty-sum"}));
        sub->add_option("--cap", cfg.cap, "Maximum number of guessed atoms per program, 0 = unlimited");
        sub->add_option("--parallel", cfg.parallel, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
        sub->add_option("INPUT", cfg.input, "Input file (default: stdin)");
    };

    auto* translate = app.add_subcommand("translate", "Emit the ASP translation");
    common(translate);

    auto* solve = app.add_subcommand("solve", "Print candidate and preferred answer sets");
    common(solve);
    solve->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    solve->add_option("--route", cfg.route, "Evaluation of the preference layer")
        ->check(CLI::IsMember({"encoded", "native"}));
    solve->add_flag("--dump-ground", cfg.dumpGround, "Write the ground program of every tuple to stderr");

    auto* check = app.add_subcommand("check", "Compare the reference semantics with the translation");
    common(check);
    check->add_option("--random", cfg.random, "Check N random programs instead of INPUT");
    check->add_option("--seed", cfg.seed, "Seed for --random");
    check->add_option("--route", cfg.route, "Evaluation of the preference layer")
        ->check(CLI::IsMember({"encoded", "native"}));
    check->add_option("--ordered-choice", cfg.orderedChoice,
                      "CR-Prolog2 reference: may an ordered rule with a false body select no position")
        ->check(CLI::IsMember({"optional", "required"}));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        auto code = app.exit(e);
        return code == 0 ? ExitOk : ExitUsage;
    }

    try {
        if (*translate) {
            return cmdTranslate(cfg);
        }
        if (*solve) {
            return cmdSolve(cfg);
        }
        return cmdCheck(cfg);
    }
    catch (const ParseError& e) {
        std::cerr << (cfg.input.empty() ? "<stdin>" : cfg.input) << ":" << e.span().line << ":" << e.span().column
                  << ": error: " << e.what() << "\n";
        return ExitValidation;
    }
    catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ExitValidation;
    }
    catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --cap or LPODC_CAP)\n";
        return ExitCap;
    }
    catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ExitUsage;
    }
}
