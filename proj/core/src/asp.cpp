//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include <lpodc/asp.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>

namespace lpodc::asp {

Term Term::integer(std::int64_t v) {
    Term t;
    t.kind  = Kind::Integer;
    t.value = v;
    return t;
}

Term Term::symbol(std::string name) {
    Term t;
    t.kind = Kind::Symbol;
    t.name = std::move(name);
    return t;
}

Term Term::variable(std::string name) {
    Term t;
    t.kind = Kind::Variable;
    t.name = std::move(name);
    return t;
}

Term Term::function(std::string name, std::vector<Term> args) {
    if (args.empty()) {
        return symbol(std::move(name));
    }
    Term t;
    t.kind = Kind::Function;
    t.name = std::move(name);
    t.args = std::move(args);
    return t;
}

Term Term::binary(char op, Term lhs, Term rhs) {
    Term t;
    t.kind = Kind::Binary;
    t.name = std::string(1, op);
    t.args = {std::move(lhs), std::move(rhs)};
    return t;
}

Term Term::interval(Term lo, Term hi) {
    Term t;
    t.kind = Kind::Interval;
    t.args = {std::move(lo), std::move(hi)};
    return t;
}

Term Term::pool(std::vector<Term> alternatives) {
    Term t;
    t.kind = Kind::Pool;
    t.args = std::move(alternatives);
    return t;
}

namespace {

template <class T, class F>
std::string join(const std::vector<T>& xs, std::string_view sep, F&& f) {
    std::string out;
    for (std::size_t i = 0; i != xs.size(); ++i) {
        if (i) {
            out += sep;
        }
        out += f(xs[i]);
    }
    return out;
}

} // namespace

std::string Term::str() const {
    switch (kind) {
        case Kind::Integer : return std::to_string(value);
        case Kind::Symbol  :
        case Kind::Variable: return name;
        case Kind::Function: return name + "(" + join(args, ",", [](const Term& t) { return t.str(); }) + ")";
        case Kind::Binary  : {
            auto rhs = args[1].kind == Kind::Binary ? "(" + args[1].str() + ")" : args[1].str();
            auto lhs = args[0].kind == Kind::Binary && name == "*" && args[0].name != "*" ? "(" + args[0].str() + ")"
                                                                                          : args[0].str();
            return lhs + name + rhs;
        }
        case Kind::Interval: return args[0].str() + ".." + args[1].str();
        case Kind::Pool    : return join(args, ";", [](const Term& t) { return t.str(); });
    }
    return {};
}

void Term::collectVariables(std::vector<std::string>& out) const {
    if (kind == Kind::Variable) {
        if (std::find(out.begin(), out.end(), name) == out.end()) {
            out.push_back(name);
        }
        return;
    }
    for (const auto& a : args) {
        a.collectVariables(out);
    }
}

std::string_view toString(CmpOp op) {
    switch (op) {
        case CmpOp::Eq: return "=";
        case CmpOp::Ne: return "!=";
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
    }
    return "?";
}

Literal Literal::pos(Term atom) {
    Literal l;
    l.atom = std::move(atom);
    return l;
}

Literal Literal::neg(Term atom) {
    auto l    = pos(std::move(atom));
    l.negated = true;
    return l;
}

Literal Literal::cmp(Term lhs, CmpOp op, Term rhs) {
    Literal l;
    l.kind = Kind::Comparison;
    l.lhs  = std::move(lhs);
    l.op   = op;
    l.rhs  = std::move(rhs);
    return l;
}

std::string Literal::str() const {
    if (kind == Kind::Comparison) {
        return lhs.str() + std::string(toString(op)) + rhs.str();
    }
    return (negated ? "not " : "") + atom.str();
}

std::string Element::str() const {
    auto out = literal.str();
    if (!condition.empty()) {
        out += ": " + join(condition, ", ", [](const Literal& l) { return l.str(); });
    }
    return out;
}

std::string Aggregate::str() const {
    std::string out = lower ? lower->str() : "";
    out += assign ? "=" : "";
    out += "{" + join(elements, "; ", [](const Element& e) { return e.str(); }) + "}";
    out += upper ? upper->str() : "";
    return out;
}

std::string str(const BodyItem& item) {
    return std::visit([](const auto& x) { return x.str(); }, item);
}

std::string Statement::str() const {
    auto body_ = join(body, ", ", [](const BodyItem& b) { return asp::str(b); });
    if (kind == Kind::Weak) {
        return ":~ " + body_ + ". [" + weight.str() +
               (terms.empty() ? "" : ", " + join(terms, ", ", [](const Term& t) { return t.str(); })) + "]";
    }
    std::string out;
    switch (head.kind) {
        case Head::Kind::None  : return ":- " + body_ + ".";
        case Head::Kind::Atom  : out = head.atom.str(); break;
        case Head::Kind::Choice: out = head.choice.str(); break;
    }
    return body.empty() ? out + "." : out + " :- " + body_ + ".";
}

bool operator==(const Statement& lhs, const Statement& rhs) {
    return lhs.kind == rhs.kind && lhs.head == rhs.head && lhs.body == rhs.body && lhs.weight == rhs.weight &&
           lhs.terms == rhs.terms;
}

std::vector<Statement> Document::layer(Layer l) const {
    std::vector<Statement> out;
    std::copy_if(statements.begin(), statements.end(), std::back_inserter(out),
                 [&](const Statement& s) { return s.layer == l; });
    return out;
}

std::string emit(const Document& d) {
    std::string out;
    for (const auto& c : d.comments) {
        out += "% " + c + "\n";
    }
    for (const auto& c : d.constants) {
        out += "#const " + c.name + " = " + c.value.str() + ".\n";
    }
    for (const auto& s : d.statements) {
        out += s.str() + "\n";
    }
    return out;
}

SyntaxError::SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}

namespace {

enum class Tok : std::uint8_t { Ident, Variable, Integer, Punct, End };

struct Token {
    Tok         kind = Tok::End;
    std::string text;
    std::size_t line   = 1;
    std::size_t column = 1;
};

std::vector<Token> lex(std::string_view s) {
    static constexpr std::string_view kLong[] = {":-", ":~", "..", "!=", "<=", ">=", "#const"};
    std::vector<Token>                out;
    std::size_t                       i = 0, line = 1, col = 1;
    auto                              advance = [&](std::size_t n) {
        for (std::size_t k = 0; k != n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            }
            else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '%') {
            while (i < s.size() && s[i] != '\n') {
                advance(1);
            }
            continue;
        }
        Token t;
        t.line   = line;
        t.column = col;
        auto start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t n = 0;
            while (i + n < s.size() && (std::isalnum(static_cast<unsigned char>(s[i + n])) || s[i + n] == '_')) {
                ++n;
            }
            t.kind = std::islower(static_cast<unsigned char>(c)) ? Tok::Ident : Tok::Variable;
            advance(n);
        }
        else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t n = 0;
            while (i + n < s.size() && std::isdigit(static_cast<unsigned char>(s[i + n]))) {
                ++n;
            }
            t.kind = Tok::Integer;
            advance(n);
        }
        else {
            t.kind       = Tok::Punct;
            std::size_t n = 1;
            for (auto l : kLong) {
                if (s.substr(i, l.size()) == l) {
                    n = l.size();
                    break;
                }
            }
            if (n == 1 && std::string_view("(){}[],;:.=<>+-*@").find(c) == std::string_view::npos) {
                throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
            }
            advance(n);
        }
        t.text = std::string(s.substr(start, i - start));
        out.push_back(std::move(t));
    }
    Token end;
    end.line   = line;
    end.column = col;
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    Document run() {
        Document d;
        while (cur().kind != Tok::End) {
            if (is("#const")) {
                next();
                Constant c;
                c.name = expectKind(Tok::Ident, "constant name").text;
                expect("=");
                c.value = term();
                expect(".");
                d.constants.push_back(std::move(c));
                continue;
            }
            d.statements.push_back(statement());
        }
        return d;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    const Token& peek(std::size_t k = 1) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    bool         is(std::string_view s) const { return cur().kind == Tok::Punct && cur().text == s; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg + (cur().kind == Tok::End ? " at end of input" : " before '" + cur().text + "'"), cur().line,
                          cur().column);
    }

    void expect(std::string_view s) {
        if (!is(s)) {
            fail("expected '" + std::string(s) + "'");
        }
        next();
    }

    const Token& expectKind(Tok k, const char* what) {
        if (cur().kind != k) {
            fail(std::string("expected ") + what);
        }
        return next();
    }

    Statement statement() {
        Statement s;
        if (is(":~")) {
            next();
            s.kind = Statement::Kind::Weak;
            s.body = body();
            expect(".");
            expect("[");
            s.weight = term();
            while (is(",")) {
                next();
                s.terms.push_back(term());
            }
            expect("]");
            return s;
        }
        if (is(":-")) {
            next();
            s.body = body();
            expect(".");
            return s;
        }
        s.head = head();
        if (is(":-")) {
            next();
            s.body = body();
        }
        expect(".");
        return s;
    }

    Head head() {
        Head h;
        if (is("{") || (cur().kind != Tok::Punct && peek().kind == Tok::Punct && peek().text == "{")) {
            h.kind   = Head::Kind::Choice;
            h.choice = aggregate(is("{") ? std::nullopt : std::optional<Term>(term()), false);
            return h;
        }
        h.kind = Head::Kind::Atom;
        h.atom = term(true);
        if (!h.atom.isAtom()) {
            fail("expected atom in head");
        }
        return h;
    }

    std::vector<BodyItem> body() {
        std::vector<BodyItem> out;
        out.push_back(bodyItem());
        while (is(",")) {
            next();
            out.push_back(bodyItem());
        }
        return out;
    }

    BodyItem bodyItem() {
        if (is("{")) {
            return aggregate(std::nullopt, false);
        }
        if (cur().kind == Tok::Ident && cur().text == "not") {
            next();
            auto a = term();
            if (!a.isAtom()) {
                fail("expected atom after 'not'");
            }
            return Literal::neg(std::move(a));
        }
        auto t = term();
        if (is("{")) {
            return aggregate(std::move(t), false);
        }
        if (is("=") && peek().kind == Tok::Punct && peek().text == "{") {
            next();
            return aggregate(std::move(t), true);
        }
        return literalAfter(std::move(t));
    }

    Literal literal() {
        if (cur().kind == Tok::Ident && cur().text == "not") {
            next();
            return Literal::neg(term());
        }
        return literalAfter(term());
    }

    Literal literalAfter(Term t) {
        static constexpr std::pair<std::string_view, CmpOp> kOps[] = {{"=", CmpOp::Eq},  {"!=", CmpOp::Ne},
                                                                      {"<", CmpOp::Lt},  {"<=", CmpOp::Le},
                                                                      {">", CmpOp::Gt},  {">=", CmpOp::Ge}};
        for (auto [text, op] : kOps) {
            if (is(text)) {
                next();
                auto rhs = term();
                if (is("..")) {
                    next();
                    rhs = Term::interval(std::move(rhs), term());
                }
                return Literal::cmp(std::move(t), op, std::move(rhs));
            }
        }
        if (!t.isAtom()) {
            fail("expected atom or comparison");
        }
        return Literal::pos(std::move(t));
    }

    Aggregate aggregate(std::optional<Term> lower, bool assign) {
        Aggregate a;
        a.lower  = std::move(lower);
        a.assign = assign;
        expect("{");
        if (!is("}")) {
            a.elements.push_back(element());
            while (is(";")) {
                next();
                a.elements.push_back(element());
            }
        }
        expect("}");
        if (cur().kind == Tok::Integer || cur().kind == Tok::Variable || is("-") ||
            (cur().kind == Tok::Ident && cur().text != "not" && !(peek().kind == Tok::Punct && peek().text == "("))) {
            a.upper = term();
        }
        return a;
    }

    Element element() {
        Element e;
        e.literal = literal();
        if (is(":")) {
            next();
            e.condition.push_back(literal());
            while (is(",")) {
                next();
                e.condition.push_back(literal());
            }
        }
        return e;
    }

    Term term(bool pools = false) {
        auto t = product(pools);
        while (is("+") || is("-")) {
            auto op = next().text[0];
            t       = Term::binary(op, std::move(t), product(pools));
        }
        return t;
    }

    Term product(bool pools) {
        auto t = primary(pools);
        while (is("*")) {
            next();
            t = Term::binary('*', std::move(t), primary(pools));
        }
        return t;
    }

    Term primary(bool pools) {
        if (is("-") && peek().kind == Tok::Integer) {
            next();
            return Term::integer(-integer());
        }
        if (cur().kind == Tok::Integer) {
            return Term::integer(integer());
        }
        if (cur().kind == Tok::Variable) {
            return Term::variable(next().text);
        }
        if (is("(")) {
            next();
            auto t = term(pools);
            expect(")");
            return t;
        }
        if (cur().kind != Tok::Ident) {
            fail("expected term");
        }
        auto name = next().text;
        if (!is("(")) {
            return Term::symbol(std::move(name));
        }
        next();
        std::vector<Term> args;
        auto arg = [&] {
            auto t = term(pools);
            if (pools && is("..")) {
                next();
                t = Term::interval(std::move(t), term(pools));
            }
            return t;
        };
        for (;;) {
            std::vector<Term> alts{arg()};
            while (pools && is(";")) {
                next();
                alts.push_back(arg());
            }
            args.push_back(alts.size() == 1 ? std::move(alts.front()) : Term::pool(std::move(alts)));
            if (is(",")) {
                next();
                continue;
            }
            expect(")");
            break;
        }
        return Term::function(std::move(name), std::move(args));
    }

    std::int64_t integer() {
        const auto&  t = expectKind(Tok::Integer, "integer");
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{}) {
            throw SyntaxError("integer out of range", t.line, t.column);
        }
        return v;
    }

    std::vector<Token> toks_;
    std::size_t        pos_ = 0;
};

} // namespace

Document parseDocument(std::string_view text) { return Parser(text).run(); }

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    for (auto& t : lex(text)) {
        if (t.kind != Tok::End) {
            out.push_back(std::move(t.text));
        }
    }
    return out;
}

} // namespace lpodc::asp
