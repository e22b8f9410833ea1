//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include <lpodc/parser.hpp>

#include <cctype>
#include <charconv>
#include <optional>

namespace lpodc {

ParseError::ParseError(const std::string& msg, SourceSpan span)
    : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + msg), span_(span) {}

namespace {

enum class Tok {
    Ident,    // lower-case identifier
    Variable, // upper-case identifier or '_'
    Integer,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Semicolon,
    Colon,
    If,      // :-
    CrIf,    // :+
    Star,
    Dot,
    DotDot,
    Other,
    End,
};

struct Token {
    Tok              kind = Tok::End;
    std::string_view text;
    SourceSpan       span;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skipBlank();
        Token t;
        t.span = here();
        if (pos_ >= text_.size()) {
            t.kind = Tok::End;
            return t;
        }
        auto start = pos_;
        char c     = text_[pos_];
        auto take  = [&](Tok k, std::size_t n) {
            advance(n);
            t.kind = k;
        };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                advance(1);
            }
            t.kind = std::islower(static_cast<unsigned char>(c)) ? Tok::Ident : Tok::Variable;
        }
        else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            advance(1);
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                advance(1);
            }
            t.kind = Tok::Integer;
        }
        else if (text_.substr(pos_, 2) == ":-") { take(Tok::If, 2); }
        else if (text_.substr(pos_, 2) == ":+") { take(Tok::CrIf, 2); }
        else if (text_.substr(pos_, 2) == "..") { take(Tok::DotDot, 2); }
        else {
            switch (c) {
                case '(': take(Tok::LParen, 1); break;
                case ')': take(Tok::RParen, 1); break;
                case '{': take(Tok::LBrace, 1); break;
                case '}': take(Tok::RBrace, 1); break;
                case ',': take(Tok::Comma, 1); break;
                case ';': take(Tok::Semicolon, 1); break;
                case ':': take(Tok::Colon, 1); break;
                case '*': take(Tok::Star, 1); break;
                case '.': take(Tok::Dot, 1); break;
                default : {
                    // One UTF-8 code point.
                    std::size_t n = 1;
                    while (pos_ + n < text_.size() && (static_cast<unsigned char>(text_[pos_ + n]) & 0xC0) == 0x80) {
                        ++n;
                    }
                    take(Tok::Other, n);
                }
            }
        }
        t.text     = text_.substr(start, pos_ - start);
        t.span.end = pos_;
        return t;
    }

    [[nodiscard]] std::size_t size() const { return text_.size(); }

private:
    SourceSpan here() const { return SourceSpan{pos_, pos_, line_, col_}; }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i != n && pos_ < text_.size(); ++i, ++pos_) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            }
            else {
                ++col_;
            }
        }
    }

    void skipBlank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance(1);
                }
            }
            else if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
            }
            else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t      pos_  = 0;
    std::size_t      line_ = 1;
    std::size_t      col_  = 1;
};

class Parser {
public:
    Parser(std::string_view text, Dialect d) : lex_(text), program_(d) { shift(); }

    Program run() {
        while (tok_.kind != Tok::End) {
            statement();
        }
        return canonicalize(std::move(program_));
    }

private:
    void shift() {
        tok_ = peek_ ? *std::exchange(peek_, std::nullopt) : lex_.next();
    }

    const Token& lookahead() {
        if (!peek_) {
            peek_ = lex_.next();
        }
        return *peek_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, tok_.span); }

    Token expect(Tok k, const char* what) {
        if (tok_.kind != k) {
            fail(std::string("expected ") + what + (tok_.kind == Tok::End ? " at end of input" : " before '" + std::string(tok_.text) + "'"));
        }
        auto t = tok_;
        shift();
        return t;
    }

    void statement() {
        auto start = tok_.span;
        Rule rule;
        if (tok_.kind == Tok::Ident && lookahead().kind == Tok::Colon) {
            rule.label = std::string(tok_.text);
            shift();
            shift();
        }
        if (tok_.kind == Tok::If) {
            if (rule.label) {
                fail("constraints cannot carry a label");
            }
            shift();
            rule.body = body();
        }
        else {
            if (tok_.kind == Tok::CrIf) {
                fail("cr-rules need a head");
            }
            head(rule);
            if (tok_.kind == Tok::If || tok_.kind == Tok::CrIf) {
                bool cr = tok_.kind == Tok::CrIf;
                if (cr && program_.dialect == Dialect::Lpod) {
                    fail("':+' is not allowed in LPOD programs");
                }
                shift();
                if (cr) {
                    if (rule.choice) {
                        fail("cr-rules cannot have a choice head");
                    }
                    rule.kind = rule.kind == RuleKind::Ordered ? RuleKind::OrderedCr : RuleKind::Cr;
                }
                if (!cr || tok_.kind != Tok::Dot) {
                    rule.body = body();
                }
            }
        }
        auto dot  = expect(Tok::Dot, "'.'");
        rule.span = SourceSpan{start.start, dot.span.end, start.line, start.column};
        if (rule.label && rule.kind == RuleKind::Regular) {
            throw ParseError("labels are only allowed on cr-rules and ordered rules", rule.span);
        }
        if (isPreferFact(rule)) {
            program_.preferFacts.push_back(
                PreferFact{rule.head[0].args[0].name(), rule.head[0].args[1].name(), rule.span});
            return;
        }
        program_.rules.push_back(std::move(rule));
    }

    static bool isPreferFact(const Rule& r) {
        if (r.kind != RuleKind::Regular || r.choice || r.head.size() != 1 || !r.body.empty()) {
            return false;
        }
        const auto& a = r.head[0];
        return a.predicate == "prefer" && a.args.size() == 2 && a.args[0].kind() == Value::Kind::Symbol &&
               a.args[1].kind() == Value::Kind::Symbol;
    }

    void head(Rule& rule) {
        if (tok_.kind == Tok::Integer || tok_.kind == Tok::LBrace) {
            ChoiceBounds b;
            if (tok_.kind == Tok::Integer) {
                b.lower = integer();
            }
            expect(Tok::LBrace, "'{'");
            if (tok_.kind != Tok::RBrace) {
                rule.head.push_back(atom());
                while (tok_.kind == Tok::Semicolon) {
                    shift();
                    rule.head.push_back(atom());
                }
            }
            expect(Tok::RBrace, "'}'");
            if (tok_.kind == Tok::Integer) {
                b.upper = integer();
            }
            if (b.lower && b.upper && *b.lower > *b.upper) {
                fail("choice lower bound exceeds upper bound");
            }
            rule.choice = b;
            return;
        }
        rule.head.push_back(atom());
        while (tok_.kind == Tok::Star) {
            shift();
            rule.head.push_back(atom());
            rule.kind = RuleKind::Ordered;
        }
    }

    std::vector<Literal> body() {
        std::vector<Literal> out;
        for (;;) {
            Literal l;
            if (tok_.kind == Tok::Ident && tok_.text == "not" &&
                (lookahead().kind == Tok::Ident || lookahead().kind == Tok::Variable)) {
                shift();
                l.negated = true;
            }
            l.atom = atom();
            out.push_back(std::move(l));
            if (tok_.kind != Tok::Comma) {
                break;
            }
            shift();
        }
        return out;
    }

    Atom atom() {
        if (tok_.kind == Tok::Variable) {
            fail("variables are not supported: '" + std::string(tok_.text) + "'");
        }
        auto name = expect(Tok::Ident, "atom");
        Atom a(std::string(name.text));
        if (tok_.kind == Tok::LParen) {
            shift();
            for (;;) {
                a.args.push_back(constant());
                if (tok_.kind == Tok::Comma) {
                    shift();
                    continue;
                }
                expect(Tok::RParen, "')'");
                break;
            }
        }
        return a;
    }

    Value constant() {
        switch (tok_.kind) {
            case Tok::Integer: return Value::integer(integer());
            case Tok::Ident: {
                auto v = Value::symbol(std::string(tok_.text));
                shift();
                if (tok_.kind == Tok::LParen) {
                    fail("function terms are not supported");
                }
                return v;
            }
            case Tok::Variable: fail("variables are not supported: '" + std::string(tok_.text) + "'");
            default           : fail("constant expected");
        }
    }

    int integer() {
        int  v     = 0;
        auto first = tok_.text.data();
        auto [ptr, ec] = std::from_chars(first, first + tok_.text.size(), v);
        if (ec != std::errc{} || ptr != first + tok_.text.size()) {
            fail("integer out of range");
        }
        shift();
        if (tok_.kind == Tok::DotDot) {
            fail("ranges are not supported; write the atoms out");
        }
        return v;
    }

    Lexer                lex_;
    Token                tok_;
    std::optional<Token> peek_;
    Program              program_;
};

std::string joinAtoms(const std::vector<Atom>& atoms, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i != atoms.size(); ++i) {
        if (i) {
            out += sep;
        }
        out += atoms[i].str();
    }
    return out;
}

} // namespace

Program parse(std::string_view text, Dialect dialect) { return Parser(text, dialect).run(); }

std::string renderRule(const Rule& r) {
    std::string out;
    if (r.label) {
        out += *r.label + ": ";
    }
    if (r.choice) {
        if (r.choice->lower) {
            out += std::to_string(*r.choice->lower) + " ";
        }
        out += "{ " + joinAtoms(r.head, "; ") + " }";
        if (r.choice->upper) {
            out += " " + std::to_string(*r.choice->upper);
        }
    }
    else {
        out += joinAtoms(r.head, " * ");
    }
    bool cr = r.isConsistencyRestoring();
    if (!r.body.empty() || cr || r.isConstraint()) {
        out += out.empty() ? "" : " ";
        out += cr ? ":+" : ":-";
        for (std::size_t i = 0; i != r.body.size(); ++i) {
            out += i ? ", " : " ";
            out += r.body[i].str();
        }
    }
    return out + ".";
}

std::string render(const Program& p) {
    std::string out;
    for (const auto& r : p.rules) {
        out += renderRule(r) + "\n";
    }
    for (const auto& f : p.preferFacts) {
        out += "prefer(" + f.first + "," + f.second + ").\n";
    }
    return out;
}

} // namespace lpodc
