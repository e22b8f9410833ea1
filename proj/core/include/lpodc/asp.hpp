//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#pragma once

#include <lpodc/value.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lpodc::asp {

/// Non-ground term.
struct Term {
    enum class Kind : std::uint8_t { Integer, Symbol, Variable, Function, Binary, Interval, Pool };

    Kind              kind  = Kind::Integer;
    std::int64_t      value = 0;
    std::string       name; ///< symbol, variable or function name; operator for Binary
    std::vector<Term> args;

    static Term integer(std::int64_t v);
    static Term symbol(std::string name);
    static Term variable(std::string name);
    static Term function(std::string name, std::vector<Term> args);
    static Term binary(char op, Term lhs, Term rhs);
    static Term interval(Term lo, Term hi);
    static Term pool(std::vector<Term> alternatives);

    [[nodiscard]] bool isAtom() const { return kind == Kind::Symbol || kind == Kind::Function; }
    [[nodiscard]] std::string str() const;
    void collectVariables(std::vector<std::string>& out) const;

    friend bool operator==(const Term&, const Term&) = default;
};

enum class CmpOp : std::uint8_t { Eq, Ne, Lt, Le, Gt, Ge };

[[nodiscard]] std::string_view toString(CmpOp op);

/// Atom (possibly default-negated) or comparison.
struct Literal {
    enum class Kind : std::uint8_t { Atom, Comparison };

    Kind  kind    = Kind::Atom;
    bool  negated = false;
    Term  atom;
    Term  lhs;
    CmpOp op = CmpOp::Eq;
    Term  rhs;

    static Literal pos(Term atom);
    static Literal neg(Term atom);
    static Literal cmp(Term lhs, CmpOp op, Term rhs);

    [[nodiscard]] std::string str() const;
    friend bool operator==(const Literal&, const Literal&) = default;
};

/// `literal : condition`.
struct Element {
    Literal              literal;
    std::vector<Literal> condition;

    [[nodiscard]] std::string str() const;
    friend bool operator==(const Element&, const Element&) = default;
};

/// Counting aggregate `lower { e1; ...; en } upper`, or `lower = { ... }` when `assign`.
struct Aggregate {
    std::optional<Term>  lower;
    std::optional<Term>  upper;
    bool                 assign = false;
    std::vector<Element> elements;

    [[nodiscard]] std::string str() const;
    friend bool operator==(const Aggregate&, const Aggregate&) = default;
};

using BodyItem = std::variant<Literal, Aggregate>;

[[nodiscard]] std::string str(const BodyItem& item);

struct Head {
    enum class Kind : std::uint8_t { None, Atom, Choice };

    Kind      kind = Kind::None;
    Term      atom;
    Aggregate choice; ///< element literals are atoms

    friend bool operator==(const Head&, const Head&) = default;
};

/// Which part of a translation a statement belongs to: rules instantiated once per
/// assumption tuple, or rules comparing tuples.
enum class Layer : std::uint8_t { Tuple, Preference };

struct Statement {
    enum class Kind : std::uint8_t { Rule, Weak };

    Kind                  kind = Kind::Rule;
    Head                  head;
    std::vector<BodyItem> body;
    Term                  weight; ///< weak constraints
    std::vector<Term>     terms;
    std::string           tag;    ///< name of the rule schema that produced the statement
    Layer                 layer = Layer::Tuple;

    [[nodiscard]] std::string str() const;
    /// Equality ignores tag and layer.
    friend bool operator==(const Statement& lhs, const Statement& rhs);
};

struct Constant {
    std::string name;
    Term        value;

    friend bool operator==(const Constant&, const Constant&) = default;
};

struct Document {
    std::vector<std::string> comments; ///< header lines, emitted with a leading `% `
    std::vector<Constant>    constants;
    std::vector<Statement>   statements;

    [[nodiscard]] std::vector<Statement> layer(Layer l) const;
};

/// Deterministic text, one statement per line.
[[nodiscard]] std::string emit(const Document& d);

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& msg, std::size_t line, std::size_t column);
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses the dialect produced by emit. Tags are empty and layers default to Tuple.
[[nodiscard]] Document parseDocument(std::string_view text);

/// Token texts ignoring whitespace and `%` comments.
[[nodiscard]] std::vector<std::string> tokenize(std::string_view text);

} // namespace lpodc::asp
