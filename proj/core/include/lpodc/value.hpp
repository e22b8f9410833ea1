//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lpodc {

/// A ground term: integer, symbolic constant, or function term `f(t1,...,tn)`.
///
/// Values are totally ordered: integers before symbols before functions; functions
/// compare by arity, then name, then arguments.
class Value {
public:
    enum class Kind : std::uint8_t { Integer, Symbol, Function };

    Value() = default;
    static Value integer(std::int64_t v);
    static Value symbol(std::string name);
    static Value function(std::string name, std::vector<Value> args);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool isInteger() const { return kind_ == Kind::Integer; }
    [[nodiscard]] std::int64_t asInteger() const;
    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const std::vector<Value>& args() const { return args_; }

    [[nodiscard]] std::string str() const;

    friend bool operator==(const Value&, const Value&) = default;
    friend std::strong_ordering operator<=>(const Value& lhs, const Value& rhs);

private:
    Kind               kind_ = Kind::Integer;
    std::int64_t       int_  = 0;
    std::string        name_;
    std::vector<Value> args_;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

/// A propositional atom. Arguments are ground, so `hotel(1)` is a single symbol whose
/// arguments are kept so that translations can append assumption degrees.
struct Atom {
    std::string        predicate;
    std::vector<Value> args;

    Atom() = default;
    explicit Atom(std::string pred, std::vector<Value> a = {}) : predicate(std::move(pred)), args(std::move(a)) {}

    [[nodiscard]] std::string str() const;
    /// The atom viewed as a term, e.g. for `degree(ap(1,2),1,2)`.
    [[nodiscard]] Value toValue() const;
    static Atom fromValue(const Value& v);

    friend bool operator==(const Atom&, const Atom&) = default;
    friend std::strong_ordering operator<=>(const Atom& lhs, const Atom& rhs);
};

std::ostream& operator<<(std::ostream& os, const Atom& a);

/// Atom possibly preceded by default negation.
struct Literal {
    Atom atom;
    bool negated = false;

    [[nodiscard]] std::string str() const;
    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

using AtomSet = std::set<Atom>;

/// Set of atoms, optionally annotated with the weak-constraint penalty.
struct AnswerSet {
    AtomSet                     atoms;
    std::optional<std::int64_t> penalty;

    [[nodiscard]] bool contains(const Atom& a) const { return atoms.count(a) != 0; }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const AnswerSet&, const AnswerSet&) = default;
    friend auto operator<=>(const AnswerSet&, const AnswerSet&) = default;
};

std::string toString(const AtomSet& atoms);

/// Convenience: parse a ground atom such as `hotel(1)` or `degree(ap(1,1),1,1)`.
/// Throws std::invalid_argument on malformed text.
Atom atomFromString(std::string_view text);

} // namespace lpodc
