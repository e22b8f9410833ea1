//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#pragma once

#include <lpodc/program.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpodc {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, SourceSpan span);
    [[nodiscard]] const SourceSpan& span() const { return span_; }

private:
    SourceSpan span_;
};

/// Parses LPOD or CR-Prolog2 text.
///
/// Grammar (one statement per rule, `%` starts a line comment):
///
///     statement := [label ':'] head [(':-' | ':+') body] '.'
///                | ':-' body '.'
///                | 'prefer' '(' label ',' label ')' '.'
///     head      := atom ('*' atom)* | [int] '{' atom (';' atom)* '}' [int]
///     body      := ['not'] atom (',' ['not'] atom)*
///     atom      := ident ['(' const (',' const)* ')']
///
/// A head with `*` makes an ordered rule; `:+` makes a cr-rule (Crp2 only). The
/// result is canonicalized.
[[nodiscard]] Program parse(std::string_view text, Dialect dialect);

/// Renders a program so that parse(render(p), p.dialect) == p.
[[nodiscard]] std::string render(const Program& p);

[[nodiscard]] std::string renderRule(const Rule& r);

} // namespace lpodc
