// surface.hpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rewritekit/lambda.hpp"
#include "rewritekit/rewrite_systems.hpp"
#include "rewritekit/ski.hpp"
#include "rewritekit/stlc.hpp"
#include "rewritekit/stlcext.hpp"

namespace rewritekit::surface {

struct SourceSpan {
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct ParseError {
  SourceSpan span;
  std::string message;                // non-empty
  std::vector<std::string> expected;  // token descriptions, sorted
};

template <typename T>
using ParseResult = std::variant<T, ParseError>;

template <typename T>
bool parsed(const ParseResult<T>& r) {
  return std::holds_alternative<T>(r);
}
template <typename T>
const T& value_of(const ParseResult<T>& r) {
  return std::get<T>(r);
}
template <typename T>
const ParseError& error_of(const ParseResult<T>& r) {
  return std::get<ParseError>(r);
}

// Concrete syntax. Named binders (\x. x, \x:b0. x) are accepted and resolved
// to de Bruijn indices; v<n> is a literal index; unbound names are errors.
// Application is left-associative, lambda bodies extend maximally right,
// -> is right-associative, * binds tighter than +, both tighter than ->.
ParseResult<lambda::Term> parse_lambda(std::string_view input);
ParseResult<ski::CTerm> parse_ski(std::string_view input);
ParseResult<rewrite::Expr> parse_expr(std::string_view input);
ParseResult<std::string> parse_srs(std::string_view input);
ParseResult<stlc::TTerm> parse_stlc(std::string_view input);
ParseResult<stlcext::ETerm> parse_stlcext(std::string_view input);

/// Rule files: one `lhs -> rhs` per line; blank lines and lines starting
/// with '#' are skipped.
ParseResult<std::vector<rewrite::StrRule>> parse_rule_file(std::string_view input);

// Canonical de Bruijn output; parse(print(t)) == t.
std::string print(const lambda::Term& t);
std::string print(const ski::CTerm& t);
std::string print(const rewrite::Expr& e);
std::string print(const stlc::Ty& ty);
std::string print(const stlc::TTerm& t);
std::string print(const stlcext::ETy& ty);
std::string print(const stlcext::ETerm& t);

std::string describe(const ParseError& err);

}  // namespace rewritekit::surface
