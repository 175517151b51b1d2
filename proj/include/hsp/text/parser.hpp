#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "hsp/algebra/expression.hpp"

namespace hsp {

/// Named composite elements usable as identifiers, e.g. "T" or "nabla".
using Bindings = std::map<std::string, Expression, std::less<>>;

/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/' | juxtaposition) unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' integer)?
///   primary := integer | 'p' | 'q' | 'i' | name | 'inv' '(' expr ')' | '(' expr ')'
/// Division is by scalars only; inv() takes a scalar or an invertible
/// generator. Throws SyntaxError (with byte offset) or UnknownGenerator.
Expression parse_expression(std::string_view text, const AlphabetPtr& alphabet, const Bindings* bindings = nullptr);

/// Parses a generator-free expression. Throws SyntaxError.
Scalar parse_scalar(std::string_view text);

}  // namespace hsp
