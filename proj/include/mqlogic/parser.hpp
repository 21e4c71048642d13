#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mqlogic/signature.hpp"
#include "mqlogic/syntax.hpp"

namespace mqlogic {

struct ParseOptions {
  /// Undeclared identifiers in term position become free variables instead
  /// of raising UnknownSymbolError. Used for rewrite patterns and schematic
  /// family members.
  bool allow_free_variables = false;
};

/// Grammar:
///   formula := unary ('->' formula)?
///   unary   := '~' unary | 'E' var unary | 'E<var>' unary | atom | '(' formula ')'
///   atom    := P | P '(' term (',' term)* ')'
///   term    := var | c | f '(' term, ... ')' | numeral | 'quote' '(' formula ')'
/// `Ex T(l)` binds x (the variable glued to E); `Ex y P(y)` binds y.
Formula parse_formula(std::string_view text, const Signature& sig, const ParseOptions& opts = {});
Term parse_term(std::string_view text, const Signature& sig, const ParseOptions& opts = {});

/// Splits at occurrences of `sep` outside parentheses and braces; pieces are
/// trimmed. An all-blank input yields no pieces.
std::vector<std::string> split_top_level(std::string_view text, char sep);

/// Position of `token` outside parentheses and braces, or npos.
std::size_t find_top_level(std::string_view text, std::string_view token);

std::string trim(std::string_view s);

}  // namespace mqlogic
