#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "twistkit/presentation.hpp"

namespace twistkit {

/// Rank 1, 2 or 3 depending on how many `ox` factors the text contains.
using ParsedValue = std::variant<Element, Tensor2, Tensor3>;

/// Grammar:
///   expr    := ['+'|'-'] tensor (('+'|'-') tensor)*
///   tensor  := product ('ox' product)*
///   product := unary (('*'|'/') unary)*
///   unary   := '-' unary | power
///   power   := atom ['^' ['-'] INT]
///   atom    := NUMBER | 'I' | PARAM | NAME ['[' INT (',' INT)* ']']
///            | 'exp' '(' expr ')' | '(' expr ')'
/// Parameters: kinv khinv xi c cinv kbar_inv khbar_inv xibar. Division and
/// negative powers are allowed only for single-term scalars. exp(...) is
/// expanded under the presentation's truncation policy and must have no
/// constant term. Results are normal-ordered in `p`.
/// Throws ParseError (with the offending position) on every failure.
ParsedValue parse_expression(std::string_view text, const Presentation& p);

Element parse_element(std::string_view text, const Presentation& p);
Tensor2 parse_tensor2(std::string_view text, const Presentation& p);
Tensor3 parse_tensor3(std::string_view text, const Presentation& p);

std::string render_text(const ParsedValue& v);
int rank_of(const ParsedValue& v);

}  // namespace twistkit
