#pragma once

#include <string>
#include <utility>
#include <vector>

#include "godel/formula.hpp"

namespace godel {

enum class Syntax { propositional, first_order };

/// Parses the concrete syntax:
///
///   formula := ("forall"|"exists") ident "." formula | imp
///   imp     := or ("->" imp | "<->" or | "<" or)?
///   or      := and ("|" and)*
///   and     := unary ("&" unary)*
///   unary   := "~" unary | "D" "(" formula ")" | atom | "(" formula ")"
///   atom    := ident ("(" ident ("," ident)* ")")?     [arguments: FO only]
///
/// `T` and `F` are the truth constants. `~`, `<->` and `<` are desugared
/// per formula.hpp. Whitespace is insignificant. Throws parse_error with a
/// 1-based column; quantifiers and predicate arguments are rejected under
/// Syntax::propositional.
Formula parse(const std::string& text, Syntax syntax = Syntax::propositional);

/// One formula per line; blank lines and `#` comments are skipped.
/// Returns (1-based line number, formula) pairs.
std::vector<std::pair<int, Formula>> parse_lines(const std::string& text,
                                                 Syntax syntax);

}  // namespace godel
