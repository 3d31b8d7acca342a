#pragma once

#include "mvplan/formula.hpp"

#include <string_view>

namespace mvplan {

// Parses the ASCII LTL syntax
//
//   formula := disj ( "->" formula )?
//   disj    := conj ( "|" conj )*
//   conj    := until ( "&" until )*
//   until   := factor ( "U" until )?
//   factor  := ("!" | "X" | "F" | "G") factor | atom | "true" | "false"
//            | "(" formula ")"
//   atom    := [a-zA-Z_][a-zA-Z0-9_]*
//
// X, F, G, U, true and false are reserved words. The result is desugared to
// the core grammar. Throws ParseError with a 1-based line/column.
Formula parse_formula(std::string_view text);

} // namespace mvplan
