#pragma once

#include <cstdint>
#include <string_view>

#include "padicres/poly/multi_poly.hpp"

namespace padicres::poly {

struct ParseOptions {
    /// Largest literal accepted after '^' and largest exponent in the result.
    std::uint32_t max_exponent = 65536;
};

/// Parses an integer polynomial in t1..t{num_vars}.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | 't' digits | '(' expr ')'
///
/// A bare "t" names t1 when num_vars == 1. Whitespace is ignored. Throws
/// ParseError carrying the byte offset of the offending character.
MultiPoly parse_poly(std::string_view text, std::size_t num_vars, const ParseOptions& options = {});

} // namespace padicres::poly
