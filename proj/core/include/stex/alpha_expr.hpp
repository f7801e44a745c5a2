#pragma once

#include <string>

#include "stex/params.hpp"

namespace stex {

/// Parsed stability index together with how it was written.
///
/// The accepted grammar is deliberately tiny:
///
///   expr     := surd | value | value ('+'|'-') surd
///   value    := rational | decimal
///   surd     := [value '*'] 'sqrt' '(' integer ')' ['/' integer]
///   rational := ['+'|'-'] integer ['/' integer]
///
/// so "3/2", "0.6", "3/2+sqrt(2)/50" and "1/2-3*sqrt(3)/100" all parse.
/// Decimal literals are read as the exact rationals they denote (0.6 ->
/// 3/5) and flagged, because a user writing a decimal may believe they
/// chose an irrational value while the library will treat it as exactly
/// rational.  A surd whose argument is a perfect square folds back into
/// the rational part, so "1+sqrt(4)/4" is exactly 3/2.
struct AlphaParse {
  Alpha alpha;
  bool decimal_literal = false;  // a decimal appeared anywhere in the input
  std::string canonical;         // normalized form for provenance headers
};

/// Parses the grammar above and validates the range (0,1) u (1,2).
/// Irrational results are evaluated at the current working precision.
AlphaParse parse_alpha(const std::string& text);

/// Full parse result without the alpha range restriction: keeps the exact
/// rational when the expression has no surviving surd (continued-fraction
/// expansion needs the exact value, not a rounding of it).
struct RealParse {
  bool is_rational = false;
  BigRat rational;   // meaningful when is_rational
  BigFloat value;    // always set, working precision
  bool decimal_literal = false;
  std::string canonical;
};
RealParse parse_real_full(const std::string& text);

/// Same grammar, returning the value itself (used for rho and other real
/// command-line inputs; exactness folding happens before evaluation).
BigFloat parse_real(const std::string& text);

}  // namespace stex
