#pragma once

// Polynomial text front-end.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | 'x' | 'y' | '(' expr ')'
//
// Whitespace is ignored. Errors carry the byte offset of the offending token.

#include <string>
#include <string_view>

#include "imult/bipoly.hpp"
#include "imult/puiseux.hpp"

namespace imult {

struct PolySpec {
  std::string source;
  BiPoly poly;
  /// Only x occurs in the source text.
  bool univariate = false;
  std::int64_t degree() const { return poly.total_degree().value_or(-1); }
  std::size_t terms() const { return poly.term_count(); }
};

/// Parses a polynomial in x and y; with `univariate`, y is rejected as unknown.
PolySpec parse_poly(std::string_view text, bool univariate = false);
UniPoly parse_unipoly(std::string_view text);

/// Series text: a sum of terms c*x^e with rational exponents written x^(p/q), optionally
/// followed by an order term O(x^e).
PuiseuxSeries parse_series(std::string_view text);

/// Parses "a,b" with rational coordinates.
std::pair<Rational, Rational> parse_point(std::string_view text);

}  // namespace imult
