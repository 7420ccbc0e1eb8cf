#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "supercontact/superfunction.hpp"

namespace supercontact {

/// Syntax or name error in an expression; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the expression grammar
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' INT)*
///   primary := INT ('/' INT)? | VAR | '(' expr ')'
///
/// with VAR one of z, x<k>, y<k> (1 <= k <= l), th<j> (1 <= j <= n).
/// Grassmann words are normalized on the fly, so "th2*th1" is -th1*th2 and
/// "th1^2" is 0.
Superfunction parse_expr(std::string_view src, const Dims& dims);

/// Canonical text; parse_expr(format_expr(f), f.dims()) == f.
std::string format_expr(const Superfunction& f);

/// Canonical text of a single monomial without coefficient ("1" for the unit).
std::string format_monomial(const Monomial& m, const Dims& dims);

}  // namespace supercontact
