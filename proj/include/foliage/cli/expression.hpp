#pragma once

#include <string>

#include "foliage/algebra/poly2.hpp"
#include "foliage/errors.hpp"

namespace foliage {

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_, column_;
};

// Polynomial expression over the rationals in the variables `vars`
// (single letters). Grammar, loosest binding first:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/' | <juxtaposition>) unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' natural)?
//   atom  := natural | variable | '(' expr ')'
// Division is only by nonzero constants.
Poly2 parse_poly(const std::string& text, const Poly2::Vars& vars = {"x", "y"});

}  // namespace foliage
