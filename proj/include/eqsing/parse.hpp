#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqsing/bipoly.hpp"
#include "eqsing/mpoly.hpp"

namespace eqsing {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownVariable, NegativeExponent };
  ParseError(Kind kind, std::size_t offset, const std::string& what);
  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

/// Parses an expression over the named variables; variable i becomes
/// symbol id i of the returned polynomial.
///
///   expr   := term (('+'|'-') term)*      (a leading '-' is also accepted)
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | var | '(' expr ')'
///   rational := int ('/' nat)?
MPoly parse_expression(std::string_view text, const std::vector<std::string>& variables);

/// Parses a polynomial in two source variables (default names a, t).
BiPoly parse_poly(std::string_view text, const std::vector<std::string>& variables = {"a", "t"});

/// Interprets a polynomial whose symbols 0 and 1 stand for a and t.
BiPoly to_bipoly(const MPoly& p);

/// Substitutes BiPolys for the variables of an ambient polynomial.
BiPoly compose_ambient(const MPoly& p, const std::vector<BiPoly>& values);

}  // namespace eqsing
