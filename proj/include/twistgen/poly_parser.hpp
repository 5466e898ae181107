#ifndef TWISTGEN_POLY_PARSER_HPP
#define TWISTGEN_POLY_PARSER_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistgen/mpoly.hpp"

namespace twistgen {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) +
                           ")"),
        position(position) {}
  std::size_t position;
};

/// Syntax tree for the ASCII polynomial grammar:
///   expr   := ('-')? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | var | '(' expr ')'
///   var    := x | u | v1 | v2 | v3 | v4 | T
struct PolyExpr {
  enum class Kind { Number, Variable, Add, Sub, Mul, Pow, Neg };
  Kind kind;
  Rat number;                      // Number
  Var variable = Var::x;           // Variable
  std::int64_t exponent = 0;       // Pow
  std::unique_ptr<PolyExpr> lhs, rhs;

  MPoly to_mpoly() const;
};

std::unique_ptr<PolyExpr> parse_poly_expr(const std::string& text);

/// Parses and expands. parse_poly(p.str()) == p for every MPoly p.
MPoly parse_poly(const std::string& text);

}  // namespace twistgen

#endif
