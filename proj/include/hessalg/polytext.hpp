#ifndef HESSALG_POLYTEXT_HPP
#define HESSALG_POLYTEXT_HPP

#include <string>
#include <vector>

#include "hessalg/polynomial.hpp"

namespace hessalg {

// Textual form of a polynomial or a parameterized family template.
struct PolyText {
  std::string source;
  std::vector<std::string> variable_names;
  std::vector<std::string> parameter_names;
};

// Grammar (whitespace insignificant):
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | power
//   power   := primary ('^' uint)?
//   primary := number | identifier | '(' expr ')'
//   number  := uint ('/' uint)?
// Multiplication is always explicit; '^' takes a nonnegative integer literal;
// '/' occurs only inside rational literals.
Polynomial parse_polynomial(const PolyText& text);

std::string render_polynomial(const Polynomial& p,
                              const std::vector<std::string>& variable_names);

// substitutes each assignment tuple for the parameters; results are canonical
// polynomials in the variables only
std::vector<Polynomial> parse_family(
    const PolyText& text, const std::vector<std::vector<Rational>>& assignments);

// "p" or "p/q" with optional leading '-'; rejects everything else
Rational parse_rational(const std::string& text);

std::string render_rational(const Rational& r);

} // namespace hessalg

#endif
