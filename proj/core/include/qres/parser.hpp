#ifndef QRES_PARSER_HPP
#define QRES_PARSER_HPP

#include <string>

#include "qres/poly.hpp"

namespace qres {

// Parses a polynomial expression over the given ring.
//
// Grammar (whitespace-insensitive):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' NAT)?
//   atom   := NAT | IDENT | '(' expr ')' | '-' atom
//
// Coefficients are reduced mod p. Errors (category "parse") carry the line
// and column of the offending token and what was expected there; undeclared
// identifiers are rejected.
Polynomial parse_poly(const std::string &src, const RingPtr &ring);

} // namespace qres

#endif
