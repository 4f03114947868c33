#pragma once

#include <stdexcept>
#include <string>

#include "clifcomp/products.hpp"

namespace clifcomp {

// Lexical or syntactic failure, with a 1-based input position.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int pos)
      : std::runtime_error(msg + " at " + std::to_string(pos)), position(pos) {}
  int position;
};

// Grammar (whitespace-insensitive):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-'* atom
//   atom   := scalar [blade] | blade | '(' expr ')' [blade]
//   scalar := RATIONAL ['s3'] | 's3'
// '*' evaluates the session product of the handle; a scalar (or
// parenthesized scalar expression) juxtaposed with a blade symbol scales the
// blade coordinatewise, independent of the session product, so printed
// coefficients round-trip under every product.
Multivector parse_expression(const std::string& text, const AlgebraHandle& session);

// Convenience: geometric product as the session product.
Multivector parse_expression(const std::string& text, Signature sig);

// Scalar literal / scalar expression, e.g. "-1/2 + 1/2 s3".
QSqrt3 parse_scalar(const std::string& text);

// Canonical text in coordinate order with zero terms omitted; "0" for the
// zero multivector. parse(print(x)) == x.
std::string print_canonical(const Multivector& x);

}  // namespace clifcomp
