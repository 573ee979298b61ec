#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eulerform/errors.hpp"
#include "eulerform/ring.hpp"

namespace eulerform {

/// Syntax error with a 1-based source position.
class ParseError : public AlgebraError {
 public:
  ParseError(const std::string& msg, int line, int column)
      : AlgebraError(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses "x^2*y - 3/2*z + 1" style input (implicit products like "2x" and
/// "(x+y)(x-y)" allowed) into a polynomial of `ring`.
Polynomial parse_polynomial(const PolyRing& ring, std::string_view text);

/// Comma-separated list of polynomials.
std::vector<Polynomial> parse_polynomials(const PolyRing& ring, std::string_view text);

}  // namespace eulerform
