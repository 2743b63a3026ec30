#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gvd/polynomial.hpp"
#include "gvd/ring.hpp"

namespace gvd {

/// Syntax error at a 0-based offset into the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

class UnknownVariableError : public ParseError {
 public:
  UnknownVariableError(const std::string& name, size_t position)
      : ParseError("unknown variable '" + name + "'", position), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Comma-separated variable list with single-letter range sugar, e.g.
/// "a..f" or "x,y,z" or "a..c,t".
Ring parse_ring(const std::string& text);

/// Grammar: identifiers [a-zA-Z][a-zA-Z0-9_]*, integer literals, operators
/// + - * / ^ with standard precedence, unary minus, parentheses. Implicit
/// multiplication is a syntax error. '/' requires a nonzero constant divisor.
Polynomial parse_polynomial(const std::string& text, const Ring& ring);

/// Comma-separated generator list; an empty string yields no generators.
std::vector<Polynomial> parse_polynomial_list(const std::string& text, const Ring& ring);

/// Comma-separated variable names forming a permutation of the ring.
std::vector<int> parse_variable_order(const std::string& text, const Ring& ring);

}  // namespace gvd
