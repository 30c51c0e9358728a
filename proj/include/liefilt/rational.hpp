#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace liefilt {

// Exact rational scalar. boost keeps values canonical (lowest terms,
// positive denominator), so equality is structural.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct ParseError : std::runtime_error {
  int line = 0;
  int col = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg), line(line_), col(col_) {}
};

// Invariant violations that signal an implementation bug, never bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Accepts "p" or "p/q" with optional sign, q > 0 after normalization.
Rational parse_rational(const std::string& text);

// Renders "p" or "p/q", always canonical.
std::string to_string(const Rational& r);

}  // namespace liefilt
