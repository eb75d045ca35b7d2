// Parser for the term language over (~, /\, \/, ->, 0, 1, variables) with
// the Unicode aliases (∼, ∧, ∨, →).  Precedence from tightest to loosest:
// ~, /\, \/, ->; -> associates to the right.  Variables are re-indexed by
// sorted name so that evaluation order is independent of the order of first
// appearance.

#pragma once

#include <string>
#include <vector>

#include "nelson/common.hpp"
#include "nelson/term.hpp"

namespace nelson {

// Syntax error with a 1-based position (columns count code points) and a
// message listing the expected tokens.
class parse_error : public format_error {
 public:
  parse_error(int line, int column, const std::string& message)
      : format_error(cat(line, ":", column, ": ", message)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParsedTerm {
  TermPtr term;                        // variable i is variables[i]
  std::vector<std::string> variables;  // sorted unique names
};

ParsedTerm parse_term(const std::string& text);

struct ParsedEquation {
  TermPtr lhs, rhs;                    // indexed consistently across both sides
  std::vector<std::string> variables;  // sorted unique names of the whole equation
};

// "<term> = <term>" with exactly one '='.
ParsedEquation parse_equation(const std::string& text);

}  // namespace nelson
