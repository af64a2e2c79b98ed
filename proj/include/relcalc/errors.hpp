#pragma once

#include <stdexcept>
#include <string>

namespace relcalc {

// Text could not be lexed/parsed; positions are 1-based.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_),
        col(col_) {}
};

// A precondition of an operation does not hold (missing relation symbol,
// converse/identity in a restricted input, non-sentence where a sentence is
// required, name collisions, ...).
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured safety bound was exceeded (enumeration budget, universe size,
// isomorphism search bound).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace relcalc
