#pragma once

#include <stdexcept>
#include <string>

#include "genmodels/formula.hpp"

namespace genmodels {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

// Parses `text` in the given language and checks well-formedness.
// Binder bodies extend as far right as possible. After parsing, shadowed
// binders of the modal, monadic second-order and two-sorted languages are
// renamed apart; first-order object binders are never renamed because their
// names refer to a model's declared variable universe.
Formula parse(Language lang, const std::string& text);

Language language_from_string(const std::string& s);
std::string to_string(Language lang);

}  // namespace genmodels
