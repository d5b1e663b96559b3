#pragma once

#include <stdexcept>
#include <string>

namespace genmodels {

// Thrown when an input is syntactically valid but semantically unusable
// (bad sort, missing predicate, non-admissible value, exceeded cap, ...).
class SemanticError : public std::runtime_error {
public:
  enum class Code {
    NotGeneralMuFrame,
    BoundExceeded,
    NotAdmissible,
    CapExceeded,
    AssignmentNotAdmissible,
    UnknownPredicate,
    UnknownVariable,
    UnknownLetter,
    SetValueNotInFamily,
    DivergentLfp,
    NonMonotoneDetected,
    VariableOutsideUniverse,
    ClosureViolation,
    InvalidAlgebra,
    InvalidModel,
    InvalidFormula,
  };

  SemanticError(Code code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  Code code() const { return code_; }

private:
  Code code_;
};

// Malformed external input (files, JSON schemas, flags); maps to exit code 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace genmodels
