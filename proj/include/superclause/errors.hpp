#pragma once

// Exception hierarchy for the superclause library.
//
// Every contract violation surfaces as a typed exception carrying a plain
// sentence that names the offending object (clause text, variable name,
// counts).  The CLI maps exception types to stable exit codes; the library
// itself never prints.

#include <stdexcept>
#include <string>

namespace superclause {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (either clause syntax).  Carries a 1-based line number
// when the location is known, 0 otherwise.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// A clause that contains both a variable and its negation.  Such clauses are
// always true and are not representable here; the resolution calculus this
// library implements never produces them either.
class TautologyError : public Error {
public:
  using Error::Error;
};

// A documented precondition of an operation does not hold (clause not in the
// formula, half of a partition already present, and so on).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// A configurable resource cap was exceeded: too many variables for model
// enumeration, a resolution closure over budget where a complete closure is
// required, or a subset-search oracle asked to enumerate too many clauses.
class CapacityError : public Error {
public:
  using Error::Error;
};

// A repair run (splitting clauses to make them superirredundant) could not
// finish: either some clause admits no viable partition or the iteration cap
// was reached.  The message names the clause or the remaining queue.
class FixError : public Error {
public:
  using Error::Error;
};

}  // namespace superclause
