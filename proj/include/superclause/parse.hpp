#pragma once

// Reading and writing formulas in two text formats.
//
// Named format: one clause per line, literals are variable names separated by
// whitespace, negation is a leading '-' or '!', comments start with '#',
// blank lines are ignored, and a line containing exactly "0" is the empty
// clause.  Variable names must not be all digits.
//
// DIMACS format: the usual "p cnf VARS CLAUSES" header, clauses as
// zero-terminated integer lists, 'c' comment lines, and a tolerated trailing
// '%' section.  Arbitrary variable names survive the numeric format through
// "c var <number> <name>" comment lines, which the writer emits whenever the
// variable set is not exactly x1..xV in natural numbering and the reader maps
// back; an unmapped number <k> reads back as the name "x<k>".
//
// Round trip: for both formats, parse(serialize(f, fmt), fmt) == f.

#include <string>
#include <utility>

#include "superclause/cnf.hpp"

namespace superclause {

enum class Format { named, dimacs };

// Parses `text` in the given format.  Throws ParseError with a line number on
// malformed input, including tautological clauses (the message names the
// clause).  Duplicate clauses collapse silently.
Formula parse(const std::string& text, Format format);

// DIMACS input is recognized by its mandatory "p cnf" header; everything else
// is treated as named format.
Format detect_format(const std::string& text);
std::pair<Formula, Format> parse_auto(const std::string& text);

// Serializes in canonical clause order; output always ends with a newline
// unless the formula is empty in named format.
std::string serialize(const Formula& f, Format format);

const char* format_name(Format format);  // "named" or "dimacs"

}  // namespace superclause
