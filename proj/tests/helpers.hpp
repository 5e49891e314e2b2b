#pragma once

// Conveniences shared by the test files: terse formula/clause builders on
// top of the named text format, and seeded random-instance generators.

#include <random>
#include <string>

#include "superclause/cnf.hpp"

namespace testutil {

// F("a b; -a c; 0"): clauses separated by ';', literals by spaces, negation
// with '-', "0" for the empty clause.
superclause::Formula F(const std::string& text);

// Single clause in the same syntax.
superclause::Clause C(const std::string& text);

// Random tautology-free formula: 1..max_clauses clauses over the first
// num_vars one-letter names, each with 1..max_len distinct variables and
// random signs.  Duplicate clauses may be generated and collapse away.
superclause::Formula random_formula(std::mt19937& rng, int num_vars,
                                    int max_clauses, int max_len);

// Same, but every clause has at most one positive literal.
superclause::Formula random_horn(std::mt19937& rng, int num_vars,
                                 int max_clauses, int max_len);

// Same, but every clause has at most two literals.
superclause::Formula random_krom(std::mt19937& rng, int num_vars,
                                 int max_clauses);

}  // namespace testutil
