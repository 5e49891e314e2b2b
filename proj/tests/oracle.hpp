#pragma once

// Reference implementations the tests trust.
//
// Everything here is written for obviousness, not speed: truth tables over
// std::map assignments, a naive quadratic fixpoint for the resolution
// closure, and full subset enumeration for minimization.  The production
// library must agree with these on every instance the tests feed them; the
// expected values frozen into the test files were produced by this code.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "superclause/cnf.hpp"

namespace oracle {

using superclause::Assignment;
using superclause::Clause;
using superclause::Formula;
using superclause::Literal;
using superclause::Variable;

// Sorted distinct variables of f.
std::vector<Variable> variables_of(const Formula& f);

// Every assignment over `vars`, in binary counting order (first variable
// flips slowest, false before true).
std::vector<Assignment> assignments_over(const std::vector<Variable>& vars);

// Truth of a clause/formula under a total assignment (empty clause: false).
bool clause_holds(const Clause& c, const Assignment& a);
bool formula_holds(const Formula& f, const Assignment& a);

// Models of f over the given universe (must cover f's variables).
std::vector<Assignment> models(const Formula& f,
                               const std::vector<Variable>& universe);

bool satisfiable(const Formula& f);
bool entails(const Formula& f, const Clause& c);
bool entails_formula(const Formula& f, const Formula& g);
bool equivalent(const Formula& f, const Formula& g);

// Resolution of two clauses: defined exactly when one variable occurs with
// opposite signs in them, and the union of the rest is the resolvent.
std::optional<Clause> resolve(const Clause& c, const Clause& d);

// Naive fixpoint closure: resolve all pairs, add new clauses, repeat.
Formula closure(const Formula& f);

// Definition-path superredundancy: closure minus the clause entails it.
bool superredundant(const Formula& f, const Clause& c);

// Literal-occurrence size.
std::size_t size_of(const Formula& f);

// All minimum-size formulas equivalent to f whose clauses come from the
// closure of f (which is where all of them live), by full subset enumeration.
std::vector<Formula> minimal_equivalents(const Formula& f);

// The models of f projected onto `keep`: enumerate over vars(f) + keep,
// restrict each model to `keep`, deduplicate.
std::set<Assignment> projected_models(const Formula& f,
                                      const std::vector<Variable>& keep);

}  // namespace oracle
