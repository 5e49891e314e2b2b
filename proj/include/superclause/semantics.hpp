#pragma once

// Semantic queries: satisfiability, entailment, equivalence.
//
// The general path enumerates assignments over the variables of the query,
// guarded by a variable cap (default 24, overridable per call; the CLI also
// honors the SUPERCLAUSE_MAX_VARS environment variable).  Two recognized
// fragments bypass enumeration entirely:
//
//  - Horn formulas (at most one positive literal per clause): refutation by
//    unit propagation, which is complete for Horn clause sets;
//  - Krom formulas (at most two literals per clause): reachability in the
//    implication graph via strongly connected components.
//
// Entailment f |= g reduces to one unsatisfiability question per clause of g,
// and adjoining the negation of a clause only adds unit clauses, so the Horn
// and Krom shortcuts remain available whenever f itself is Horn or Krom.

#include <optional>

#include "superclause/cnf.hpp"

namespace superclause {

inline constexpr int kDefaultVariableCap = 24;

bool is_horn(const Formula& f);
bool is_krom(const Formula& f);

// Throws CapacityError when the query needs model enumeration over more than
// `cap` variables; the message names both numbers.
bool satisfiable(const Formula& f, int cap = kDefaultVariableCap);
bool entails(const Formula& f, const Clause& c, int cap = kDefaultVariableCap);
bool entails(const Formula& f, const Formula& g, int cap = kDefaultVariableCap);
bool equivalent(const Formula& f, const Formula& g,
                int cap = kDefaultVariableCap);

// A model of `f` over exactly the variables of `f`, if one exists.  Uses the
// same cap-guarded strategy as satisfiable().
std::optional<Assignment> find_model(const Formula& f,
                                     int cap = kDefaultVariableCap);

// All models of `f` over the given variable universe (which must cover the
// variables of `f`), in lexicographic order of the universe's value vector.
// Enumerative by nature, so the cap applies to universe.size().
std::vector<Assignment> all_models(const Formula& f,
                                   const std::vector<Variable>& universe,
                                   int cap = kDefaultVariableCap);

// True when every literal of c occurs in d (then c entails d on its own).
bool subsumes(const Clause& c, const Clause& d);

}  // namespace superclause
