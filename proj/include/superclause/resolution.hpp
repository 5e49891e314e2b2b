#pragma once

// The resolution calculus on clause sets.
//
// Two clauses resolve when exactly one variable occurs with opposite signs in
// them; the resolvent is the union of the rest.  With two or more clashing
// variables the resolvent would be tautological, so such pairs do not resolve
// at all.  Under this rule a resolvent is automatically tautology-free and
// distinct from both parents.
//
// The closure operation saturates a formula under resolution.  It removes
// exact duplicates but deliberately keeps subsumed clauses: the analyses built
// on top are sensitive to the syntactic difference.  A clause budget bounds
// the closure size; hitting it is reported through the `truncated` flag, never
// by silently returning a partial answer, and the callers that need the full
// closure refuse truncated results.

#include <cstdint>
#include <optional>

#include "superclause/cnf.hpp"

namespace superclause {

inline constexpr int kDefaultClosureBudget = 100000;

struct ClosureResult {
  Formula clauses;                  // contains the input formula
  std::int64_t generation_count = 0;  // derived clauses actually added
  bool truncated = false;           // true when the budget cut saturation short
};

// The resolvent of c and d, or nothing when they do not resolve (no clashing
// variable, or more than one).
std::optional<Clause> resolve_pair(const Clause& c, const Clause& d);

// All resolvents of c with members of f (not including c or f's clauses
// themselves unless they arise as resolvents).
Formula resolve_clause_with(const Clause& c, const Formula& f);

// All resolvents of pairs taking one clause from a and one from b.
Formula resolve_sets(const Formula& a, const Formula& b);

// Saturation under resolution, up to `budget` total clauses.
ClosureResult resolution_closure(const Formula& f,
                                 int budget = kDefaultClosureBudget);

// Whether c is a member of the resolution closure of f (exact clause, not
// entailment).  Throws CapacityError if the closure exceeds the budget before
// the question is settled.
bool derives(const Formula& f, const Clause& c,
             int budget = kDefaultClosureBudget);

// The subsumption-minimal clauses of the closure: every closure clause that
// has no strict subset in the closure.  Independent of the syntactic
// presentation of f.  Throws CapacityError on a truncated closure.
Formula prime_implicates(const Formula& f, int budget = kDefaultClosureBudget);

// Removes variable x while preserving all models over the remaining
// variables: clauses mentioning x are replaced by the resolvents of the
// x-clauses against the (not x)-clauses.
Formula forget_variable(const Formula& f, const Variable& x);

}  // namespace superclause
