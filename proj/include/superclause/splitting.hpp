#pragma once

// Splitting clauses on fresh variables to repair superredundancy.
//
// Splitting replaces a clause c1 v c2 by the pair c1 v x, c2 v -x for a fresh
// variable x.  Forgetting x afterwards restores the original formula, so the
// models over the old variables never change.  The point of the maneuver:
// when ci alone is not superredundant in f + ci, the half ci v x is
// guaranteed superirredundant in the split formula.  The only clauses that
// can lose superirredundancy as a side effect are those resolving with both
// halves; everything else keeps its status.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "superclause/cnf.hpp"
#include "superclause/semantics.hpp"

namespace superclause {

struct SplitPlan {
  Clause original;   // the clause that was split
  Clause half_a;     // first half plus the fresh positive literal
  Clause half_b;     // second half plus the fresh negative literal
  Variable fresh;
  Formula collateral;  // clauses of f - original resolving with both halves
};

// Replaces c (which must be in f) by the two halves of `partition` extended
// with a fresh variable.  The partition must split c's literals exactly into
// two nonempty disjoint parts.  If `fresh` is given it must not occur in f;
// otherwise the first unused name of the form _s0, _s1, ... is taken.
std::pair<Formula, SplitPlan> split_clause(
    const Formula& f, const Clause& c,
    const std::pair<Clause, Clause>& partition,
    std::optional<Variable> fresh = std::nullopt);

// The guarantee test run before splitting: for each half ci, is ci
// superredundant in f + ci?  A false answer certifies that the corresponding
// half of the split will be superirredundant.  Pre, mirroring the guarantee's
// assumptions: the halves are nonempty and disjoint, their union is a clause
// of f, and neither half is itself in f.  The thrown message names the
// violated assumption.
std::pair<bool, bool> precheck_make_irredundant(
    const Formula& f, const std::pair<Clause, Clause>& partition,
    int cap = kDefaultVariableCap);

// The clauses of f minus (c1 v c2) that resolve with both c1 and c2: the only
// clauses whose superirredundancy the split could destroy.
Formula collateral_risk(const Formula& f, const std::pair<Clause, Clause>& partition);

struct FixResult {
  Formula formula;
  std::vector<SplitPlan> plans;
};

// Splits the given target clauses (and any collateral clauses that turn
// superredundant along the way) until all of them are superirredundant.
// Partitions are tried in a fixed order: first literal alone versus the rest,
// then every other bipartition; a partition is viable when both precheck
// answers are false.  Throws FixError when a superredundant clause has no
// viable partition or when the global cap of 4 x targets splits is reached.
FixResult make_superirredundant(
    const Formula& f, const std::vector<Clause>& targets,
    int cap = kDefaultVariableCap,
    std::function<Variable(const Formula&)> fresh_namer = nullptr);

}  // namespace superclause
