#pragma once

// Hardness-reduction instance builder and desk-scale verifier.
//
// From an arbitrary CNF F over n variables and m clauses, build_reduction
// constructs a Horn formula A over the variable families
//
//   x1..xn, e1..en   truth selectors: x_i "variable i true", e_i "false"
//   t1..tn           "variable i has a truth value"
//   c1..cm           "clause j is satisfied"
//   r1..rn, s1..sn   bridge variables splitting the two long clauses per i
//   q                guard appearing negatively in the selector units
//
// and a target size k, such that F is satisfiable exactly when A has an
// equivalent formula of size k (and no smaller one).  The fixed part
// A_T + A_C + A_B' is superirredundant clause by clause, hence present in
// every minimal equivalent formula; the satisfiable case completes it with
// one selector clause per index (x_i v -q or e_i v -q) read off a model.
//
// verify_fixed_superirredundant replays the three substitution arguments that
// prove the fixed part superirredundant, checking every side condition, and
// verify_reduction checks the equivalence claim itself in both directions on
// small instances.

#include <optional>
#include <string>
#include <vector>

#include "superclause/cnf.hpp"
#include "superclause/minimality.hpp"
#include "superclause/resolution.hpp"
#include "superclause/semantics.hpp"

namespace superclause {

struct ReductionInstance {
  Formula input_cnf;  // input renamed to x1..xn, clauses in canonical order
  Formula a_f;        // selector units: x_i v -q, e_i v -q
  Formula a_t;        // -x_i v t_i, -e_i v t_i
  Formula a_c;        // -x_i v c_j when x_i in f_j; -e_i v c_j when -x_i in f_j
  Formula a_b_prime;  // per i: the two long clauses split on r_i / s_i
  std::size_t n = 0;  // input variables
  std::size_t m = 0;  // input clauses
  std::size_t k = 0;  // 2n + size(a_t) + size(a_c) + size(a_b_prime)
  std::vector<Variable> alphabet;  // x*, e*, t*, c*, r*, s*, q

  Formula fixed() const;  // a_t + a_c + a_b_prime
  Formula full() const;   // a_f + fixed
};

// Pre: f nonempty, no empty clause.  Input variables are renamed to x<i> in
// order of first occurrence (canonical traversal); clause j of the renamed
// formula in canonical order is f_j.
ReductionInstance build_reduction(const Formula& f);

struct FixedClauseCheck {
  Clause target;
  bool proved = false;
  std::string note;  // failure reason, or the substitution family used
};

struct FixedVerification {
  bool ok = false;
  std::vector<FixedClauseCheck> checks;  // one entry per fixed clause
  std::vector<std::string> notes;        // cross-check summary lines
};

// Proves every clause of the fixed part superirredundant in the full
// instance, by value substitutions whose side conditions are checked at each
// step and whose residuals are closed under no resolution.  On small
// alphabets a sample of the verdicts is cross-checked against the
// closure-based definition check.
FixedVerification verify_fixed_superirredundant(
    const ReductionInstance& inst, int cap = kDefaultVariableCap,
    int budget = kDefaultClosureBudget);

// The size-k completion read off a model of the input: picks x_i v -q when
// the model sets x_i, else e_i v -q, on top of the fixed part.  Returns
// nothing when m does not satisfy the input.  Pre: m assigns every input
// variable.
std::optional<Formula> witness_formula(const ReductionInstance& inst,
                                       const Assignment& m);

struct ReductionVerification {
  bool input_satisfiable = false;
  bool consistent = false;
  std::size_t witnesses_checked = 0;   // satisfiable branch
  std::size_t candidates_refuted = 0;  // unsatisfiable branch
  std::vector<std::string> checks;     // deterministic narrative lines
};

// Two-sided check of the reduction claim on a small instance (n <= 3, m <= 3):
//
//  (a) input satisfiable: for every model, the witness exists, has size
//      exactly k, and is equivalent to the full instance;
//  (b) input unsatisfiable: every candidate completion assigning one clause
//      among {x_h v -q, e_h v -q, t_h v -q} per index is inequivalent, which
//      rules out any size-k equivalent by the fixed part's superirredundancy.
//
// On n = 1 instances both branches are additionally validated by an
// exhaustive search over closure completions of total size <= 2n.
ReductionVerification verify_reduction(const ReductionInstance& inst,
                                       int cap = kDefaultVariableCap,
                                       int budget = kDefaultClosureBudget,
                                       const CancelToken* cancel = nullptr);

}  // namespace superclause
