#pragma once

// Superredundancy checkers and superirredundancy provers.
//
// A clause c of formula F is *superredundant* when the resolution closure of
// F, minus the clause c itself, entails c; otherwise c is *superirredundant*.
// Plain redundancy (F minus c entails c) implies superredundancy but not the
// other way around, and the property depends on the syntactic presentation of
// F, not just on its models.
//
// Several equivalent checks are provided:
//
//  - definition:  build the closure, drop c, test entailment;
//  - first-step:  no closure needed: F minus c, plus all resolvents of c with
//                 F, entails c exactly when c is superredundant;
//  - last-step:   c is superredundant exactly when the closure contains a
//                 strict subset of c or two clauses resolving to exactly c;
//  - unit:        for a unit clause (l), a reduced clause set decides it;
//  - horn-krom:   first-step where entailment stays polynomial because the
//                 formula is Horn or Krom.
//
// Superirredundancy can also be *proved* without any entailment test by a
// chain of transformations that each preserve it: substituting a truth value
// for a variable outside the clause (when the formula does not contain the
// clause extended with the opposite literal), dropping a satisfiable
// variable-disjoint part, and deleting a clause that contains an otherwise
// unopposed literal.  The chain ends when nothing resolves and no strict
// subset of the clause remains: then the clause is superirredundant in the
// residual, hence in the original formula.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superclause/cnf.hpp"
#include "superclause/resolution.hpp"
#include "superclause/semantics.hpp"

namespace superclause {

// One step of a superirredundancy proof.
struct SubstitutionStep {
  enum class Kind { assign, drop_component, delete_pure };
  Kind kind = Kind::assign;
  // assign
  Variable var;
  bool value = false;
  // drop_component
  Formula dropped;
  // delete_pure
  Literal pure;
  Clause deleted;
};

struct Certificate {
  enum class Kind {
    subset_clause,       // a strict subset of the clause is in the closure
    last_step_pair,      // two closure clauses resolve to exactly the clause
    entailing_set,       // a clause set that entails the clause
    substitution_chain,  // a superirredundancy proof (see above)
  };
  Kind kind = Kind::entailing_set;
  Clause subset;                        // subset_clause
  Clause pair_first, pair_second;       // last_step_pair
  Formula entailing;                    // entailing_set
  std::vector<SubstitutionStep> steps;  // substitution_chain
  Formula residual;                     // substitution_chain: terminal formula
};

struct SuperredundancyVerdict {
  Clause clause;
  bool superredundant = false;
  std::vector<std::string> methods_used;
  std::optional<Certificate> certificate;
  bool degenerate = false;  // the formula contains the empty clause
};

// Plain redundancy: F minus c entails c.  Pre: c in f.
bool is_redundant(const Formula& f, const Clause& c,
                  int cap = kDefaultVariableCap);

// The five checks.  All require c (or the unit's clause) to be in f and all
// return the same answer; they differ in cost and in applicability.
bool check_super_definition(const Formula& f, const Clause& c,
                            int cap = kDefaultVariableCap,
                            int budget = kDefaultClosureBudget,
                            Certificate* certificate = nullptr);
bool check_super_first_step(const Formula& f, const Clause& c,
                            int cap = kDefaultVariableCap,
                            Certificate* certificate = nullptr);
bool check_super_last_step(const Formula& f, const Clause& c,
                           int budget = kDefaultClosureBudget,
                           Certificate* certificate = nullptr);
// Unit clause (l): decides superredundancy of that unit from the clauses not
// containing the opposite literal plus the clauses that contained it, reduced.
bool check_super_unit(const Formula& f, const Literal& l,
                      int cap = kDefaultVariableCap);
// Unit clause (l) whose negation occurs nowhere in f: superredundancy of (l)
// equals entailment of l by f minus the unit.
bool check_super_pure_unit(const Formula& f, const Literal& l,
                           int cap = kDefaultVariableCap);
// First-step check restricted to Horn or Krom formulas; never enumerates.
// Pre: f is Horn or Krom.
bool check_super_horn_krom(const Formula& f, const Clause& c);

// Monotonicity shortcut: a clause superredundant in f stays superredundant in
// f with extra clauses added.  Returns superredundancy of c in f + extra,
// skipping recomputation when the verdict on f already settles it.
// Pre: c in f; extra must not contain c.
bool check_super_monotone_superset(const Formula& f, const Clause& c,
                                   const Formula& extra,
                                   int cap = kDefaultVariableCap);

// Tries to prove c superirredundant in f by a transformation chain (see file
// comment).  Returns the chain on success, nothing if the search fails --
// failure proves nothing by itself.  max_depth bounds the number of
// substitution steps; by default, the number of variables of f outside c.
std::optional<Certificate> prove_superirredundant_by_substitution(
    const Formula& f, const Clause& c, int max_depth = -1,
    int cap = kDefaultVariableCap);

// For a literal l that occurs in no clause of f (the negation may occur):
// the unit (l) added to f is superirredundant there whenever f + (l) is
// satisfiable.  Returns true in that case; nothing when f + (l) is
// unsatisfiable, where this criterion says nothing either way.  Never
// returns false.
std::optional<bool> check_unit_no_positive(const Formula& f, const Literal& l,
                                           int cap = kDefaultVariableCap);

// Aggregated check used by the command line tool.
enum class CheckMethod { definition, first_step, last_step, unit, horn_krom };
SuperredundancyVerdict check_superredundant(const Formula& f, const Clause& c,
                                            CheckMethod method,
                                            int cap = kDefaultVariableCap,
                                            int budget = kDefaultClosureBudget);

const char* method_name(CheckMethod m);

}  // namespace superclause
