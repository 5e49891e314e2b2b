#pragma once

// Core CNF value types.
//
// Everything in this library is an immutable value: a Literal is a variable
// name plus a sign, a Clause is a duplicate-free, tautology-free, canonically
// ordered set of literals, and a Formula is a duplicate-free, canonically
// ordered set of clauses.  Canonical order makes structural equality coincide
// with set equality and gives every clause a stable, reproducible index inside
// its formula, which the command line tool relies on.
//
// Canonical literal order inside a clause: by variable name ascending, and
// for the two literals of one variable the negative one first.  Canonical
// clause order inside a formula: lexicographic by variable name ascending,
// with the positive literal of a variable sorting before the negative one
// (see Clause::operator<); the two orders differ deliberately so that a
// formula lists a variable's positive clauses before its negative ones.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superclause/errors.hpp"

namespace superclause {

using Variable = std::string;

// Throws PreconditionError unless `name` is a usable variable name: nonempty,
// no whitespace, not starting with '-' or '!', and not all digits (digit-only
// tokens are reserved so that clause text stays unambiguous).
void validate_variable_name(const Variable& name);

struct Literal {
  Variable var;
  bool positive = true;

  Literal() = default;
  Literal(Variable v, bool pos) : var(std::move(v)), positive(pos) {}

  Literal negated() const { return Literal(var, !positive); }

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.var == b.var && a.positive == b.positive;
  }
  friend bool operator!=(const Literal& a, const Literal& b) { return !(a == b); }
  // Negative literal of a variable sorts before the positive one.
  friend bool operator<(const Literal& a, const Literal& b) {
    if (a.var != b.var) return a.var < b.var;
    return a.positive < b.positive;
  }
};

// Convenience constructors used heavily in tests:  pos("a"), neg("b").
inline Literal pos(Variable v) { return Literal(std::move(v), true); }
inline Literal neg(Variable v) { return Literal(std::move(v), false); }

class Clause {
public:
  // The empty clause (falsum): satisfied by no assignment.
  Clause() = default;

  // Canonicalizes: sorts, removes duplicate literals, validates variable
  // names.  Throws TautologyError if some variable occurs with both signs.
  explicit Clause(std::vector<Literal> lits);
  Clause(std::initializer_list<Literal> lits)
      : Clause(std::vector<Literal>(lits)) {}

  const std::vector<Literal>& literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }

  bool contains(const Literal& l) const;
  bool mentions(const Variable& v) const;
  // True when every literal of this clause also occurs in `other`.
  bool subset_of(const Clause& other) const;
  bool strict_subset_of(const Clause& other) const {
    return size() < other.size() && subset_of(other);
  }

  // Set union of the literals of two clauses.  Throws TautologyError when the
  // union contains opposite literals.
  Clause union_with(const Clause& other) const;
  // This clause without one literal (no-op if absent).
  Clause without(const Literal& l) const;

  // Sorted distinct variable names.
  std::vector<Variable> variables() const;

  friend bool operator==(const Clause& a, const Clause& b) {
    return a.lits_ == b.lits_;
  }
  friend bool operator!=(const Clause& a, const Clause& b) { return !(a == b); }
  friend bool operator<(const Clause& a, const Clause& b);

private:
  std::vector<Literal> lits_;
};

class Formula {
public:
  Formula() = default;

  // Canonicalizes: sorts clauses, removes exact duplicates.  Distinct clauses
  // are all kept, even when one subsumes another; the analyses in this library
  // are deliberately sensitive to that difference.
  explicit Formula(std::vector<Clause> clauses);
  Formula(std::initializer_list<Clause> clauses)
      : Formula(std::vector<Clause>(clauses)) {}

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }

  bool contains(const Clause& c) const;
  bool contains_empty_clause() const;
  // Position of `c` in canonical order, if present.
  std::optional<std::size_t> index_of(const Clause& c) const;

  // Sorted distinct variable names over all clauses.
  std::vector<Variable> variables() const;

  Formula with(const Clause& c) const;     // add one clause
  Formula without(const Clause& c) const;  // remove one clause (exact match)
  Formula union_with(const Formula& other) const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.clauses_ == b.clauses_;
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b) {
    return a.clauses_ < b.clauses_;
  }

private:
  std::vector<Clause> clauses_;
};

// Total truth assignment, variable name -> value.
using Assignment = std::map<Variable, bool>;

// Number of literal occurrences summed over all clauses.  This is the size
// measure used by the minimization routines, not the clause count.
std::size_t formula_size(const Formula& f);

// The clauses of `f` that contain the literal `l` itself (not its negation).
Formula clauses_with_literal(const Formula& f, const Literal& l);

// Replaces variable `x` by a truth value: clauses satisfied by the value are
// dropped, the opposite literal is removed from the others.  A clause whose
// literals are all removed stays as the empty clause.  The result never
// mentions `x`.
Formula substitute(const Formula& f, const Variable& x, bool value);

// Evaluation.  Every variable of the clause/formula must be assigned;
// otherwise PreconditionError.
bool satisfies(const Assignment& a, const Clause& c);
bool satisfies(const Assignment& a, const Formula& f);

// Plain text rendering used by reports, error messages, and the named file
// format: literals in canonical order, negation as '-', empty clause as "0".
std::string to_string(const Literal& l);
std::string to_string(const Clause& c);
std::string to_string(const Formula& f);  // clause texts joined by "; "

}  // namespace superclause
