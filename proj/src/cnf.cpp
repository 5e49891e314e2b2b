#include "superclause/cnf.hpp"

#include <algorithm>
#include <cctype>

namespace superclause {

void validate_variable_name(const Variable& name) {
  if (name.empty())
    throw PreconditionError("variable name must be nonempty");
  if (name.front() == '-' || name.front() == '!')
    throw PreconditionError("variable name '" + name +
                            "' must not start with a negation character");
  bool all_digits = true;
  for (unsigned char ch : name) {
    if (std::isspace(ch))
      throw PreconditionError("variable name '" + name +
                              "' must not contain whitespace");
    if (!std::isdigit(ch)) all_digits = false;
  }
  if (all_digits)
    throw PreconditionError("variable name '" + name +
                            "' is reserved (digit-only tokens denote numbered "
                            "literals and the empty clause)");
}

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
  for (const Literal& l : lits_) validate_variable_name(l.var);
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  // After sorting, opposite literals of one variable are adjacent.
  for (std::size_t i = 1; i < lits_.size(); ++i) {
    if (lits_[i].var == lits_[i - 1].var) {
      std::string text;
      for (const Literal& l : lits_) {
        if (!text.empty()) text += ' ';
        text += (l.positive ? "" : "-") + l.var;
      }
      throw TautologyError("clause '" + text + "' is tautological: variable '" +
                           lits_[i].var + "' occurs with both signs");
    }
  }
}

bool Clause::contains(const Literal& l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::mentions(const Variable& v) const {
  return contains(Literal(v, false)) || contains(Literal(v, true));
}

bool Clause::subset_of(const Clause& other) const {
  return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(),
                       lits_.end());
}

Clause Clause::union_with(const Clause& other) const {
  std::vector<Literal> merged = lits_;
  merged.insert(merged.end(), other.lits_.begin(), other.lits_.end());
  return Clause(std::move(merged));
}

Clause Clause::without(const Literal& l) const {
  std::vector<Literal> rest;
  rest.reserve(lits_.size());
  for (const Literal& m : lits_)
    if (m != l) rest.push_back(m);
  return Clause(std::move(rest));
}

std::vector<Variable> Clause::variables() const {
  std::vector<Variable> vars;
  vars.reserve(lits_.size());
  for (const Literal& l : lits_) vars.push_back(l.var);
  // Literals are sorted by variable and each variable occurs once.
  return vars;
}

bool operator<(const Clause& a, const Clause& b) {
  // Clause-to-clause order: lexicographic over the literal sequences, where a
  // positive literal sorts before the negative one of the same variable.  The
  // clause index shown by the command line tool follows this order.
  const auto key_less = [](const Literal& x, const Literal& y) {
    if (x.var != y.var) return x.var < y.var;
    return x.positive > y.positive;
  };
  return std::lexicographical_compare(a.lits_.begin(), a.lits_.end(),
                                      b.lits_.begin(), b.lits_.end(), key_less);
}

Formula::Formula(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()),
                 clauses_.end());
}

bool Formula::contains(const Clause& c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

bool Formula::contains_empty_clause() const { return contains(Clause()); }

std::optional<std::size_t> Formula::index_of(const Clause& c) const {
  auto it = std::lower_bound(clauses_.begin(), clauses_.end(), c);
  if (it == clauses_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - clauses_.begin());
}

std::vector<Variable> Formula::variables() const {
  std::vector<Variable> vars;
  for (const Clause& c : clauses_)
    for (const Literal& l : c.literals()) vars.push_back(l.var);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Formula Formula::with(const Clause& c) const {
  std::vector<Clause> all = clauses_;
  all.push_back(c);
  return Formula(std::move(all));
}

Formula Formula::without(const Clause& c) const {
  std::vector<Clause> rest;
  rest.reserve(clauses_.size());
  for (const Clause& d : clauses_)
    if (d != c) rest.push_back(d);
  return Formula(std::move(rest));
}

Formula Formula::union_with(const Formula& other) const {
  std::vector<Clause> all = clauses_;
  all.insert(all.end(), other.clauses_.begin(), other.clauses_.end());
  return Formula(std::move(all));
}

std::size_t formula_size(const Formula& f) {
  std::size_t n = 0;
  for (const Clause& c : f.clauses()) n += c.size();
  return n;
}

Formula clauses_with_literal(const Formula& f, const Literal& l) {
  std::vector<Clause> hits;
  for (const Clause& c : f.clauses())
    if (c.contains(l)) hits.push_back(c);
  return Formula(std::move(hits));
}

Formula substitute(const Formula& f, const Variable& x, bool value) {
  const Literal satisfied(x, value);
  const Literal falsified(x, !value);
  std::vector<Clause> result;
  result.reserve(f.size());
  for (const Clause& c : f.clauses()) {
    if (c.contains(satisfied)) continue;  // clause is true under the value
    if (c.contains(falsified))
      result.push_back(c.without(falsified));  // may become the empty clause
    else
      result.push_back(c);
  }
  return Formula(std::move(result));
}

bool satisfies(const Assignment& a, const Clause& c) {
  // No early return: the coverage precondition is checked for every literal,
  // so that an unassigned variable is reported even in a satisfied clause.
  bool satisfied = false;
  for (const Literal& l : c.literals()) {
    auto it = a.find(l.var);
    if (it == a.end())
      throw PreconditionError("assignment does not cover variable '" + l.var +
                              "'");
    if (it->second == l.positive) satisfied = true;
  }
  return satisfied;
}

bool satisfies(const Assignment& a, const Formula& f) {
  bool satisfied = true;
  for (const Clause& c : f.clauses()) satisfied = satisfies(a, c) && satisfied;
  return satisfied;
}

std::string to_string(const Literal& l) {
  return (l.positive ? "" : "-") + l.var;
}

std::string to_string(const Clause& c) {
  if (c.empty()) return "0";
  std::string text;
  for (const Literal& l : c.literals()) {
    if (!text.empty()) text += ' ';
    text += to_string(l);
  }
  return text;
}

std::string to_string(const Formula& f) {
  std::string text;
  for (const Clause& c : f.clauses()) {
    if (!text.empty()) text += "; ";
    text += to_string(c);
  }
  return text;
}

}  // namespace superclause
