#include "oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace oracle {

std::vector<Variable> variables_of(const Formula& f) {
  std::set<Variable> vars;
  for (const Clause& c : f.clauses())
    for (const Literal& l : c.literals()) vars.insert(l.var);
  return std::vector<Variable>(vars.begin(), vars.end());
}

std::vector<Assignment> assignments_over(const std::vector<Variable>& vars) {
  std::vector<Assignment> out;
  const std::size_t n = vars.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Assignment a;
    for (std::size_t i = 0; i < n; ++i)
      a[vars[i]] = ((bits >> (n - 1 - i)) & 1) != 0;
    out.push_back(a);
  }
  return out;
}

bool clause_holds(const Clause& c, const Assignment& a) {
  for (const Literal& l : c.literals())
    if (a.at(l.var) == l.positive) return true;
  return false;
}

bool formula_holds(const Formula& f, const Assignment& a) {
  for (const Clause& c : f.clauses())
    if (!clause_holds(c, a)) return false;
  return true;
}

std::vector<Assignment> models(const Formula& f,
                               const std::vector<Variable>& universe) {
  std::vector<Assignment> out;
  for (const Assignment& a : assignments_over(universe))
    if (formula_holds(f, a)) out.push_back(a);
  return out;
}

bool satisfiable(const Formula& f) {
  return !models(f, variables_of(f)).empty();
}

bool entails(const Formula& f, const Clause& c) {
  const std::vector<Variable> fv = variables_of(f);
  std::set<Variable> vars(fv.begin(), fv.end());
  for (const Literal& l : c.literals()) vars.insert(l.var);
  const std::vector<Variable> universe(vars.begin(), vars.end());
  for (const Assignment& a : assignments_over(universe))
    if (formula_holds(f, a) && !clause_holds(c, a)) return false;
  return true;
}

bool entails_formula(const Formula& f, const Formula& g) {
  for (const Clause& c : g.clauses())
    if (!entails(f, c)) return false;
  return true;
}

bool equivalent(const Formula& f, const Formula& g) {
  return entails_formula(f, g) && entails_formula(g, f);
}

std::optional<Clause> resolve(const Clause& c, const Clause& d) {
  std::set<std::pair<Variable, bool>> sc, sd;
  for (const Literal& l : c.literals()) sc.emplace(l.var, l.positive);
  for (const Literal& l : d.literals()) sd.emplace(l.var, l.positive);
  std::vector<Variable> clashes;
  for (const auto& [v, p] : sc)
    if (sd.count({v, !p}) &&
        std::find(clashes.begin(), clashes.end(), v) == clashes.end())
      clashes.push_back(v);
  if (clashes.size() != 1) return std::nullopt;
  const Variable& pivot = clashes.front();
  std::set<std::pair<Variable, bool>> merged;
  for (const auto& lit : sc)
    if (lit.first != pivot) merged.insert(lit);
  for (const auto& lit : sd)
    if (lit.first != pivot) merged.insert(lit);
  for (const auto& [v, p] : merged)
    if (merged.count({v, !p})) return std::nullopt;  // unreachable by the count
  std::vector<Literal> lits;
  for (const auto& [v, p] : merged) lits.emplace_back(v, p);
  return Clause(lits);
}

Formula closure(const Formula& f) {
  std::set<Clause> seen(f.clauses().begin(), f.clauses().end());
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Clause> snapshot(seen.begin(), seen.end());
    for (const Clause& c : snapshot)
      for (const Clause& d : snapshot)
        if (auto r = resolve(c, d))
          if (seen.insert(*r).second) changed = true;
  }
  return Formula(std::vector<Clause>(seen.begin(), seen.end()));
}

bool superredundant(const Formula& f, const Clause& c) {
  return entails(closure(f).without(c), c);
}

std::size_t size_of(const Formula& f) {
  std::size_t n = 0;
  for (const Clause& c : f.clauses()) n += c.size();
  return n;
}

std::vector<Formula> minimal_equivalents(const Formula& f) {
  const Formula closed = closure(f);  // keep alive: clauses() returns a reference
  const std::vector<Clause>& cl = closed.clauses();
  const std::size_t k = cl.size();
  std::size_t best = SIZE_MAX;
  std::set<Formula> minima;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<Clause> subset;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) subset.push_back(cl[i]);
    const Formula candidate(subset);
    if (!equivalent(candidate, f)) continue;
    const std::size_t sz = size_of(candidate);
    if (sz < best) {
      best = sz;
      minima.clear();
    }
    if (sz == best) minima.insert(candidate);
  }
  return std::vector<Formula>(minima.begin(), minima.end());
}

std::set<Assignment> projected_models(const Formula& f,
                                      const std::vector<Variable>& keep) {
  const std::vector<Variable> fv = variables_of(f);
  std::set<Variable> vars(fv.begin(), fv.end());
  vars.insert(keep.begin(), keep.end());
  std::set<Assignment> out;
  for (const Assignment& a :
       assignments_over(std::vector<Variable>(vars.begin(), vars.end()))) {
    if (!formula_holds(f, a)) continue;
    Assignment proj;
    for (const Variable& v : keep) proj[v] = a.at(v);
    out.insert(proj);
  }
  return out;
}

}  // namespace oracle
