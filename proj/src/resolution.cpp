#include "superclause/resolution.hpp"

#include <bit>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace superclause {

namespace {

// Bitmask clause representation used to saturate formulas with at most 64
// distinct variables: bit v of `pos` (`neg`) is the positive (negative)
// literal of the v-th variable.  A resolution step is then three bitwise
// operations and a popcount, instead of a walk over two sorted literal lists.
struct PackedClause {
  std::uint64_t pos = 0, neg = 0;
  friend bool operator==(const PackedClause&, const PackedClause&) = default;
};

struct PackedClauseHash {
  std::size_t operator()(const PackedClause& c) const {
    std::uint64_t h = c.pos * 0x9E3779B97F4A7C15ull;
    h ^= h >> 32;
    h += c.neg * 0xBF58476D1CE4E5B9ull;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

// Same pair order and budget handling as the generic loop below, so the two
// paths return identical results clause for clause, truncated or not.
ClosureResult packed_closure(const Formula& f, int budget,
                             const std::vector<Variable>& vars) {
  std::unordered_map<Variable, int> index;
  index.reserve(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v)
    index.emplace(vars[v], static_cast<int>(v));

  std::vector<PackedClause> work;
  work.reserve(f.size());
  for (const Clause& c : f.clauses()) {
    PackedClause pc;
    for (const Literal& l : c.literals()) {
      const std::uint64_t bit = std::uint64_t{1} << index.at(l.var);
      (l.positive ? pc.pos : pc.neg) |= bit;
    }
    work.push_back(pc);
  }
  std::unordered_set<PackedClause, PackedClauseHash> seen(work.begin(),
                                                          work.end());

  ClosureResult result;
  for (std::size_t j = 1; j < work.size() && !result.truncated; ++j) {
    const PackedClause b = work[j];  // copy: push_back below may reallocate
    for (std::size_t i = 0; i < j; ++i) {
      const PackedClause a = work[i];
      const std::uint64_t clash = (a.pos & b.neg) | (a.neg & b.pos);
      if (clash == 0 || (clash & (clash - 1)) != 0) continue;  // need one pivot
      // The union minus the pivot cannot be tautological: a second variable
      // with both signs between the parents would be a second clash bit.
      const PackedClause r{(a.pos | b.pos) & ~clash, (a.neg | b.neg) & ~clash};
      if (!seen.insert(r).second) continue;
      if (static_cast<int>(work.size()) + 1 > budget) {
        result.truncated = true;
        break;
      }
      work.push_back(r);
      ++result.generation_count;
    }
  }

  std::vector<Clause> out;
  out.reserve(work.size());
  for (const PackedClause& pc : work) {
    std::vector<Literal> lits;
    lits.reserve(static_cast<std::size_t>(std::popcount(pc.pos)) +
                 static_cast<std::size_t>(std::popcount(pc.neg)));
    for (std::uint64_t rest = pc.pos; rest != 0; rest &= rest - 1)
      lits.emplace_back(vars[std::countr_zero(rest)], true);
    for (std::uint64_t rest = pc.neg; rest != 0; rest &= rest - 1)
      lits.emplace_back(vars[std::countr_zero(rest)], false);
    out.emplace_back(std::move(lits));
  }
  result.clauses = Formula(std::move(out));
  return result;
}

}  // namespace

std::optional<Clause> resolve_pair(const Clause& c, const Clause& d) {
  // Count variables clashing between the two sorted literal lists and note
  // the unique clashing literal if there is exactly one.
  int clashes = 0;
  Literal pivot;  // as it occurs in c
  const auto& a = c.literals();
  const auto& b = d.literals();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].var < b[j].var) {
      ++i;
    } else if (b[j].var < a[i].var) {
      ++j;
    } else {
      if (a[i].positive != b[j].positive) {
        if (++clashes > 1) return std::nullopt;
        pivot = a[i];
      }
      ++i;
      ++j;
    }
  }
  if (clashes != 1) return std::nullopt;
  std::vector<Literal> lits;
  lits.reserve(a.size() + b.size() - 2);
  for (const Literal& l : a)
    if (l != pivot) lits.push_back(l);
  const Literal opposite = pivot.negated();
  for (const Literal& l : b)
    if (l != opposite) lits.push_back(l);
  // A second clashing pair in the union would have been counted above, so
  // this constructor cannot throw.
  return Clause(std::move(lits));
}

Formula resolve_clause_with(const Clause& c, const Formula& f) {
  std::vector<Clause> out;
  for (const Clause& d : f.clauses())
    if (auto r = resolve_pair(c, d)) out.push_back(*r);
  return Formula(std::move(out));
}

Formula resolve_sets(const Formula& a, const Formula& b) {
  std::vector<Clause> out;
  for (const Clause& c : a.clauses())
    for (const Clause& d : b.clauses())
      if (auto r = resolve_pair(c, d)) out.push_back(*r);
  return Formula(std::move(out));
}

ClosureResult resolution_closure(const Formula& f, int budget) {
  // Worklist saturation: process every unordered pair once, appending new
  // resolvents to the end of the list so they get paired with everything in
  // turn.  The seed is never truncated; `truncated` means some derived clause
  // was refused because the total would exceed the budget.
  const std::vector<Variable> vars = f.variables();
  if (vars.size() <= 64) return packed_closure(f, budget, vars);

  std::vector<Clause> work(f.clauses().begin(), f.clauses().end());
  std::set<Clause> seen(work.begin(), work.end());
  ClosureResult result;
  for (std::size_t j = 1; j < work.size() && !result.truncated; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto r = resolve_pair(work[i], work[j]);
      if (!r || !seen.insert(*r).second) continue;
      if (static_cast<int>(work.size()) + 1 > budget) {
        result.truncated = true;
        break;
      }
      work.push_back(std::move(*r));
      ++result.generation_count;
    }
  }
  result.clauses = Formula(std::move(work));
  return result;
}

bool derives(const Formula& f, const Clause& c, int budget) {
  const ClosureResult closure = resolution_closure(f, budget);
  if (closure.truncated && !closure.clauses.contains(c))
    throw CapacityError(
        "resolution closure exceeded the budget of " + std::to_string(budget) +
        " clauses before membership of '" + to_string(c) + "' was settled");
  return closure.clauses.contains(c);
}

Formula prime_implicates(const Formula& f, int budget) {
  const ClosureResult closure = resolution_closure(f, budget);
  if (closure.truncated)
    throw CapacityError("resolution closure exceeded the budget of " +
                        std::to_string(budget) +
                        " clauses; prime implicates need the full closure");
  std::vector<Clause> minimal;
  for (const Clause& c : closure.clauses.clauses()) {
    bool has_subset = false;
    for (const Clause& d : closure.clauses.clauses()) {
      if (d.strict_subset_of(c)) {
        has_subset = true;
        break;
      }
    }
    if (!has_subset) minimal.push_back(c);
  }
  return Formula(std::move(minimal));
}

Formula forget_variable(const Formula& f, const Variable& x) {
  const Literal lit_pos(x, true);
  const Literal lit_neg(x, false);
  std::vector<Clause> kept;
  std::vector<Clause> with_pos, with_neg;
  for (const Clause& c : f.clauses()) {
    if (c.contains(lit_pos))
      with_pos.push_back(c);
    else if (c.contains(lit_neg))
      with_neg.push_back(c);
    else
      kept.push_back(c);
  }
  for (const Clause& cp : with_pos)
    for (const Clause& cn : with_neg)
      if (auto r = resolve_pair(cp, cn)) kept.push_back(*r);
  return Formula(std::move(kept));
}

}  // namespace superclause
