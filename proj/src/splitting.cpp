#include "superclause/splitting.hpp"

#include <algorithm>
#include <deque>

#include "superclause/redundancy.hpp"
#include "superclause/resolution.hpp"

namespace superclause {

namespace {

// First unused fresh name _s0, _s1, ...  Names already present (for example
// from an earlier split round-tripped through a file) are skipped.
Variable default_fresh_name(const Formula& f) {
  const std::vector<Variable> vars = f.variables();
  for (int k = 0;; ++k) {
    Variable name = "_s" + std::to_string(k);
    if (!std::binary_search(vars.begin(), vars.end(), name)) return name;
  }
}

// Validates that the two halves are nonempty, disjoint, and together form a
// clause of f; returns that clause.  Messages name the violated assumption.
Clause check_partition(const Formula& f,
                       const std::pair<Clause, Clause>& partition,
                       const char* who) {
  const Clause& c1 = partition.first;
  const Clause& c2 = partition.second;
  if (c1.empty() || c2.empty())
    throw PreconditionError(std::string(who) +
                            ": both halves of the partition must be nonempty");
  for (const Literal& l : c1.literals())
    if (c2.contains(l))
      throw PreconditionError(std::string(who) + ": halves overlap on literal '" +
                              to_string(l) + "'");
  Clause whole;
  try {
    whole = c1.union_with(c2);
  } catch (const TautologyError&) {
    throw PreconditionError(std::string(who) +
                            ": halves clash on a variable, their union is not "
                            "a clause");
  }
  if (!f.contains(whole))
    throw PreconditionError(std::string(who) + ": the union '" +
                            to_string(whole) +
                            "' of the halves is not a clause of the formula");
  return whole;
}

}  // namespace

std::pair<Formula, SplitPlan> split_clause(
    const Formula& f, const Clause& c,
    const std::pair<Clause, Clause>& partition, std::optional<Variable> fresh) {
  const Clause whole = check_partition(f, partition, "split_clause");
  if (whole != c)
    throw PreconditionError("split_clause: the partition covers '" +
                            to_string(whole) + "', not the requested clause '" +
                            to_string(c) + "'");
  Variable x;
  if (fresh) {
    validate_variable_name(*fresh);
    x = *fresh;
    const std::vector<Variable> vars = f.variables();
    if (std::binary_search(vars.begin(), vars.end(), x))
      throw PreconditionError("split_clause: fresh variable '" + x +
                              "' already occurs in the formula");
  } else {
    x = default_fresh_name(f);
  }
  SplitPlan plan;
  plan.original = c;
  plan.fresh = x;
  plan.half_a = partition.first.union_with(Clause{pos(x)});
  plan.half_b = partition.second.union_with(Clause{neg(x)});
  plan.collateral = collateral_risk(f, partition);
  Formula result = f.without(c).with(plan.half_a).with(plan.half_b);
  return {std::move(result), std::move(plan)};
}

std::pair<bool, bool> precheck_make_irredundant(
    const Formula& f, const std::pair<Clause, Clause>& partition, int cap) {
  check_partition(f, partition, "precheck_make_irredundant");
  const Clause& c1 = partition.first;
  const Clause& c2 = partition.second;
  if (f.contains(c1))
    throw PreconditionError("precheck_make_irredundant: half '" +
                            to_string(c1) +
                            "' is itself a clause of the formula");
  if (f.contains(c2))
    throw PreconditionError("precheck_make_irredundant: half '" +
                            to_string(c2) +
                            "' is itself a clause of the formula");
  const bool a = check_super_first_step(f.with(c1), c1, cap);
  const bool b = check_super_first_step(f.with(c2), c2, cap);
  return {a, b};
}

Formula collateral_risk(const Formula& f,
                        const std::pair<Clause, Clause>& partition) {
  const Clause whole = check_partition(f, partition, "collateral_risk");
  std::vector<Clause> risky;
  for (const Clause& d : f.clauses()) {
    if (d == whole) continue;
    if (resolve_pair(d, partition.first) && resolve_pair(d, partition.second))
      risky.push_back(d);
  }
  return Formula(std::move(risky));
}

FixResult make_superirredundant(
    const Formula& f, const std::vector<Clause>& targets, int cap,
    std::function<Variable(const Formula&)> fresh_namer) {
  for (const Clause& c : targets)
    if (!f.contains(c))
      throw PreconditionError("make_superirredundant: target clause '" +
                              to_string(c) + "' is not in the formula");
  if (!fresh_namer) fresh_namer = default_fresh_name;
  FixResult result;
  result.formula = f;
  const std::size_t max_splits = 4 * targets.size();
  std::deque<Clause> queue(targets.begin(), targets.end());
  while (!queue.empty()) {
    const Clause c = queue.front();
    queue.pop_front();
    // The clause may have been replaced by an earlier split of this run.
    if (!result.formula.contains(c)) continue;
    if (!check_super_first_step(result.formula, c, cap)) continue;
    if (result.plans.size() >= max_splits) {
      std::string pending = to_string(c);
      for (const Clause& d : queue) pending += "; " + to_string(d);
      throw FixError("split cap of " + std::to_string(max_splits) +
                     " reached with superredundant clauses remaining: " +
                     pending);
    }
    // Try partitions in a fixed order: the first canonical literal alone
    // versus the rest, then every other bipartition keeping that literal in
    // the first half.  Partitions whose half already occurs as a clause fall
    // outside the guarantee and are skipped.
    const auto& lits = c.literals();
    const std::size_t k = lits.size();
    bool split_done = false;
    if (k >= 2) {
      const std::uint32_t limit = (std::uint32_t(1) << (k - 1)) - 1;
      for (std::uint32_t mask = 0; mask < limit && !split_done; ++mask) {
        std::vector<Literal> first{lits[0]}, second;
        for (std::size_t i = 1; i < k; ++i) {
          if (mask & (std::uint32_t(1) << (i - 1)))
            first.push_back(lits[i]);
          else
            second.push_back(lits[i]);
        }
        const std::pair<Clause, Clause> partition(Clause(std::move(first)),
                                                  Clause(std::move(second)));
        if (result.formula.contains(partition.first) ||
            result.formula.contains(partition.second))
          continue;
        const auto [a, b] =
            precheck_make_irredundant(result.formula, partition, cap);
        if (a || b) continue;  // no guarantee for at least one half
        auto [next, plan] = split_clause(result.formula, c, partition,
                                         fresh_namer(result.formula));
        result.formula = std::move(next);
        // Only clauses resolving with both halves can have lost their
        // status; queue each of them once for re-examination.
        for (const Clause& d : plan.collateral.clauses())
          if (std::find(queue.begin(), queue.end(), d) == queue.end())
            queue.push_back(d);
        result.plans.push_back(std::move(plan));
        split_done = true;
      }
    }
    if (!split_done)
      throw FixError("no viable partition for clause '" + to_string(c) + "'");
  }
  return result;
}

}  // namespace superclause
