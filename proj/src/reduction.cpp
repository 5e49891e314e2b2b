#include "superclause/reduction.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superclause/redundancy.hpp"

namespace superclause {

namespace {

Variable numbered(const char* stem, std::size_t i) {
  return stem + std::to_string(i);
}

std::string render_assignment(const Assignment& a) {
  std::string s;
  for (const auto& [v, val] : a) {
    if (!s.empty()) s += " ";
    s += v + "=" + (val ? "1" : "0");
  }
  return s;
}

bool has_resolving_pair(const Formula& f) {
  const auto& cs = f.clauses();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (resolve_pair(cs[i], cs[j])) return true;
  return false;
}

bool has_strict_subset(const Formula& f, const Clause& c) {
  for (const Clause& d : f.clauses())
    if (d.strict_subset_of(c)) return true;
  return false;
}

// Replays one substitution argument for one target clause.  Substituting a
// truth value for a variable outside the target preserves superirredundancy
// of the target in both directions, provided the formula does not contain the
// target extended with the literal the substitution falsifies (that clause
// would collapse onto the target).  Each step checks both conditions against
// the current formula.  At the end the target must still be present, the
// residual must admit no resolution step at all, and no strict subset of the
// target may remain: then the residual is its own resolution closure, the
// target is entailed by the rest only if a strict subset of it is present,
// and so the target is superirredundant in the residual and therefore in the
// starting formula.
bool chain_proves(const Formula& start, const Clause& target,
                  const std::vector<std::pair<Variable, bool>>& steps,
                  std::string* note) {
  Formula cur = start;
  if (!cur.contains(target)) {
    *note = "target clause not present in the instance";
    return false;
  }
  for (const auto& [var, value] : steps) {
    if (target.mentions(var)) {
      *note = "substitution touches target variable '" + var + "'";
      return false;
    }
    const Clause blocking = target.union_with(Clause{Literal(var, !value)});
    if (cur.contains(blocking)) {
      *note = "blocked: formula contains " + to_string(blocking);
      return false;
    }
    cur = substitute(cur, var, value);
    if (!cur.contains(target)) {
      *note = "target lost while substituting '" + var + "'";
      return false;
    }
  }
  if (has_resolving_pair(cur)) {
    *note = "residual formula still has a resolving pair";
    return false;
  }
  if (has_strict_subset(cur, target)) {
    *note = "residual formula contains a strict subset of the target";
    return false;
  }
  return true;
}

}  // namespace

Formula ReductionInstance::fixed() const {
  return a_t.union_with(a_c).union_with(a_b_prime);
}

Formula ReductionInstance::full() const { return a_f.union_with(fixed()); }

ReductionInstance build_reduction(const Formula& f) {
  if (f.empty())
    throw PreconditionError("reduction input must be a nonempty formula");
  if (f.contains_empty_clause())
    throw PreconditionError("reduction input must not contain the empty clause");

  // Rename the input variables to x1..xn in order of first occurrence while
  // walking the canonical clause list.  The renaming is injective, so the
  // clause count is preserved.
  std::unordered_map<Variable, Variable> rename;
  for (const Clause& c : f.clauses())
    for (const Literal& l : c.literals())
      if (!rename.count(l.var))
        rename.emplace(l.var, numbered("x", rename.size() + 1));

  std::vector<Clause> renamed;
  renamed.reserve(f.size());
  for (const Clause& c : f.clauses()) {
    std::vector<Literal> ls;
    ls.reserve(c.size());
    for (const Literal& l : c.literals())
      ls.emplace_back(rename.at(l.var), l.positive);
    renamed.emplace_back(std::move(ls));
  }

  ReductionInstance inst;
  inst.input_cnf = Formula(std::move(renamed));
  inst.n = rename.size();
  inst.m = inst.input_cnf.size();

  const Literal not_q = neg("q");

  // Selector units and truth markers, two per input variable.
  std::vector<Clause> af, at;
  for (std::size_t i = 1; i <= inst.n; ++i) {
    af.push_back(Clause{pos(numbered("x", i)), not_q});
    af.push_back(Clause{pos(numbered("e", i)), not_q});
    at.push_back(Clause{neg(numbered("x", i)), pos(numbered("t", i))});
    at.push_back(Clause{neg(numbered("e", i)), pos(numbered("t", i))});
  }

  // Clause markers: c_j is implied by any selector that satisfies the j-th
  // input clause -- x_i for a positive occurrence, e_i for a negative one.
  std::vector<Clause> ac;
  for (std::size_t j = 1; j <= inst.m; ++j) {
    const Clause& fj = inst.input_cnf.clauses()[j - 1];
    for (const Literal& l : fj.literals()) {
      const Variable sel =
          l.positive ? l.var : "e" + l.var.substr(1);  // x<i> -> e<i>
      ac.push_back(Clause{neg(sel), pos(numbered("c", j))});
    }
  }

  // The long clauses: "every variable marked and every clause marked forces
  // selector i", split through a bridge variable to keep each half
  // superirredundant.  One x-side and one e-side pair per variable.
  std::vector<Literal> markers;
  for (std::size_t i = 1; i <= inst.n; ++i)
    markers.push_back(neg(numbered("t", i)));
  for (std::size_t j = 1; j <= inst.m; ++j)
    markers.push_back(neg(numbered("c", j)));

  std::vector<Clause> ab;
  for (std::size_t i = 1; i <= inst.n; ++i) {
    std::vector<Literal> lx = markers;
    lx.push_back(pos(numbered("x", i)));
    lx.push_back(neg(numbered("r", i)));
    ab.emplace_back(std::move(lx));
    ab.push_back(Clause{pos(numbered("r", i)), not_q});
    std::vector<Literal> le = markers;
    le.push_back(pos(numbered("e", i)));
    le.push_back(neg(numbered("s", i)));
    ab.emplace_back(std::move(le));
    ab.push_back(Clause{pos(numbered("s", i)), not_q});
  }

  inst.a_f = Formula(std::move(af));
  inst.a_t = Formula(std::move(at));
  inst.a_c = Formula(std::move(ac));
  inst.a_b_prime = Formula(std::move(ab));
  inst.k = 2 * inst.n + formula_size(inst.a_t) + formula_size(inst.a_c) +
           formula_size(inst.a_b_prime);

  for (const char* stem : {"x", "e", "t"})
    for (std::size_t i = 1; i <= inst.n; ++i)
      inst.alphabet.push_back(numbered(stem, i));
  for (std::size_t j = 1; j <= inst.m; ++j)
    inst.alphabet.push_back(numbered("c", j));
  for (const char* stem : {"r", "s"})
    for (std::size_t i = 1; i <= inst.n; ++i)
      inst.alphabet.push_back(numbered(stem, i));
  inst.alphabet.push_back("q");

  if (!is_horn(inst.full()))
    throw Error("internal error: reduction instance is not Horn");
  return inst;
}

FixedVerification verify_fixed_superirredundant(const ReductionInstance& inst,
                                                int cap, int budget) {
  FixedVerification out;
  out.ok = true;
  const Formula full = inst.full();
  const std::size_t n = inst.n, m = inst.m;

  const auto check = [&](const Clause& target,
                         const std::vector<std::pair<Variable, bool>>& steps,
                         const char* family) {
    FixedClauseCheck chk;
    chk.target = target;
    chk.proved = chain_proves(full, target, steps, &chk.note);
    if (chk.proved) chk.note = family;
    out.ok = out.ok && chk.proved;
    out.checks.push_back(std::move(chk));
  };

  // Setting every selector and every marker variable to true melts the
  // instance down to the bridge units alone.
  std::vector<std::pair<Variable, bool>> all_markers_true;
  for (const char* stem : {"x", "e", "t"})
    for (std::size_t i = 1; i <= n; ++i)
      all_markers_true.emplace_back(numbered(stem, i), true);
  for (std::size_t j = 1; j <= m; ++j)
    all_markers_true.emplace_back(numbered("c", j), true);
  for (std::size_t i = 1; i <= n; ++i)
    for (const char* stem : {"r", "s"})
      check(Clause{pos(numbered(stem, i)), neg("q")}, all_markers_true,
            "bridge unit family");

  // Clearing the guard and every bridge variable melts the instance down to
  // the marker implications alone.
  std::vector<std::pair<Variable, bool>> guard_and_bridges_false;
  guard_and_bridges_false.emplace_back("q", false);
  for (const char* stem : {"r", "s"})
    for (std::size_t i = 1; i <= n; ++i)
      guard_and_bridges_false.emplace_back(numbered(stem, i), false);
  for (const Clause& target : inst.a_t.clauses())
    check(target, guard_and_bridges_false, "truth marker family");
  for (const Clause& target : inst.a_c.clauses())
    check(target, guard_and_bridges_false, "clause marker family");

  // For the long clause of index h, clear everything except the markers, the
  // surviving selector x_h (resp. e_h), and its own bridge r_h (resp. s_h).
  // The residual keeps only that long clause and the markers it clashes with
  // twice, so nothing resolves.
  std::vector<Literal> markers;
  for (std::size_t i = 1; i <= n; ++i) markers.push_back(neg(numbered("t", i)));
  for (std::size_t j = 1; j <= m; ++j) markers.push_back(neg(numbered("c", j)));
  const auto long_clause = [&](const char* sel, const char* bridge,
                               std::size_t h) {
    std::vector<Literal> ls = markers;
    ls.push_back(pos(numbered(sel, h)));
    ls.push_back(neg(numbered(bridge, h)));
    return Clause(std::move(ls));
  };
  const auto keep_one_selector = [&](const char* keep_sel,
                                     const char* keep_bridge, std::size_t h) {
    const char* drop_sel = keep_sel[0] == 'x' ? "e" : "x";
    const char* drop_bridge = keep_bridge[0] == 'r' ? "s" : "r";
    std::vector<std::pair<Variable, bool>> steps;
    steps.emplace_back("q", false);
    for (std::size_t i = 1; i <= n; ++i)
      steps.emplace_back(numbered(drop_sel, i), false);
    for (std::size_t i = 1; i <= n; ++i)
      steps.emplace_back(numbered(drop_bridge, i), false);
    for (std::size_t i = 1; i <= n; ++i)
      if (i != h) steps.emplace_back(numbered(keep_sel, i), false);
    for (std::size_t i = 1; i <= n; ++i)
      if (i != h) steps.emplace_back(numbered(keep_bridge, i), false);
    return steps;
  };
  for (std::size_t h = 1; h <= n; ++h) {
    check(long_clause("x", "r", h), keep_one_selector("x", "r", h),
          "long clause family (x side)");
    check(long_clause("e", "s", h), keep_one_selector("e", "s", h),
          "long clause family (e side)");
  }

  if (out.checks.size() != inst.fixed().size()) {
    out.ok = false;
    out.notes.push_back("coverage: " + std::to_string(out.checks.size()) +
                        " substitution checks for " +
                        std::to_string(inst.fixed().size()) +
                        " fixed clauses");
  }

  // On small alphabets, cross-check a sample of the verdicts against the
  // closure-based check, which knows nothing about substitutions.
  if (inst.alphabet.size() <= 13) {
    std::vector<Clause> samples;
    samples.push_back(inst.a_t.clauses().front());
    samples.push_back(inst.a_c.clauses().front());
    samples.push_back(Clause{pos(numbered("r", 1)), neg("q")});
    samples.push_back(long_clause("x", "r", 1));
    std::size_t agreed = 0;
    bool skipped = false;
    // The closure-based check asks whether the closure minus the sampled
    // clause entails it.  The closure is the same for every sample, so it is
    // computed once; the per-sample verdicts are unchanged.
    try {
      const ClosureResult closure = resolution_closure(full, budget);
      if (closure.truncated) {
        skipped = true;
      } else {
        for (const Clause& c : samples) {
          if (!full.contains(c)) continue;
          if (entails(closure.clauses.without(c), c, cap)) {
            out.ok = false;
            out.notes.push_back("cross-check: closure-based check finds " +
                                to_string(c) + " superredundant");
          } else {
            ++agreed;
          }
        }
      }
    } catch (const CapacityError&) {
      skipped = true;
    }
    if (skipped)
      out.notes.push_back("cross-check: skipped (closure budget exceeded)");
    else
      out.notes.push_back("cross-check: closure-based check agrees on " +
                          std::to_string(agreed) + " sampled clauses");
  } else {
    out.notes.push_back("cross-check: skipped (alphabet too large)");
  }
  return out;
}

std::optional<Formula> witness_formula(const ReductionInstance& inst,
                                       const Assignment& m) {
  for (std::size_t i = 1; i <= inst.n; ++i)
    if (!m.count(numbered("x", i)))
      throw PreconditionError("witness assignment does not cover variable '" +
                              numbered("x", i) + "'");
  if (!satisfies(m, inst.input_cnf)) return std::nullopt;

  std::vector<Clause> sel;
  for (std::size_t i = 1; i <= inst.n; ++i) {
    const bool value = m.at(numbered("x", i));
    sel.push_back(Clause{pos(numbered(value ? "x" : "e", i)), neg("q")});
  }
  return inst.fixed().union_with(Formula(std::move(sel)));
}

namespace {

// Exhaustive validation of the branch verdict on tiny instances.  Every
// minimum-size formula equivalent to the instance draws its clauses from the
// resolution closure and contains every superirredundant clause; with the
// fixed part certified (k minus 2n literals), an equivalent formula of size
// at most k exists exactly when some set of closure clauses totalling at most
// 2n literals completes the fixed part to an equivalent formula.  That must
// agree with the satisfiability verdict on the input.
void spot_check(const ReductionInstance& inst, const Formula& full,
                const Formula& fixed, bool fixed_certified,
                ReductionVerification& out, int cap, int budget,
                const CancelToken* cancel) {
  if (!fixed_certified) {
    out.checks.push_back(
        "spot check: skipped (fixed part not certified, so the completion "
        "argument does not apply)");
    return;
  }
  const ClosureResult cr = resolution_closure(full, budget);
  if (cr.truncated) {
    out.checks.push_back("spot check: skipped (closure budget exceeded)");
    return;
  }
  const std::size_t limit = 2 * inst.n;
  std::vector<Clause> small;
  for (const Clause& c : cr.clauses.clauses())
    if (!c.empty() && c.size() <= limit) small.push_back(c);
  if (small.size() > 48) {
    out.checks.push_back("spot check: skipped (" +
                         std::to_string(small.size()) +
                         " candidate closure clauses exceed the guard)");
    return;
  }

  std::vector<Clause> chosen;
  Formula completion;
  const std::function<bool(std::size_t, std::size_t)> search =
      [&](std::size_t idx, std::size_t used) -> bool {
    if (cancel && cancel->cancelled()) throw CapacityError("cancelled");
    Formula cand = fixed;
    for (const Clause& c : chosen) cand = cand.with(c);
    if (equivalent(cand, full, cap)) {
      completion = Formula(chosen);
      return true;
    }
    for (std::size_t i = idx; i < small.size(); ++i) {
      if (used + small[i].size() > limit) continue;
      chosen.push_back(small[i]);
      if (search(i + 1, used + small[i].size())) return true;
      chosen.pop_back();
    }
    return false;
  };
  const bool found = search(0, 0);

  if (found == out.input_satisfiable) {
    out.checks.push_back(
        found ? "spot check: completion search found a size-k equivalent "
                "(consistent with a satisfiable input)"
              : "spot check: no closure completion within " +
                    std::to_string(limit) +
                    " literals is equivalent (consistent with an "
                    "unsatisfiable input)");
  } else {
    out.consistent = false;
    out.checks.push_back(
        found ? "spot check: input unsatisfiable but the completion {" +
                    to_string(completion) + "} is equivalent"
              : "spot check: input satisfiable but no closure completion "
                "within " +
                    std::to_string(limit) + " literals is equivalent");
  }
}

}  // namespace

ReductionVerification verify_reduction(const ReductionInstance& inst, int cap,
                                       int budget, const CancelToken* cancel) {
  if (inst.n > 3 || inst.m > 3)
    throw PreconditionError(
        "verify_reduction handles at most 3 variables and 3 clauses; got " +
        std::to_string(inst.n) + " variables, " + std::to_string(inst.m) +
        " clauses");

  ReductionVerification out;
  out.consistent = true;
  const Formula full = inst.full();
  const Formula fixed = inst.fixed();

  const FixedVerification fv = verify_fixed_superirredundant(inst, cap, budget);
  if (fv.ok) {
    out.checks.push_back("fixed part: all " +
                         std::to_string(fv.checks.size()) +
                         " clauses certified superirredundant");
  } else {
    out.consistent = false;
    for (const FixedClauseCheck& chk : fv.checks)
      if (!chk.proved)
        out.checks.push_back("fixed part: " + to_string(chk.target) +
                             " not certified: " + chk.note);
    for (const std::string& note : fv.notes)
      out.checks.push_back("fixed part: " + note);
  }

  if (formula_size(fixed) + 2 * inst.n != inst.k) {
    out.consistent = false;
    out.checks.push_back(
        "size bookkeeping: fixed part has " +
        std::to_string(formula_size(fixed)) + " literals, expected " +
        std::to_string(inst.k) + " minus " + std::to_string(2 * inst.n));
  }
  if (!is_horn(full)) {
    out.consistent = false;
    out.checks.push_back("shape: instance is not Horn");
  }

  out.input_satisfiable = satisfiable(inst.input_cnf, cap);
  if (out.input_satisfiable) {
    std::vector<Variable> xs;
    for (std::size_t i = 1; i <= inst.n; ++i) xs.push_back(numbered("x", i));
    for (const Assignment& model : all_models(inst.input_cnf, xs, cap)) {
      if (cancel && cancel->cancelled()) throw CapacityError("cancelled");
      const auto w = witness_formula(inst, model);
      if (!w) {
        out.consistent = false;
        out.checks.push_back("witness: model " + render_assignment(model) +
                             " unexpectedly rejected");
        continue;
      }
      if (formula_size(*w) != inst.k) {
        out.consistent = false;
        out.checks.push_back("witness for " + render_assignment(model) +
                             " has size " +
                             std::to_string(formula_size(*w)) +
                             ", expected " + std::to_string(inst.k));
      } else if (!equivalent(*w, full, cap)) {
        out.consistent = false;
        out.checks.push_back("witness for " + render_assignment(model) +
                             " is not equivalent to the instance");
      }
      ++out.witnesses_checked;
    }
    out.checks.push_back("satisfiable branch: " +
                         std::to_string(out.witnesses_checked) +
                         " model witnesses checked");
  } else {
    // No size-k equivalent may exist.  Beyond the fixed part, a size-k
    // equivalent has 2n literals left, and the only completions that can
    // close the gap pair each index with one clause of the selector or
    // truth-marker shape; refute them all.
    std::size_t total = 1;
    for (std::size_t i = 0; i < inst.n; ++i) total *= 3;
    for (std::size_t pick = 0; pick < total; ++pick) {
      if (cancel && cancel->cancelled()) throw CapacityError("cancelled");
      std::vector<Clause> sel;
      std::size_t rest = pick;
      for (std::size_t i = 1; i <= inst.n; ++i) {
        const std::size_t choice = rest % 3;
        rest /= 3;
        const char* stem = choice == 0 ? "x" : choice == 1 ? "e" : "t";
        sel.push_back(Clause{pos(numbered(stem, i)), neg("q")});
      }
      const Formula candidate = fixed.union_with(Formula(sel));
      if (equivalent(candidate, full, cap)) {
        out.consistent = false;
        out.checks.push_back("unsatisfiable branch: candidate completion {" +
                             to_string(Formula(sel)) + "} is equivalent");
      } else {
        ++out.candidates_refuted;
      }
    }
    out.checks.push_back("unsatisfiable branch: " +
                         std::to_string(out.candidates_refuted) +
                         " candidate completions refuted");
  }

  if (inst.n == 1)
    spot_check(inst, full, fixed, fv.ok, out, cap, budget, cancel);
  return out;
}

}  // namespace superclause
