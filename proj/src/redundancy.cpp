#include "superclause/redundancy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace superclause {

namespace {

void require_member(const Formula& f, const Clause& c, const char* who) {
  if (!f.contains(c))
    throw PreconditionError(std::string(who) + ": clause '" + to_string(c) +
                            "' is not in the formula");
}

// The clause set whose entailment of c decides superredundancy in one step:
// the formula without c, plus every resolvent of c with the formula.
Formula first_step_set(const Formula& f, const Clause& c) {
  return f.without(c).union_with(resolve_clause_with(c, f));
}

}  // namespace

bool is_redundant(const Formula& f, const Clause& c, int cap) {
  require_member(f, c, "is_redundant");
  return entails(f.without(c), c, cap);
}

bool check_super_definition(const Formula& f, const Clause& c, int cap,
                            int budget, Certificate* certificate) {
  require_member(f, c, "check_super_definition");
  const ClosureResult closure = resolution_closure(f, budget);
  if (closure.truncated)
    throw CapacityError("resolution closure exceeded the budget of " +
                        std::to_string(budget) +
                        " clauses; the definition check needs the full closure");
  const Formula rest = closure.clauses.without(c);
  const bool result = entails(rest, c, cap);
  if (result && certificate) {
    certificate->kind = Certificate::Kind::entailing_set;
    certificate->entailing = rest;
  }
  return result;
}

bool check_super_first_step(const Formula& f, const Clause& c, int cap,
                            Certificate* certificate) {
  require_member(f, c, "check_super_first_step");
  const Formula set = first_step_set(f, c);
  const bool result = entails(set, c, cap);
  if (result && certificate) {
    certificate->kind = Certificate::Kind::entailing_set;
    certificate->entailing = set;
  }
  return result;
}

bool check_super_last_step(const Formula& f, const Clause& c, int budget,
                           Certificate* certificate) {
  require_member(f, c, "check_super_last_step");
  const ClosureResult closure = resolution_closure(f, budget);
  if (closure.truncated)
    throw CapacityError("resolution closure exceeded the budget of " +
                        std::to_string(budget) +
                        " clauses; the last-step check needs the full closure");
  // A strict subset of c anywhere in the closure settles the question.
  for (const Clause& d : closure.clauses.clauses()) {
    if (d.strict_subset_of(c)) {
      if (certificate) {
        certificate->kind = Certificate::Kind::subset_clause;
        certificate->subset = d;
      }
      return true;
    }
  }
  // Otherwise look for two closure clauses resolving to exactly c.  Each
  // parent must be (subset of c) + one extra literal over a variable not in
  // c, so bucket the candidates by that extra literal and pair up opposite
  // buckets.
  std::map<Literal, std::vector<Clause>> by_extra;
  for (const Clause& d : closure.clauses.clauses()) {
    Literal extra;
    std::size_t extras = 0;
    for (const Literal& l : d.literals()) {
      if (!c.contains(l)) {
        ++extras;
        if (extras > 1) break;
        extra = l;
      }
    }
    if (extras != 1 || c.mentions(extra.var)) continue;
    by_extra[extra].push_back(d);
  }
  for (const auto& [lit, candidates] : by_extra) {
    if (lit.positive) continue;  // handled from the negative side
    const auto partner = by_extra.find(lit.negated());
    if (partner == by_extra.end()) continue;
    for (const Clause& d1 : candidates) {
      for (const Clause& d2 : partner->second) {
        // Both remainders are subsets of c and the parents clash only on the
        // extra variable, so the resolvent is their union; it must cover c.
        if (d1.without(lit).union_with(d2.without(lit.negated())) == c) {
          if (certificate) {
            certificate->kind = Certificate::Kind::last_step_pair;
            certificate->pair_first = d1;
            certificate->pair_second = d2;
          }
          return true;
        }
      }
    }
  }
  return false;
}

bool check_super_unit(const Formula& f, const Literal& l, int cap) {
  const Clause unit{l};
  require_member(f, unit, "check_super_unit");
  const Literal opposite = l.negated();
  std::vector<Clause> reduced;
  for (const Clause& d : f.clauses()) {
    if (d == unit) continue;
    if (d.contains(opposite))
      reduced.push_back(d.without(opposite));
    else
      reduced.push_back(d);
  }
  return entails(Formula(std::move(reduced)), unit, cap);
}

bool check_super_pure_unit(const Formula& f, const Literal& l, int cap) {
  const Clause unit{l};
  require_member(f, unit, "check_super_pure_unit");
  const Literal opposite = l.negated();
  for (const Clause& d : f.clauses())
    if (d.contains(opposite))
      throw PreconditionError("check_super_pure_unit: literal '" +
                              to_string(opposite) + "' occurs in clause '" +
                              to_string(d) + "'");
  return entails(f.without(unit), unit, cap);
}

bool check_super_horn_krom(const Formula& f, const Clause& c) {
  require_member(f, c, "check_super_horn_krom");
  if (!is_horn(f) && !is_krom(f))
    throw PreconditionError(
        "check_super_horn_krom: formula is neither Horn nor Krom");
  // Resolvents preserve both shapes, so entailment below stays polynomial;
  // the zero cap turns any accidental enumeration into a loud error.
  return entails(first_step_set(f, c), c, /*cap=*/0);
}

bool check_super_monotone_superset(const Formula& f, const Clause& c,
                                   const Formula& extra, int cap) {
  require_member(f, c, "check_super_monotone_superset");
  if (extra.contains(c))
    throw PreconditionError(
        "check_super_monotone_superset: the added clauses contain '" +
        to_string(c) + "' itself");
  // Superredundant here implies superredundant in any extension: the closure
  // only grows and entailment is monotone.
  if (check_super_first_step(f, c, cap)) return true;
  return check_super_first_step(f.union_with(extra), c, cap);
}

std::optional<bool> check_unit_no_positive(const Formula& f, const Literal& l,
                                           int cap) {
  for (const Clause& d : f.clauses())
    if (d.contains(l))
      throw PreconditionError("check_unit_no_positive: literal '" +
                              to_string(l) + "' occurs in clause '" +
                              to_string(d) + "'");
  // With l absent from f, the closure of f + (l) contains l only as the unit
  // itself, so flipping l off any model of f + (l) still satisfies the rest
  // of the closure: the unit is superirredundant.  When f + (l) is
  // unsatisfiable this argument says nothing, which is reported as "no
  // verdict" rather than guessed.
  if (satisfiable(f.with(Clause{l}), cap)) return true;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Superirredundancy proof search.

namespace {

constexpr int kProverNodeBudget = 50000;

struct ProverState {
  Clause target;
  std::set<Variable> target_vars;
  int cap = kDefaultVariableCap;
  int nodes = 0;
  std::vector<SubstitutionStep> chain;
};

// Splits f into connected components by shared variables and removes every
// satisfiable component that does not contain the target clause.  Dropping
// such a block changes neither direction of the target's status.  Appends one
// step per dropped block, in canonical order.
Formula drop_disjoint_components(const Formula& f, ProverState& st) {
  const auto& clauses = f.clauses();
  const std::size_t n = clauses.size();
  // Union by shared variables.
  std::vector<int> group(n);
  for (std::size_t i = 0; i < n; ++i) group[i] = static_cast<int>(i);
  std::map<Variable, int> seen_var;
  std::function<int(int)> find = [&](int x) {
    while (group[x] != x) x = group[x] = group[group[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (const Variable& v : clauses[i].variables()) {
      auto [it, fresh] = seen_var.emplace(v, static_cast<int>(i));
      if (!fresh) group[find(static_cast<int>(i))] = find(it->second);
    }
  }
  const int target_group = find(static_cast<int>(f.index_of(st.target).value()));
  std::map<int, std::vector<Clause>> blocks;
  for (std::size_t i = 0; i < n; ++i)
    blocks[find(static_cast<int>(i))].push_back(clauses[i]);
  std::vector<Clause> kept = blocks[target_group];
  std::vector<Formula> dropped;
  for (auto& [id, block] : blocks) {
    if (id == target_group) continue;
    Formula candidate(block);
    bool droppable = false;
    try {
      droppable = satisfiable(candidate, st.cap);
    } catch (const CapacityError&) {
      droppable = false;  // too big to certify satisfiable; keep it
    }
    if (droppable) {
      dropped.push_back(std::move(candidate));
    } else {
      kept.insert(kept.end(), block.begin(), block.end());
    }
  }
  std::sort(dropped.begin(), dropped.end());
  for (Formula& block : dropped) {
    SubstitutionStep step;
    step.kind = SubstitutionStep::Kind::drop_component;
    step.dropped = std::move(block);
    st.chain.push_back(std::move(step));
  }
  return Formula(std::move(kept));
}

bool has_resolving_pair(const Formula& f) {
  const auto& clauses = f.clauses();
  for (std::size_t i = 0; i < clauses.size(); ++i)
    for (std::size_t j = i + 1; j < clauses.size(); ++j)
      if (resolve_pair(clauses[i], clauses[j])) return true;
  return false;
}

bool has_strict_subset_of(const Formula& f, const Clause& target) {
  for (const Clause& d : f.clauses())
    if (d.strict_subset_of(target)) return true;
  return false;
}

struct Move {
  Variable var;
  bool value = true;
  int score = 0;
};

// Candidate substitutions at this node: any variable of f outside the target,
// either value, provided f does not contain the target extended with the
// opposite literal (that clause would change the target's status under the
// substitution).  Higher score = more deleted clauses touching the target's
// variables, which is what shrinks the neighborhood fastest.
std::vector<Move> candidate_moves(const Formula& f, const ProverState& st) {
  std::vector<Move> moves;
  for (const Variable& v : f.variables()) {
    if (st.target_vars.count(v)) continue;
    for (bool value : {true, false}) {
      const Literal satisfied(v, value);
      const Clause blocking = st.target.union_with(Clause{satisfied.negated()});
      if (f.contains(blocking)) continue;
      Move m;
      m.var = v;
      m.value = value;
      for (const Clause& d : f.clauses()) {
        if (!d.contains(satisfied)) continue;
        for (const Variable& w : d.variables()) {
          if (st.target_vars.count(w)) {
            ++m.score;
            break;
          }
        }
      }
      moves.push_back(std::move(m));
    }
  }
  std::stable_sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.var != b.var) return a.var < b.var;
    return a.value && !b.value;  // true before false
  });
  return moves;
}

bool prove_node(const Formula& f, ProverState& st, int depth,
                Formula* residual) {
  if (++st.nodes > kProverNodeBudget) return false;
  const std::size_t chain_mark = st.chain.size();
  const Formula reduced = drop_disjoint_components(f, st);
  if (has_strict_subset_of(reduced, st.target)) {
    // A strict subset of the target has only target variables, which no later
    // step can touch, so this branch can never succeed.
    st.chain.resize(chain_mark);
    return false;
  }
  if (!has_resolving_pair(reduced)) {
    // Nothing resolves: the closure is the formula itself, and without a
    // strict subset of the target the rest cannot entail it.
    *residual = reduced;
    return true;
  }
  if (depth > 0) {
    for (const Move& m : candidate_moves(reduced, st)) {
      SubstitutionStep step;
      step.kind = SubstitutionStep::Kind::assign;
      step.var = m.var;
      step.value = m.value;
      st.chain.push_back(std::move(step));
      if (prove_node(substitute(reduced, m.var, m.value), st, depth - 1,
                     residual))
        return true;
      st.chain.pop_back();
    }
  }
  // Substitutions alone failed; try deleting a clause that carries a literal
  // whose negation occurs nowhere (and which the target does not contain).
  // Such a clause never feeds a resolution towards the target.
  for (const Clause& d : reduced.clauses()) {
    for (const Literal& l : d.literals()) {
      if (st.target.contains(l)) continue;
      bool opposed = false;
      for (const Clause& e : reduced.clauses()) {
        if (e.contains(l.negated())) {
          opposed = true;
          break;
        }
      }
      if (opposed) continue;
      SubstitutionStep step;
      step.kind = SubstitutionStep::Kind::delete_pure;
      step.pure = l;
      step.deleted = d;
      st.chain.push_back(std::move(step));
      if (prove_node(reduced.without(d), st, depth, residual)) return true;
      st.chain.pop_back();
      break;  // deleting d again via another pure literal changes nothing
    }
  }
  st.chain.resize(chain_mark);
  return false;
}

}  // namespace

std::optional<Certificate> prove_superirredundant_by_substitution(
    const Formula& f, const Clause& c, int max_depth, int cap) {
  require_member(f, c, "prove_superirredundant_by_substitution");
  ProverState st;
  st.target = c;
  for (const Variable& v : c.variables()) st.target_vars.insert(v);
  st.cap = cap;
  if (max_depth < 0) {
    max_depth = 0;
    for (const Variable& v : f.variables())
      if (!st.target_vars.count(v)) ++max_depth;
  }
  Formula residual;
  if (!prove_node(f, st, max_depth, &residual)) return std::nullopt;
  Certificate cert;
  cert.kind = Certificate::Kind::substitution_chain;
  cert.steps = std::move(st.chain);
  cert.residual = std::move(residual);
  return cert;
}

SuperredundancyVerdict check_superredundant(const Formula& f, const Clause& c,
                                            CheckMethod method, int cap,
                                            int budget) {
  require_member(f, c, "check_superredundant");
  SuperredundancyVerdict verdict;
  verdict.clause = c;
  verdict.degenerate = f.contains_empty_clause();
  verdict.methods_used.push_back(method_name(method));
  Certificate cert;
  bool result = false;
  switch (method) {
    case CheckMethod::definition:
      result = check_super_definition(f, c, cap, budget, &cert);
      break;
    case CheckMethod::first_step:
      result = check_super_first_step(f, c, cap, &cert);
      break;
    case CheckMethod::last_step:
      result = check_super_last_step(f, c, budget, &cert);
      break;
    case CheckMethod::unit: {
      if (c.size() != 1)
        throw PreconditionError("the unit method needs a unit clause, got '" +
                                to_string(c) + "'");
      result = check_super_unit(f, c.literals()[0], cap);
      if (result) {
        cert.kind = Certificate::Kind::entailing_set;
        cert.entailing = first_step_set(f, c);
      }
      break;
    }
    case CheckMethod::horn_krom:
      result = check_super_horn_krom(f, c);
      if (result) {
        cert.kind = Certificate::Kind::entailing_set;
        cert.entailing = first_step_set(f, c);
      }
      break;
  }
  verdict.superredundant = result;
  if (result) verdict.certificate = std::move(cert);
  return verdict;
}

const char* method_name(CheckMethod m) {
  switch (m) {
    case CheckMethod::definition: return "definition";
    case CheckMethod::first_step: return "first-step";
    case CheckMethod::last_step: return "last-step";
    case CheckMethod::unit: return "unit";
    case CheckMethod::horn_krom: return "horn-krom";
  }
  return "?";
}

}  // namespace superclause
