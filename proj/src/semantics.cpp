#include "superclause/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

namespace superclause {

namespace {

// Literal encoding for the solvers below: variable index v becomes 2v for the
// negative literal and 2v+1 for the positive one, so negation is XOR 1.

struct Encoded {
  std::vector<Variable> vars;                // index -> name, sorted
  std::map<Variable, int> index;             // name -> index
  std::vector<std::vector<int>> clauses;     // encoded literals
  bool has_empty_clause = false;

  void add_vars(const Formula& f) {
    for (const Variable& v : f.variables())
      if (index.emplace(v, 0).second) vars.push_back(v);
  }
  void finish_vars() {
    std::sort(vars.begin(), vars.end());
    for (std::size_t i = 0; i < vars.size(); ++i)
      index[vars[i]] = static_cast<int>(i);
  }
  void add_clauses(const Formula& f) {
    for (const Clause& c : f.clauses()) {
      if (c.empty()) has_empty_clause = true;
      std::vector<int> encoded;
      encoded.reserve(c.size());
      for (const Literal& l : c.literals())
        encoded.push_back(2 * index.at(l.var) + (l.positive ? 1 : 0));
      clauses.push_back(std::move(encoded));
    }
  }
  void add_unit(const Literal& l) {
    clauses.push_back({2 * index.at(l.var) + (l.positive ? 1 : 0)});
  }
};

void check_cap(std::size_t nvars, int cap) {
  if (static_cast<long>(nvars) > static_cast<long>(cap))
    throw CapacityError("model enumeration over " + std::to_string(nvars) +
                        " variables exceeds the cap of " + std::to_string(cap) +
                        " variables");
}

// Unit propagation to fixpoint.  For Horn clause sets (any number of unit
// clauses of either sign added on top) the absence of a conflict at fixpoint
// decides satisfiability: unforced variables can all be set to false because
// an unsatisfied non-unit Horn clause always retains an unassigned negative
// literal.  Returns false on conflict; fills `model` (unforced = false) when
// requested and consistent.
bool propagate_consistent(const std::vector<std::vector<int>>& clauses,
                          std::size_t nvars, std::vector<bool>* model) {
  std::vector<int> value(nvars, -1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const std::vector<int>& clause : clauses) {
      bool satisfied = false;
      int unassigned_count = 0;
      int unassigned_lit = -1;
      for (int lit : clause) {
        const int var = lit >> 1;
        const int wanted = lit & 1;
        if (value[var] < 0) {
          ++unassigned_count;
          unassigned_lit = lit;
        } else if (value[var] == wanted) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (unassigned_count == 0) return false;
      if (unassigned_count == 1) {
        value[unassigned_lit >> 1] = unassigned_lit & 1;
        changed = true;
      }
    }
  }
  if (model) {
    model->assign(nvars, false);
    for (std::size_t v = 0; v < nvars; ++v) (*model)[v] = value[v] == 1;
  }
  return true;
}

// Satisfiability of a clause set with at most two literals per clause, via
// strongly connected components of the implication graph.  A clause (a or b)
// contributes the implications -a -> b and -b -> a; a unit clause (a)
// contributes -a -> a.  The formula is unsatisfiable exactly when some
// variable shares a component with its negation.  Components are numbered as
// they complete, so sinks of the condensation get the smallest ids and the
// standard assignment rule is: positive literal true iff its component id is
// smaller than the negation's.
class ImplicationGraph {
public:
  explicit ImplicationGraph(std::size_t nvars)
      : nodes_(2 * nvars), adj_(2 * nvars) {}

  void add_clause(const std::vector<int>& clause) {
    if (clause.size() == 1) {
      adj_[clause[0] ^ 1].push_back(clause[0]);
    } else {
      adj_[clause[0] ^ 1].push_back(clause[1]);
      adj_[clause[1] ^ 1].push_back(clause[0]);
    }
  }

  // Iterative Tarjan; recursion depth over user input is not acceptable.
  bool consistent(std::vector<bool>* model) {
    comp_.assign(nodes_, -1);
    low_.assign(nodes_, 0);
    num_.assign(nodes_, -1);
    int next_num = 0;
    int next_comp = 0;
    std::vector<int> stack;
    struct Frame {
      int node;
      std::size_t edge;
    };
    std::vector<Frame> frames;
    std::vector<bool> on_stack(nodes_, false);
    for (std::size_t root = 0; root < nodes_; ++root) {
      if (num_[root] >= 0) continue;
      frames.push_back({static_cast<int>(root), 0});
      num_[root] = low_[root] = next_num++;
      stack.push_back(static_cast<int>(root));
      on_stack[root] = true;
      while (!frames.empty()) {
        Frame& top = frames.back();
        if (top.edge < adj_[top.node].size()) {
          const int next = adj_[top.node][top.edge++];
          if (num_[next] < 0) {
            num_[next] = low_[next] = next_num++;
            stack.push_back(next);
            on_stack[next] = true;
            frames.push_back({next, 0});
          } else if (on_stack[next]) {
            low_[top.node] = std::min(low_[top.node], num_[next]);
          }
        } else {
          const int node = top.node;
          frames.pop_back();
          if (!frames.empty())
            low_[frames.back().node] =
                std::min(low_[frames.back().node], low_[node]);
          if (low_[node] == num_[node]) {
            while (true) {
              const int member = stack.back();
              stack.pop_back();
              on_stack[member] = false;
              comp_[member] = next_comp;
              if (member == node) break;
            }
            ++next_comp;
          }
        }
      }
    }
    const std::size_t nvars = nodes_ / 2;
    for (std::size_t v = 0; v < nvars; ++v)
      if (comp_[2 * v] == comp_[2 * v + 1]) return false;
    if (model) {
      model->assign(nvars, false);
      for (std::size_t v = 0; v < nvars; ++v)
        (*model)[v] = comp_[2 * v + 1] < comp_[2 * v];
    }
    return true;
  }

private:
  std::size_t nodes_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> comp_, low_, num_;
};

bool krom_shaped(const std::vector<std::vector<int>>& clauses) {
  for (const std::vector<int>& c : clauses)
    if (c.size() > 2) return false;
  return true;
}

bool horn_shaped(const std::vector<std::vector<int>>& clauses) {
  for (const std::vector<int>& c : clauses) {
    int positives = 0;
    for (int lit : c) positives += lit & 1;
    if (positives > 1) return false;
  }
  return true;
}

// Decides satisfiability of an encoded clause set, choosing unit propagation,
// implication graph, or cap-guarded enumeration.  `model` may be null.
bool encoded_satisfiable(const Encoded& enc, int cap,
                         std::vector<bool>* model) {
  if (enc.has_empty_clause) return false;
  if (enc.clauses.empty()) {
    if (model) model->assign(enc.vars.size(), false);
    return true;
  }
  if (horn_shaped(enc.clauses))
    return propagate_consistent(enc.clauses, enc.vars.size(), model);
  if (krom_shaped(enc.clauses)) {
    ImplicationGraph graph(enc.vars.size());
    for (const std::vector<int>& c : enc.clauses) graph.add_clause(c);
    return graph.consistent(model);
  }
  const std::size_t n = enc.vars.size();
  check_cap(n, cap);
  if (n > 31)
    throw CapacityError("assignment enumeration is limited to 31 variables, "
                        "query has " +
                        std::to_string(n));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;  // pos, neg
  masks.reserve(enc.clauses.size());
  for (const std::vector<int>& c : enc.clauses) {
    std::uint32_t posm = 0, negm = 0;
    for (int lit : c) {
      if (lit & 1)
        posm |= std::uint32_t(1) << (lit >> 1);
      else
        negm |= std::uint32_t(1) << (lit >> 1);
    }
    masks.emplace_back(posm, negm);
  }
  const std::uint64_t limit = std::uint64_t(1) << n;
  for (std::uint64_t a = 0; a < limit; ++a) {
    bool ok = true;
    for (const auto& [posm, negm] : masks) {
      if ((a & posm) == 0 && (~a & negm) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (model) {
        model->assign(n, false);
        for (std::size_t v = 0; v < n; ++v) (*model)[v] = (a >> v) & 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_horn(const Formula& f) {
  for (const Clause& c : f.clauses()) {
    int positives = 0;
    for (const Literal& l : c.literals()) positives += l.positive ? 1 : 0;
    if (positives > 1) return false;
  }
  return true;
}

bool is_krom(const Formula& f) {
  for (const Clause& c : f.clauses())
    if (c.size() > 2) return false;
  return true;
}

bool satisfiable(const Formula& f, int cap) {
  Encoded enc;
  enc.add_vars(f);
  enc.finish_vars();
  enc.add_clauses(f);
  return encoded_satisfiable(enc, cap, nullptr);
}

bool entails(const Formula& f, const Clause& c, int cap) {
  // f |= c  iff  f with every literal of c negated is unsatisfiable.  The
  // added clauses are units, so they never break the Horn or Krom shape of f.
  Encoded enc;
  enc.add_vars(f);
  for (const Literal& l : c.literals())
    if (enc.index.emplace(l.var, 0).second) enc.vars.push_back(l.var);
  enc.finish_vars();
  enc.add_clauses(f);
  for (const Literal& l : c.literals()) enc.add_unit(l.negated());
  return !encoded_satisfiable(enc, cap, nullptr);
}

bool entails(const Formula& f, const Formula& g, int cap) {
  for (const Clause& c : g.clauses())
    if (!entails(f, c, cap)) return false;
  return true;
}

bool equivalent(const Formula& f, const Formula& g, int cap) {
  return entails(f, g, cap) && entails(g, f, cap);
}

std::optional<Assignment> find_model(const Formula& f, int cap) {
  Encoded enc;
  enc.add_vars(f);
  enc.finish_vars();
  enc.add_clauses(f);
  std::vector<bool> values;
  if (!encoded_satisfiable(enc, cap, &values)) return std::nullopt;
  Assignment a;
  for (std::size_t i = 0; i < enc.vars.size(); ++i) a[enc.vars[i]] = values[i];
  return a;
}

std::vector<Assignment> all_models(const Formula& f,
                                   const std::vector<Variable>& universe,
                                   int cap) {
  for (const Variable& v : f.variables())
    if (std::find(universe.begin(), universe.end(), v) == universe.end())
      throw PreconditionError("model universe does not cover variable '" + v +
                              "'");
  const std::size_t n = universe.size();
  check_cap(n, cap);
  std::vector<Assignment> models;
  const std::uint64_t limit = std::uint64_t(1) << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Assignment a;
    for (std::size_t j = 0; j < n; ++j)
      a[universe[j]] = (mask >> (n - 1 - j)) & 1;  // universe[0] most significant
    if (f.empty() || satisfies(a, f)) models.push_back(std::move(a));
  }
  return models;
}

bool subsumes(const Clause& c, const Clause& d) { return c.subset_of(d); }

}  // namespace superclause
