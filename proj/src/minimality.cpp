#include "superclause/minimality.hpp"

#include <algorithm>
#include <bit>

#include "superclause/redundancy.hpp"

namespace superclause {

MinimizationResult minimal_equivalent_formulas(const Formula& f, int cap,
                                               int clause_cap, int budget,
                                               const CancelToken* cancel) {
  const ClosureResult closure = resolution_closure(f, budget);
  if (closure.truncated)
    throw CapacityError("resolution closure exceeded the budget of " +
                        std::to_string(budget) +
                        " clauses; minimization needs the full closure");
  const auto& pool = closure.clauses.clauses();
  const std::size_t k = pool.size();
  if (static_cast<int>(k) > clause_cap)
    throw CapacityError("closure has " + std::to_string(k) +
                        " clauses, subset enumeration is capped at " +
                        std::to_string(clause_cap));
  const std::vector<Variable> vars = closure.clauses.variables();
  const std::size_t n = vars.size();
  if (static_cast<int>(n) > cap)
    throw CapacityError("model enumeration over " + std::to_string(n) +
                        " variables exceeds the cap of " + std::to_string(cap) +
                        " variables");

  MinimizationResult result;
  result.search_space = std::uint64_t(1) << k;
  result.degenerate = !satisfiable(f, cap);

  // One bitset of satisfying assignments per closure clause; bit a of the
  // bitset is assignment a, where bit j of a is the value of vars[j].  A
  // subset of the closure is equivalent to f exactly when the AND of its
  // bitsets equals the AND over f itself.
  const std::uint64_t assignments = std::uint64_t(1) << n;
  const std::size_t words = static_cast<std::size_t>((assignments + 63) / 64);
  auto model_bits = [&](const Clause& c) {
    std::uint32_t posm = 0, negm = 0;
    for (const Literal& l : c.literals()) {
      const std::size_t j = static_cast<std::size_t>(
          std::lower_bound(vars.begin(), vars.end(), l.var) - vars.begin());
      if (l.positive)
        posm |= std::uint32_t(1) << j;
      else
        negm |= std::uint32_t(1) << j;
    }
    std::vector<std::uint64_t> bits(words, 0);
    for (std::uint64_t a = 0; a < assignments; ++a)
      if ((a & posm) != 0 || (~a & negm) != 0)
        bits[a >> 6] |= std::uint64_t(1) << (a & 63);
    return bits;
  };
  std::vector<std::vector<std::uint64_t>> clause_bits;
  clause_bits.reserve(k);
  std::vector<std::size_t> clause_size;
  clause_size.reserve(k);
  for (const Clause& c : pool) {
    clause_bits.push_back(model_bits(c));
    clause_size.push_back(c.size());
  }
  std::vector<std::uint64_t> all_true(words, ~std::uint64_t(0));
  if (assignments & 63)
    all_true[words - 1] = (std::uint64_t(1) << (assignments & 63)) - 1;
  std::vector<std::uint64_t> f_models = all_true;
  for (const Clause& c : f.clauses()) {
    const std::vector<std::uint64_t> bits = model_bits(c);
    for (std::size_t w = 0; w < words; ++w) f_models[w] &= bits[w];
  }

  std::size_t best = formula_size(f);  // f itself is an equivalent subset
  std::vector<std::uint64_t> found;    // masks of current best subsets
  std::vector<std::uint64_t> scratch(words);
  const std::uint64_t subsets = result.search_space;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    if (cancel && (mask & 0xFFF) == 0 && cancel->cancelled())
      throw CapacityError("minimization cancelled");
    std::size_t size = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      size += clause_size[static_cast<std::size_t>(
          std::countr_zero(rest))];
      if (size > best) break;
    }
    if (size > best) continue;
    scratch = all_true;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      const auto& bits =
          clause_bits[static_cast<std::size_t>(std::countr_zero(rest))];
      for (std::size_t w = 0; w < words; ++w) scratch[w] &= bits[w];
    }
    if (scratch != f_models) continue;
    if (size < best) {
      best = size;
      found.clear();
    }
    found.push_back(mask);
  }
  result.min_size = best;
  for (std::uint64_t mask : found) {
    std::vector<Clause> subset;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1)
      subset.push_back(pool[static_cast<std::size_t>(std::countr_zero(rest))]);
    result.minimal_formulas.emplace_back(std::move(subset));
  }
  std::sort(result.minimal_formulas.begin(), result.minimal_formulas.end());
  return result;
}

bool in_all_minimal(const Formula& f, const Clause& c, int cap, int clause_cap,
                    int budget, const CancelToken* cancel) {
  const MinimizationResult result =
      minimal_equivalent_formulas(f, cap, clause_cap, budget, cancel);
  for (const Formula& m : result.minimal_formulas)
    if (!m.contains(c)) return false;
  return true;
}

MinimalityCertificate certify_minimal(const Formula& f, int cap) {
  for (const Clause& c : f.clauses())
    if (check_super_first_step(f, c, cap)) return MinimalityCertificate::unknown;
  return MinimalityCertificate::certified;
}

const char* certificate_name(MinimalityCertificate c) {
  return c == MinimalityCertificate::certified ? "certified" : "unknown";
}

}  // namespace superclause
