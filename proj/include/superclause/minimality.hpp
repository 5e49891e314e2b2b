#pragma once

// Exhaustive minimization over the resolution closure.
//
// Every formula equivalent to f whose clauses all lie in the resolution
// closure of f includes, in particular, every minimum-size equivalent of f:
// a minimum equivalent formula only contains clauses the closure derives.
// So enumerating the subsets of the closure and keeping the smallest
// equivalent ones (size = literal occurrences) finds all minimum equivalents.
// The enumeration is exponential in the closure size, hence the clause cap.
//
// Connection to the redundancy analyses: a superirredundant clause of f
// appears in every minimal formula equivalent to f, and a formula whose
// clauses are all superirredundant is minimal.  certify_minimal() exploits
// the second fact; it answers "certified" or "unknown", never "not minimal".

#include <atomic>
#include <cstdint>

#include "superclause/cnf.hpp"
#include "superclause/resolution.hpp"
#include "superclause/semantics.hpp"

namespace superclause {

inline constexpr int kDefaultMinimizeClauseCap = 18;

// Cooperative cancellation: long enumerations poll the token and abort with
// CapacityError("cancelled") when it is set.
class CancelToken {
public:
  void cancel() { flag_.store(true, std::memory_order_relaxed); }
  bool cancelled() const { return flag_.load(std::memory_order_relaxed); }

private:
  std::atomic<bool> flag_{false};
};

struct MinimizationResult {
  std::size_t min_size = 0;              // literal occurrences of a minimum
  std::vector<Formula> minimal_formulas; // every minimum, canonical order
  std::uint64_t search_space = 0;        // closure subsets enumerated
  bool degenerate = false;               // input was unsatisfiable
};

// Pre: the closure fits the budget (no truncation) and has at most
// `clause_cap` clauses; otherwise CapacityError.  An unsatisfiable input is
// handled literally: its unique minimum is the empty clause alone (size 0),
// and the degenerate flag is set.
MinimizationResult minimal_equivalent_formulas(
    const Formula& f, int cap = kDefaultVariableCap,
    int clause_cap = kDefaultMinimizeClauseCap,
    int budget = kDefaultClosureBudget, const CancelToken* cancel = nullptr);

// Whether clause c occurs in every minimum-size formula equivalent to f.
bool in_all_minimal(const Formula& f, const Clause& c,
                    int cap = kDefaultVariableCap,
                    int clause_cap = kDefaultMinimizeClauseCap,
                    int budget = kDefaultClosureBudget,
                    const CancelToken* cancel = nullptr);

enum class MinimalityCertificate { certified, unknown };

// "certified" when every clause of f is superirredundant (then f is minimal);
// "unknown" otherwise -- which does NOT mean f is not minimal.
MinimalityCertificate certify_minimal(const Formula& f,
                                      int cap = kDefaultVariableCap);

const char* certificate_name(MinimalityCertificate c);

}  // namespace superclause
