#ifndef ALMOSTSTABLE_BUDGETED_SEARCH_H_
#define ALMOSTSTABLE_BUDGETED_SEARCH_H_

#include <chrono>
#include <cstdint>
#include <optional>

#include "almoststable/exact.h"
#include "almoststable/instance.h"
#include "almoststable/matching.h"

namespace almoststable {

// Minimax search for instances beyond the exact solver's cap. Decides
// "max_bp <= k" for increasing k with a constraint-propagating depth-first
// search, under a wall-clock budget.

struct BudgetedOptions {
  std::int64_t budget_ms = 10000;
};

struct BudgetedResult {
  int value = 0;           // best max_bp found
  Matching witness;
  bool proven_optimal = false;
  int lower_bound = 0;     // proven lower bound on the optimum
  std::int64_t explored = 0;
};

// Only kAny and kMaxCard are supported.
BudgetedResult solve_minimax_budgeted(const Instance& inst, Cardinality card,
                                      const BudgetedOptions& options = {});

enum class DecideStatus { kFound, kInfeasible, kTimeout };

struct DecideOutcome {
  DecideStatus status = DecideStatus::kTimeout;
  std::optional<Matching> witness;
  std::int64_t explored = 0;
};

// One decision query. |guide| (may be empty) suggests partners to try first.
// |required| is the minimum matching size.
DecideOutcome decide_k_max_budgeted(
    const Instance& inst, int k, int required, const Matching* guide,
    std::chrono::steady_clock::time_point deadline);

}  // namespace almoststable

#endif  // ALMOSTSTABLE_BUDGETED_SEARCH_H_
