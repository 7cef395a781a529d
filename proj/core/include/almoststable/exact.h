#ifndef ALMOSTSTABLE_EXACT_H_
#define ALMOSTSTABLE_EXACT_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "almoststable/blocking.h"
#include "almoststable/instance.h"
#include "almoststable/matching.h"

namespace almoststable {

enum class Cardinality { kAny, kMaxCard, kPerfect };
std::string_view to_string(Cardinality card);
Cardinality parse_cardinality(std::string_view text);

struct ExactOptions {
  int cap = 24;        // refuse larger instances with Error(kTooLarge)
  bool force = false;  // ignore the cap
};

struct ExactResult {
  int value = 0;
  Matching witness;
  std::int64_t explored = 0;  // search nodes visited
};

// Branch and bound over all matchings meeting |card|. Among optimal
// matchings the witness has the lexicographically smallest sorted pair list.
// Throws Error(kInfeasible) when a perfect matching is required but none
// exists, Error(kTooLarge) when the instance exceeds the cap.
ExactResult solve_exact(const Instance& inst, Objective objective,
                        Cardinality card, const ExactOptions& options = {});

// A matching meeting |card| in which no agent is in more than k blocking
// pairs, or std::nullopt if none exists.
std::optional<Matching> decide_k_max(const Instance& inst, int k,
                                     Cardinality card,
                                     const ExactOptions& options = {});

}  // namespace almoststable

#endif  // ALMOSTSTABLE_EXACT_H_
