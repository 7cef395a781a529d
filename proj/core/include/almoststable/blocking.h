#ifndef ALMOSTSTABLE_BLOCKING_H_
#define ALMOSTSTABLE_BLOCKING_H_

#include <string_view>
#include <vector>

#include "almoststable/instance.h"
#include "almoststable/matching.h"

namespace almoststable {

// Almost-stability objectives. kMinimax is max_i |bp_i(M)|, kMinBp is
// |bp(M)|, kMinBa is the number of blocking agents.
enum class Objective { kMinimax, kMinBp, kMinBa };

std::string_view to_string(Objective objective);
Objective parse_objective(std::string_view text);

struct BlockingReport {
  std::vector<AgentPair> blocking_pairs;  // canonical, sorted
  std::vector<int> per_agent;
  int max_bp = 0;
  int total_bp = 0;
  int blocking_agents = 0;
  bool stable = true;

  int value(Objective objective) const;
};

// {i,j} blocks iff each strictly prefers the other to its partner; being
// unmatched is worse than any acceptable agent. Throws
// Error(kInvalidMatching) if |m| does not belong to |inst|.
BlockingReport blocking_report(const Instance& inst, const Matching& m);

// True iff {i,j} is an acceptable, unmatched pair that blocks |m|.
bool is_blocking_pair(const Instance& inst, const Matching& m, AgentId i,
                      AgentId j);

}  // namespace almoststable

#endif  // ALMOSTSTABLE_BLOCKING_H_
