#ifndef ALMOSTSTABLE_LOCALSEARCH_H_
#define ALMOSTSTABLE_LOCALSEARCH_H_

#include <cstdint>
#include <vector>

#include "almoststable/instance.h"
#include "almoststable/matching.h"

namespace almoststable {

// A 2-way cut of the agents. cross[i] counts acceptable partners of i on the
// other side. After balanced_cut() returns, queue is empty and every agent
// satisfies degree(i) <= 2 * cross[i].
struct CutState {
  std::vector<int> side;
  std::vector<int> cross;
  std::vector<AgentId> queue;
  std::int64_t flips = 0;
  // Number of crossing pairs before the first flip and after each flip.
  std::vector<int> potential_trace;
};

// Local search from the all-zero cut: an agent with more than half of its
// list on its own side switches sides, until no such agent remains. Each
// flip raises the number of crossing pairs by at least one.
CutState balanced_cut(const Instance& inst);

// Number of acceptable pairs split by the cut. Throws
// Error(kInconsistentCut) if cut.cross disagrees with cut.side.
int potential(const Instance& inst, const CutState& cut);

// Keeps only the crossing pairs of |inst|, in the original list order.
Instance cut_subinstance(const Instance& inst, const CutState& cut);

struct ApproxResult {
  Matching matching;
  bool solvable = false;  // true when a stable matching was returned directly
  CutState cut;           // empty when solvable
};

// Stable matching if one exists; otherwise a stable matching of the
// bipartite sub-instance induced by a balanced cut. Every agent then lies in
// at most ceil(degree(i) / 2) blocking pairs.
Matching approx_minimax_sri(const Instance& inst);
ApproxResult approx_minimax_sri_detailed(const Instance& inst);

}  // namespace almoststable

#endif  // ALMOSTSTABLE_LOCALSEARCH_H_
