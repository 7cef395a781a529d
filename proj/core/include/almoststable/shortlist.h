#ifndef ALMOSTSTABLE_SHORTLIST_H_
#define ALMOSTSTABLE_SHORTLIST_H_

#include "almoststable/instance.h"
#include "almoststable/matching.h"

namespace almoststable {

// Exact minimax solvers for instances whose preference lists have length at
// most 2. Both run in linear time and return matchings with max_bp <= 1.

// Minimises max_bp over all matchings: Irving's output when the instance is
// solvable, otherwise a rematched maximum matching. Throws
// Error(kDegreeExceeded).
Matching solve_minimax_sri_deg2(const Instance& inst);

// Minimises max_bp over maximum-cardinality matchings of an SMI instance.
// Throws Error(kNotSmi) or Error(kDegreeExceeded).
Matching solve_minimax_max_smi_deg2(const Instance& inst);

struct RematchResult {
  Matching matching;
  int iterations = 0;  // number of swaps performed
};

// Repeatedly takes an unmatched agent that blocks with both of its list
// entries, matches it to the one it prefers and frees that agent's former
// partner. Size is preserved; on return no agent is in two blocking pairs.
// |m| must be a maximum matching of |inst|.
Matching rematch_deg2(const Instance& inst, const Matching& m);
RematchResult rematch_deg2_counted(const Instance& inst, const Matching& m);

}  // namespace almoststable

#endif  // ALMOSTSTABLE_SHORTLIST_H_
