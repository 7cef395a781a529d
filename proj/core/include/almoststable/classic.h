#ifndef ALMOSTSTABLE_CLASSIC_H_
#define ALMOSTSTABLE_CLASSIC_H_

#include <optional>
#include <vector>

#include "almoststable/instance.h"
#include "almoststable/matching.h"

namespace almoststable {

// Proposer-optimal stable matching of an SMI instance. |proposer_side| picks
// which colour class of Instance::sides() proposes. Throws Error(kNotSmi) for
// SRI instances.
Matching gale_shapley(const Instance& inst, int proposer_side = 0);

// Irving's two-phase algorithm for stable roommates with incomplete lists.
// Returns std::nullopt when the instance is unsolvable.
std::optional<Matching> irving(const Instance& inst);

// Maximum-cardinality matching when every list has length <= 2: the
// acceptability graph is a union of paths and cycles, so alternate edges are
// taken along each component. Throws Error(kDegreeExceeded) otherwise.
Matching max_matching_deg2(const Instance& inst);

// Maximum-cardinality matching of the acceptability graph: Hopcroft-Karp for
// SMI, Edmonds' blossom algorithm otherwise.
Matching max_matching(const Instance& inst);
int max_matching_size(const Instance& inst);

// Graph-level primitives over adjacency lists. Both return a mate array with
// -1 for exposed vertices.
std::vector<int> edmonds_matching(const std::vector<std::vector<int>>& adj);
// |side| must be a proper 2-colouring of |adj|.
std::vector<int> hopcroft_karp(const std::vector<std::vector<int>>& adj,
                               const std::vector<int>& side);

}  // namespace almoststable

#endif  // ALMOSTSTABLE_CLASSIC_H_
