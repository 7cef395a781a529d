#ifndef ALMOSTSTABLE_RANDOM_INSTANCES_H_
#define ALMOSTSTABLE_RANDOM_INSTANCES_H_

#include <cstdint>
#include <string_view>

#include "almoststable/instance.h"

namespace almoststable {

// Seeded random instances.
//
// SMI: agents 1..n/2 form one side. Each of them ranks a uniform random
// l-subset of the other side in uniform random order; the other side ranks
// whoever listed it, in uniform random order. Needs n even and l <= n/2.
//
// SRI, kDegreeCapped (default): agents are visited in a uniform random order
// and each one draws uniform partners among the agents that still have
// fewer than l neighbours, until it has l itself or nobody is left. Lists
// therefore have length l except for a few agents near the end.
// SRI, kProposalClosure: every agent picks l distinct partners uniformly and
// acceptability is the symmetric closure of the picks, so lists are close to
// 2l long. Both need l < n, and each final list is uniformly shuffled.
//
// Throws Error(kBadConfig) on invalid parameters.
enum class SriScheme { kDegreeCapped, kProposalClosure };
std::string_view to_string(SriScheme scheme);
SriScheme parse_sri_scheme(std::string_view text);  // "capped" | "closure"

Instance gen_random(int n, int l, InstanceKind kind, std::uint64_t seed,
                    SriScheme scheme = SriScheme::kDegreeCapped);

}  // namespace almoststable

#endif  // ALMOSTSTABLE_RANDOM_INSTANCES_H_
