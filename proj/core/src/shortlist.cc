#include "almoststable/shortlist.h"

#include <stdexcept>
#include <vector>

#include "almoststable/blocking.h"
#include "almoststable/classic.h"
#include "almoststable/error.h"

namespace almoststable {

namespace {

void require_deg2(const Instance& inst) {
  if (inst.max_degree() > 2) {
    throw Error(ErrorCode::kDegreeExceeded,
                "preference lists longer than 2 (max " +
                    std::to_string(inst.max_degree()) + ")");
  }
}

bool blocks(const Instance& inst, const std::vector<AgentId>& partner,
            AgentId i, AgentId j) {
  return partner[i] != j && inst.prefers(i, j, partner[i]) &&
         inst.prefers(j, i, partner[j]);
}

}  // namespace

RematchResult rematch_deg2_counted(const Instance& inst, const Matching& m) {
  require_deg2(inst);
  const int n = inst.size();
  std::vector<AgentId> partner = m.partners();

  // With lists of length <= 2 only an unmatched agent can be in two blocking
  // pairs: a matched agent has at most one other list entry.
  auto over_blocked = [&](AgentId i) {
    if (partner[i] != kUnmatched || inst.degree(i) < 2) return false;
    for (AgentId j : inst.prefs(i)) {
      if (!blocks(inst, partner, i, j)) return false;
    }
    return true;
  };

  std::vector<AgentId> stack;
  for (AgentId i = n - 1; i >= 0; --i) {
    if (partner[i] == kUnmatched) stack.push_back(i);
  }
  int iterations = 0;
  auto drain = [&] {
    while (!stack.empty()) {
      AgentId i = stack.back();
      stack.pop_back();
      if (!over_blocked(i)) continue;
      AgentId r = inst.prefs(i)[0];
      AgentId k = partner[r];
      if (k == kUnmatched) {
        throw Error(ErrorCode::kPrecondition,
                    "rematch_deg2 needs a maximum matching");
      }
      partner[k] = kUnmatched;
      partner[r] = i;
      partner[i] = r;
      stack.push_back(k);
      if (++iterations > n) {
        throw std::logic_error("rematch_deg2 did not terminate within n swaps");
      }
    }
  };
  drain();
  // Verification pass: every agent must be within the bound.
  for (AgentId i = 0; i < n; ++i) {
    if (over_blocked(i)) stack.push_back(i);
  }
  drain();
  return {matching_from_partners(inst, partner), iterations};
}

Matching rematch_deg2(const Instance& inst, const Matching& m) {
  return rematch_deg2_counted(inst, m).matching;
}

Matching solve_minimax_sri_deg2(const Instance& inst) {
  require_deg2(inst);
  if (auto stable = irving(inst)) return *stable;
  return rematch_deg2(inst, max_matching_deg2(inst));
}

Matching solve_minimax_max_smi_deg2(const Instance& inst) {
  if (!inst.is_smi()) {
    throw Error(ErrorCode::kNotSmi, "solve_minimax_max_smi_deg2 needs an SMI instance");
  }
  require_deg2(inst);
  Matching stable = gale_shapley(inst);
  Matching maximum = max_matching_deg2(inst);
  if (stable.size() == maximum.size()) return stable;
  return rematch_deg2(inst, maximum);
}

}  // namespace almoststable
