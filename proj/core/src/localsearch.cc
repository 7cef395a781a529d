#include "almoststable/localsearch.h"

#include <cassert>

#include "almoststable/classic.h"
#include "almoststable/error.h"

namespace almoststable {

CutState balanced_cut(const Instance& inst) {
  const int n = inst.size();
  CutState cut;
  cut.side.assign(n, 0);
  cut.cross.assign(n, 0);

  std::vector<char> queued(n, 0);
  auto violated = [&](AgentId i) { return inst.degree(i) > 2 * cut.cross[i]; };
  // Stack in reverse so that the lowest id is popped first.
  for (AgentId i = n - 1; i >= 0; --i) {
    if (inst.degree(i) > 0) {
      cut.queue.push_back(i);
      queued[i] = 1;
    }
  }

  int phi = 0;
  cut.potential_trace.push_back(phi);
  while (!cut.queue.empty()) {
    AgentId i = cut.queue.back();
    cut.queue.pop_back();
    queued[i] = 0;
    if (!violated(i)) continue;

    const int before = cut.side[i];
    cut.side[i] ^= 1;
    for (AgentId j : inst.prefs(i)) {
      if (cut.side[j] == before) {
        ++cut.cross[j];
      } else {
        --cut.cross[j];
      }
      if (!queued[j] && violated(j)) {
        cut.queue.push_back(j);
        queued[j] = 1;
      }
    }
    const int gain = inst.degree(i) - 2 * cut.cross[i];
    cut.cross[i] = inst.degree(i) - cut.cross[i];
    phi += gain;
    assert(gain >= 1);
    ++cut.flips;
    cut.potential_trace.push_back(phi);
  }
  return cut;
}

int potential(const Instance& inst, const CutState& cut) {
  const int n = inst.size();
  if (static_cast<int>(cut.side.size()) != n ||
      static_cast<int>(cut.cross.size()) != n) {
    throw Error(ErrorCode::kInconsistentCut, "cut has the wrong agent count");
  }
  int total = 0;
  for (AgentId i = 0; i < n; ++i) {
    int c = 0;
    for (AgentId j : inst.prefs(i)) c += cut.side[i] != cut.side[j];
    if (c != cut.cross[i]) {
      throw Error(ErrorCode::kInconsistentCut,
                  "stored cross count of agent " + std::to_string(i + 1) +
                      " is " + std::to_string(cut.cross[i]) + ", recomputed " +
                      std::to_string(c));
    }
    total += c;
  }
  return total / 2;
}

Instance cut_subinstance(const Instance& inst, const CutState& cut) {
  std::vector<std::vector<AgentId>> prefs(inst.size());
  for (AgentId i = 0; i < inst.size(); ++i) {
    for (AgentId j : inst.prefs(i)) {
      if (cut.side[i] != cut.side[j]) prefs[i].push_back(j);
    }
  }
  return Instance(InstanceKind::kSmi, std::move(prefs));
}

ApproxResult approx_minimax_sri_detailed(const Instance& inst) {
  ApproxResult result;
  if (auto stable = irving(inst)) {
    result.matching = *stable;
    result.solvable = true;
    return result;
  }
  result.cut = balanced_cut(inst);
  Instance sub = cut_subinstance(inst, result.cut);
  Matching m = gale_shapley(sub, 0);
  result.matching = matching_from_partners(inst, m.partners());
  return result;
}

Matching approx_minimax_sri(const Instance& inst) {
  return approx_minimax_sri_detailed(inst).matching;
}

}  // namespace almoststable
