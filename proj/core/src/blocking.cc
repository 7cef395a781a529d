#include "almoststable/blocking.h"

#include <algorithm>
#include <string>

#include "almoststable/error.h"

namespace almoststable {

std::string_view to_string(Objective objective) {
  switch (objective) {
    case Objective::kMinimax: return "minimax";
    case Objective::kMinBp: return "minbp";
    case Objective::kMinBa: return "minba";
  }
  return "minimax";
}

Objective parse_objective(std::string_view text) {
  if (text == "minimax") return Objective::kMinimax;
  if (text == "minbp") return Objective::kMinBp;
  if (text == "minba") return Objective::kMinBa;
  throw Error(ErrorCode::kMalformed,
              "unknown objective '" + std::string(text) + "'");
}

int BlockingReport::value(Objective objective) const {
  switch (objective) {
    case Objective::kMinimax: return max_bp;
    case Objective::kMinBp: return total_bp;
    case Objective::kMinBa: return blocking_agents;
  }
  return max_bp;
}

bool is_blocking_pair(const Instance& inst, const Matching& m, AgentId i,
                      AgentId j) {
  if (i == j || !inst.acceptable(i, j) || m.partner(i) == j) return false;
  return inst.prefers(i, j, m.partner(i)) && inst.prefers(j, i, m.partner(j));
}

BlockingReport blocking_report(const Instance& inst, const Matching& m) {
  if (!belongs_to(inst, m)) {
    throw Error(ErrorCode::kInvalidMatching,
                "matching does not belong to this instance");
  }
  const int n = inst.size();
  BlockingReport report;
  report.per_agent.assign(n, 0);

  // Rank of the current partner; an unmatched agent sits just past its list.
  std::vector<int> held(n);
  for (AgentId i = 0; i < n; ++i) {
    held[i] = m.is_matched(i) ? inst.rank(i, m.partner(i)) : inst.degree(i);
  }
  for (AgentId i = 0; i < n; ++i) {
    const auto list = inst.prefs(i);
    for (int r = 0; r < held[i]; ++r) {
      AgentId j = list[r];
      if (j < i) continue;
      if (inst.rank(j, i) < held[j]) {
        report.blocking_pairs.emplace_back(i, j);
        ++report.per_agent[i];
        ++report.per_agent[j];
      }
    }
  }
  std::sort(report.blocking_pairs.begin(), report.blocking_pairs.end());
  report.total_bp = static_cast<int>(report.blocking_pairs.size());
  for (int c : report.per_agent) {
    report.max_bp = std::max(report.max_bp, c);
    if (c > 0) ++report.blocking_agents;
  }
  report.stable = report.total_bp == 0;
  return report;
}

}  // namespace almoststable
