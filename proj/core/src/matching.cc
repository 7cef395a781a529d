#include "almoststable/matching.h"

#include <algorithm>
#include <string>

#include "almoststable/error.h"

namespace almoststable {

namespace {

std::string pair_text(AgentId a, AgentId b) {
  return "{" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}";
}

}  // namespace

std::vector<AgentId> Matching::unmatched() const {
  std::vector<AgentId> out;
  for (AgentId i = 0; i < agent_count(); ++i) {
    if (partner_[i] == kUnmatched) out.push_back(i);
  }
  return out;
}

Matching build_matching(const Instance& inst,
                        std::span<const AgentPair> pairs) {
  Matching m(inst.size());
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= inst.size() || b >= inst.size()) {
      throw Error(ErrorCode::kInvalidMatching,
                  "pair " + pair_text(a, b) + " names an unknown agent");
    }
    if (a == b || !inst.acceptable(a, b)) {
      throw Error(ErrorCode::kInvalidMatching,
                  "pair " + pair_text(a, b) + " is not mutually acceptable");
    }
    for (AgentId x : {a, b}) {
      if (m.partner_[x] != kUnmatched) {
        throw Error(ErrorCode::kInvalidMatching,
                    "agent " + std::to_string(x + 1) +
                        " occurs in more than one pair");
      }
    }
    m.partner_[a] = b;
    m.partner_[b] = a;
    m.pairs_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(m.pairs_.begin(), m.pairs_.end());
  return m;
}

Matching matching_from_partners(const Instance& inst,
                                std::span<const AgentId> partners) {
  if (static_cast<int>(partners.size()) != inst.size()) {
    throw Error(ErrorCode::kInvalidMatching, "partner array has wrong length");
  }
  std::vector<AgentPair> pairs;
  for (AgentId i = 0; i < inst.size(); ++i) {
    AgentId j = partners[i];
    if (j == kUnmatched) continue;
    if (j < 0 || j >= inst.size() || partners[j] != i) {
      throw Error(ErrorCode::kInvalidMatching,
                  "partner array is not symmetric at agent " +
                      std::to_string(i + 1));
    }
    if (i < j) pairs.emplace_back(i, j);
  }
  return build_matching(inst, pairs);
}

bool belongs_to(const Instance& inst, const Matching& m) {
  if (m.agent_count() != inst.size()) return false;
  return std::all_of(m.pairs().begin(), m.pairs().end(), [&](AgentPair p) {
    return inst.acceptable(p.first, p.second);
  });
}

}  // namespace almoststable
