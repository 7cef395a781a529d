#ifndef ALMOSTSTABLE_MATCHING_H_
#define ALMOSTSTABLE_MATCHING_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "almoststable/instance.h"

namespace almoststable {

using AgentPair = std::pair<AgentId, AgentId>;

inline constexpr AgentId kUnmatched = -1;

// A set of disjoint, mutually acceptable pairs. Only build_matching() and
// matching_from_partners() construct non-empty matchings, so every Matching
// in circulation is valid for the instance it was built against. Pairs are
// stored canonically: first < second, sorted.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int agent_count) : partner_(agent_count, kUnmatched) {}

  int agent_count() const { return static_cast<int>(partner_.size()); }
  int size() const { return static_cast<int>(pairs_.size()); }

  // kUnmatched when the agent is single.
  AgentId partner(AgentId i) const { return partner_[i]; }
  bool is_matched(AgentId i) const { return partner_[i] != kUnmatched; }
  const std::vector<AgentId>& partners() const { return partner_; }
  const std::vector<AgentPair>& pairs() const { return pairs_; }
  std::vector<AgentId> unmatched() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  friend Matching build_matching(const Instance&, std::span<const AgentPair>);
  friend Matching matching_from_partners(const Instance&,
                                         std::span<const AgentId>);

  std::vector<AgentId> partner_;
  std::vector<AgentPair> pairs_;
};

// Throws Error(kInvalidMatching) naming the offending pair or agent when the
// pairs are not disjoint or not mutually acceptable. Pair orientation is
// irrelevant.
Matching build_matching(const Instance& inst, std::span<const AgentPair> pairs);

// |partners[i]| is kUnmatched or a partner id; must be self-symmetric.
Matching matching_from_partners(const Instance& inst,
                                std::span<const AgentId> partners);

// Whether |m| could have been built against |inst| (same agent count, every
// pair acceptable).
bool belongs_to(const Instance& inst, const Matching& m);

}  // namespace almoststable

#endif  // ALMOSTSTABLE_MATCHING_H_
