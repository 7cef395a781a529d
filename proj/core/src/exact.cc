#include "almoststable/exact.h"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "almoststable/classic.h"
#include "almoststable/error.h"

namespace almoststable {

std::string_view to_string(Cardinality card) {
  switch (card) {
    case Cardinality::kAny: return "any";
    case Cardinality::kMaxCard: return "max";
    case Cardinality::kPerfect: return "perfect";
  }
  return "any";
}

Cardinality parse_cardinality(std::string_view text) {
  if (text == "any") return Cardinality::kAny;
  if (text == "max") return Cardinality::kMaxCard;
  if (text == "perfect") return Cardinality::kPerfect;
  throw Error(ErrorCode::kMalformed,
              "unknown cardinality '" + std::string(text) + "'");
}

namespace {

constexpr int kUndecided = -2;

class Search {
 public:
  Search(const Instance& inst, Objective objective, int required,
         bool perfect, int incumbent, bool stop_at_first)
      : inst_(inst),
        objective_(objective),
        required_(required),
        perfect_(perfect),
        best_(incumbent),
        stop_at_first_(stop_at_first),
        state_(inst.size(), kUndecided),
        lo_(inst.size()),
        count_(inst.size()),
        local_(inst.size(), -1) {
    sorted_.resize(inst.size());
    for (AgentId i = 0; i < inst.size(); ++i) {
      auto list = inst.prefs(i);
      sorted_[i].assign(list.begin(), list.end());
      std::sort(sorted_[i].begin(), sorted_[i].end());
    }
  }

  void run() { dfs(0, false); }

  bool found() const { return !best_state_.empty(); }
  int best() const { return best_; }
  std::int64_t explored() const { return explored_; }

  Matching witness() const {
    std::vector<AgentId> partner(best_state_);
    for (auto& p : partner) {
      if (p < 0) p = kUnmatched;
    }
    return matching_from_partners(inst_, partner);
  }

 private:
  // Lower bound on the objective of every completion of the current state.
  // A pair blocks in every completion when each endpoint already holds, or
  // can at best hold, someone it likes less than the other.
  int lower_bound() {
    const int n = inst_.size();
    for (AgentId i = 0; i < n; ++i) {
      if (state_[i] == kUnmatched) {
        lo_[i] = inst_.degree(i);
      } else if (state_[i] >= 0) {
        lo_[i] = inst_.rank(i, state_[i]);
      } else {
        int best = inst_.degree(i);
        for (AgentId j : inst_.prefs(i)) {
          if (state_[j] == kUndecided) {
            best = inst_.rank(i, j);
            break;
          }
        }
        lo_[i] = best;
      }
    }
    std::fill(count_.begin(), count_.end(), 0);
    int total = 0;
    for (AgentId i = 0; i < n; ++i) {
      auto list = inst_.prefs(i);
      for (int r = 0; r < lo_[i]; ++r) {
        AgentId j = list[r];
        if (j > i && inst_.rank(j, i) < lo_[j]) {
          ++count_[i];
          ++count_[j];
          ++total;
        }
      }
    }
    switch (objective_) {
      case Objective::kMinimax:
        return *std::max_element(count_.begin(), count_.end());
      case Objective::kMinBp:
        return total;
      case Objective::kMinBa:
        return static_cast<int>(
            std::count_if(count_.begin(), count_.end(),
                          [](int c) { return c > 0; }));
    }
    return 0;
  }

  // Upper bound on the final matching size is still >= required_.
  bool cardinality_ok() {
    if (required_ == 0) return true;
    const int n = inst_.size();
    int open = 0;
    for (AgentId i = 0; i < n; ++i) {
      if (state_[i] != kUndecided) continue;
      for (AgentId j : inst_.prefs(i)) {
        if (state_[j] == kUndecided) {
          ++open;
          break;
        }
      }
    }
    if (matched_ + open / 2 < required_) return false;
    std::vector<AgentId> members;
    for (AgentId i = 0; i < n; ++i) {
      if (state_[i] == kUndecided) {
        local_[i] = static_cast<int>(members.size());
        members.push_back(i);
      }
    }
    std::vector<std::vector<int>> adj(members.size());
    for (std::size_t u = 0; u < members.size(); ++u) {
      for (AgentId j : inst_.prefs(members[u])) {
        if (state_[j] == kUndecided) adj[u].push_back(local_[j]);
      }
    }
    std::vector<int> mate = edmonds_matching(adj);
    int extra = 0;
    for (std::size_t u = 0; u < mate.size(); ++u) {
      if (mate[u] > static_cast<int>(u)) ++extra;
    }
    for (AgentId i : members) local_[i] = -1;
    return matched_ + extra >= required_;
  }

  void record() {
    best_ = lower_bound();
    best_state_ = state_;
    if (stop_at_first_) stopped_ = true;
  }

  void dfs(AgentId from, bool leaf_done) {
    if (stopped_) return;
    ++explored_;
    if (lower_bound() >= best_) return;
    if (!cardinality_ok()) return;

    const int n = inst_.size();
    AgentId a = from;
    while (a < n && state_[a] != kUndecided) ++a;
    if (a == n) {
      record();
      return;
    }

    // The matching that leaves everyone left single sorts before every
    // other completion, so it is tried first.
    if (!leaf_done && matched_ >= required_ && !perfect_) {
      std::vector<AgentId> opened;
      for (AgentId i = a; i < n; ++i) {
        if (state_[i] == kUndecided) {
          state_[i] = kUnmatched;
          opened.push_back(i);
        }
      }
      ++explored_;
      if (lower_bound() < best_) record();
      for (AgentId i : opened) state_[i] = kUndecided;
      if (stopped_) return;
    }

    for (AgentId j : sorted_[a]) {
      if (j < a || state_[j] != kUndecided) continue;
      state_[a] = j;
      state_[j] = a;
      ++matched_;
      dfs(a + 1, false);
      --matched_;
      state_[a] = state_[j] = kUndecided;
      if (stopped_) return;
    }
    if (!perfect_) {
      state_[a] = kUnmatched;
      dfs(a + 1, true);
      state_[a] = kUndecided;
    }
  }

  const Instance& inst_;
  Objective objective_;
  int required_;
  bool perfect_;
  int best_;
  bool stop_at_first_;
  bool stopped_ = false;
  int matched_ = 0;
  std::int64_t explored_ = 0;
  std::vector<AgentId> state_;
  std::vector<AgentId> best_state_;
  std::vector<std::vector<AgentId>> sorted_;
  std::vector<int> lo_;
  std::vector<int> count_;
  std::vector<int> local_;
};

void check_cap(const Instance& inst, const ExactOptions& options) {
  if (!options.force && inst.size() > options.cap) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(inst.size()) + " agents exceed the exact cap of " +
                    std::to_string(options.cap));
  }
}

// Required matching size, or -1 when a perfect matching was asked for and
// none exists.
int required_size(const Instance& inst, Cardinality card) {
  if (card == Cardinality::kAny) return 0;
  const int max_size = max_matching_size(inst);
  if (card == Cardinality::kPerfect && 2 * max_size != inst.size()) return -1;
  return max_size;
}

}  // namespace

ExactResult solve_exact(const Instance& inst, Objective objective,
                        Cardinality card, const ExactOptions& options) {
  check_cap(inst, options);
  const int required = required_size(inst, card);
  if (required < 0) {
    throw Error(ErrorCode::kInfeasible, "the instance has no perfect matching");
  }
  Search search(inst, objective, required, card == Cardinality::kPerfect,
                std::numeric_limits<int>::max(), false);
  search.run();
  return {search.best(), search.witness(), search.explored()};
}

std::optional<Matching> decide_k_max(const Instance& inst, int k,
                                     Cardinality card,
                                     const ExactOptions& options) {
  if (k < 0) throw Error(ErrorCode::kPrecondition, "k must be non-negative");
  check_cap(inst, options);
  const int required = required_size(inst, card);
  if (required < 0) return std::nullopt;
  Search search(inst, Objective::kMinimax, required,
                card == Cardinality::kPerfect, k + 1, true);
  search.run();
  if (!search.found()) return std::nullopt;
  return search.witness();
}

}  // namespace almoststable
