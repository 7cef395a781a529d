#include "almoststable/budgeted_search.h"

#include <algorithm>
#include <vector>

#include "almoststable/blocking.h"
#include "almoststable/classic.h"
#include "almoststable/error.h"
#include "almoststable/localsearch.h"

namespace almoststable {

namespace {

constexpr int kUndecided = -2;
constexpr int kNodesPerClockCheck = 256;

class DecisionSearch {
 public:
  DecisionSearch(const Instance& inst, int k, int required,
                 const Matching* guide,
                 std::chrono::steady_clock::time_point deadline)
      : inst_(inst),
        n_(inst.size()),
        k_(k),
        required_(required),
        deadline_(deadline),
        state_(n_, kUndecided),
        guide_(n_, kUnmatched),
        limit_(n_),
        lo_(n_),
        count_(n_),
        local_(n_, -1) {
    if (guide != nullptr) guide_ = guide->partners();
  }

  DecideOutcome run() {
    DecideOutcome out;
    bool found = dfs();
    out.explored = explored_;
    if (found) {
      out.status = DecideStatus::kFound;
      std::vector<AgentId> partner(state_);
      for (auto& p : partner) {
        if (p < 0) p = kUnmatched;
      }
      out.witness = matching_from_partners(inst_, partner);
    } else {
      out.status = timed_out_ ? DecideStatus::kTimeout : DecideStatus::kInfeasible;
    }
    return out;
  }

 private:
  int degree(AgentId i) const { return inst_.degree(i); }

  bool in_domain(AgentId i, AgentId j) const {
    return state_[j] == kUndecided && inst_.rank(i, j) < limit_[i] &&
           inst_.rank(j, i) < limit_[j];
  }

  bool may_stay_single(AgentId i) const { return degree(i) < limit_[i]; }

  // Best rank each agent can still hold; false if some domain is empty.
  bool compute_lo() {
    for (AgentId i = 0; i < n_; ++i) {
      if (state_[i] == kUnmatched) {
        lo_[i] = degree(i);
      } else if (state_[i] >= 0) {
        lo_[i] = inst_.rank(i, state_[i]);
      } else {
        lo_[i] = -1;
        for (AgentId j : inst_.prefs(i)) {
          if (in_domain(i, j)) {
            lo_[i] = inst_.rank(i, j);
            break;
          }
        }
        if (lo_[i] < 0) {
          if (!may_stay_single(i)) return false;
          lo_[i] = degree(i);
        }
      }
    }
    return true;
  }

  // Tightens limit_ until a fixpoint. Returns false on a contradiction.
  bool propagate() {
    for (AgentId i = 0; i < n_; ++i) limit_[i] = degree(i) + 1;
    std::vector<int> wanted_by;
    while (true) {
      if (!compute_lo()) return false;
      std::fill(count_.begin(), count_.end(), 0);
      for (AgentId i = 0; i < n_; ++i) {
        auto list = inst_.prefs(i);
        for (int r = 0; r < lo_[i]; ++r) {
          AgentId j = list[r];
          if (j > i && inst_.rank(j, i) < lo_[j]) {
            ++count_[i];
            ++count_[j];
          }
        }
      }
      for (AgentId i = 0; i < n_; ++i) {
        if (count_[i] > k_) return false;
      }

      bool changed = false;
      auto tighten = [&](AgentId i, int bound) {
        if (bound < limit_[i]) {
          limit_[i] = bound;
          changed = true;
        }
      };
      for (AgentId j = 0; j < n_; ++j) {
        if (state_[j] == kUndecided) {
          // Agents that will want j whatever happens: j may sit above at
          // most k of them.
          wanted_by.clear();
          for (AgentId i : inst_.prefs(j)) {
            if (inst_.rank(i, j) < lo_[i] && !in_domain(j, i)) {
              wanted_by.push_back(inst_.rank(j, i));
            }
          }
          if (static_cast<int>(wanted_by.size()) > k_) {
            std::nth_element(wanted_by.begin(), wanted_by.begin() + k_,
                             wanted_by.end());
            tighten(j, wanted_by[k_]);
          }
        } else if (count_[j] == k_) {
          // j is saturated: nobody j still wants may come to want j.
          const int held = lo_[j];
          auto list = inst_.prefs(j);
          for (int r = 0; r < held; ++r) {
            AgentId i = list[r];
            if (state_[i] == kUndecided && inst_.rank(i, j) >= lo_[i]) {
              tighten(i, inst_.rank(i, j));
            }
          }
        }
      }
      if (!changed) return true;
    }
  }

  bool cardinality_ok() {
    if (required_ == 0) return true;
    std::vector<AgentId> members;
    for (AgentId i = 0; i < n_; ++i) {
      if (state_[i] == kUndecided) {
        local_[i] = static_cast<int>(members.size());
        members.push_back(i);
      }
    }
    std::vector<std::vector<int>> adj(members.size());
    for (std::size_t u = 0; u < members.size(); ++u) {
      for (AgentId j : inst_.prefs(members[u])) {
        if (in_domain(members[u], j)) adj[u].push_back(local_[j]);
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

  bool out_of_time() {
    if (timed_out_) return true;
    if (++explored_ % kNodesPerClockCheck == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
    }
    return timed_out_;
  }

  bool dfs() {
    if (out_of_time()) return false;
    if (!propagate()) return false;
    if (!cardinality_ok()) return false;

    // Branch on the undecided agent with the fewest options.
    AgentId pick = kUnmatched;
    int pick_size = 0;
    for (AgentId i = 0; i < n_; ++i) {
      if (state_[i] != kUndecided) continue;
      int size = may_stay_single(i) ? 1 : 0;
      for (AgentId j : inst_.prefs(i)) size += in_domain(i, j);
      if (pick == kUnmatched || size < pick_size) {
        pick = i;
        pick_size = size;
      }
    }
    if (pick == kUnmatched) return true;

    std::vector<AgentId> options;
    const AgentId hint = guide_[pick];
    if (hint != kUnmatched && in_domain(pick, hint)) options.push_back(hint);
    for (AgentId j : inst_.prefs(pick)) {
      if (j != hint && in_domain(pick, j)) options.push_back(j);
    }
    if (may_stay_single(pick)) options.push_back(kUnmatched);
    if (hint == kUnmatched && may_stay_single(pick) && options.size() > 1 &&
        guide_provided()) {
      std::rotate(options.begin(), options.end() - 1, options.end());
    }

    // Domains are recomputed from scratch at every node, so only the
    // assignment itself needs undoing.
    for (AgentId j : options) {
      if (j == kUnmatched) {
        state_[pick] = kUnmatched;
        if (dfs()) return true;
        state_[pick] = kUndecided;
      } else {
        state_[pick] = j;
        state_[j] = pick;
        ++matched_;
        if (dfs()) return true;
        --matched_;
        state_[pick] = state_[j] = kUndecided;
      }
      if (timed_out_) return false;
    }
    return false;
  }

  bool guide_provided() const {
    return std::any_of(guide_.begin(), guide_.end(),
                       [](AgentId p) { return p != kUnmatched; });
  }

  const Instance& inst_;
  const int n_;
  const int k_;
  const int required_;
  const std::chrono::steady_clock::time_point deadline_;
  std::vector<AgentId> state_;
  std::vector<AgentId> guide_;
  std::vector<int> limit_;
  std::vector<int> lo_;
  std::vector<int> count_;
  std::vector<int> local_;
  int matched_ = 0;
  std::int64_t explored_ = 0;
  bool timed_out_ = false;
};

}  // namespace

DecideOutcome decide_k_max_budgeted(
    const Instance& inst, int k, int required, const Matching* guide,
    std::chrono::steady_clock::time_point deadline) {
  if (k < 0) throw Error(ErrorCode::kPrecondition, "k must be non-negative");
  return DecisionSearch(inst, k, required, guide, deadline).run();
}

BudgetedResult solve_minimax_budgeted(const Instance& inst, Cardinality card,
                                      const BudgetedOptions& options) {
  if (card == Cardinality::kPerfect) {
    throw Error(ErrorCode::kPrecondition,
                "budgeted search supports the any and max cardinalities");
  }
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(options.budget_ms);
  BudgetedResult result;

  // Incumbent and lower bound. Stable matchings all have the same size, so
  // value 0 under kMaxCard needs a stable matching of maximum size.
  Matching incumbent;
  int required = 0;
  if (card == Cardinality::kAny) {
    if (auto stable = irving(inst)) {
      result.witness = *stable;
      result.proven_optimal = true;
      return result;
    }
    incumbent = approx_minimax_sri(inst);
  } else {
    Matching maximum = max_matching(inst);
    required = maximum.size();
    std::optional<Matching> stable;
    if (inst.is_smi()) {
      stable = gale_shapley(inst);
    } else {
      stable = irving(inst);
    }
    if (stable && stable->size() == required) {
      result.witness = *stable;
      result.proven_optimal = true;
      return result;
    }
    incumbent = maximum;
  }
  result.lower_bound = 1;
  result.value = blocking_report(inst, incumbent).max_bp;
  result.witness = incumbent;

  for (int k = result.lower_bound; k < result.value; ++k) {
    DecideOutcome outcome =
        decide_k_max_budgeted(inst, k, required, &result.witness, deadline);
    result.explored += outcome.explored;
    if (outcome.status == DecideStatus::kFound) {
      result.value = blocking_report(inst, *outcome.witness).max_bp;
      result.witness = *outcome.witness;
      break;
    }
    if (outcome.status == DecideStatus::kTimeout) return result;
    result.lower_bound = k + 1;
  }
  result.lower_bound = std::min(result.lower_bound, result.value);
  result.proven_optimal = result.lower_bound == result.value;
  return result;
}

}  // namespace almoststable
