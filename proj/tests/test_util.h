#ifndef ALMOSTSTABLE_TESTS_TEST_UTIL_H_
#define ALMOSTSTABLE_TESTS_TEST_UTIL_H_

// Brute-force oracles and small random instances shared by the unit and
// acceptance tests. Nothing here calls into the solver code paths it checks:
// blocking pairs and objectives are recomputed from the preference lists.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "almoststable/instance.h"

namespace almoststable::testing {

using Prefs = std::vector<std::vector<AgentId>>;

// Calls |visit| with the partner array (-1 = single) of every matching.
inline void for_each_matching(const Instance& inst,
                              const std::function<void(const std::vector<int>&)>& visit) {
  const int n = inst.size();
  std::vector<int> partner(n, -2);
  std::function<void(int)> rec = [&](int from) {
    int a = from;
    while (a < n && partner[a] != -2) ++a;
    if (a == n) {
      visit(partner);
      return;
    }
    partner[a] = -1;
    rec(a + 1);
    for (AgentId j : inst.prefs(a)) {
      if (j > a && partner[j] == -2) {
        partner[a] = j;
        partner[j] = a;
        rec(a + 1);
        partner[j] = -2;
      }
    }
    partner[a] = -2;
  };
  rec(0);
}

inline int position(const Instance& inst, AgentId i, AgentId j) {
  auto list = inst.prefs(i);
  auto it = std::find(list.begin(), list.end(), j);
  return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

// i strictly prefers j to its partner p (-1 = single, the worst outcome).
inline bool wants(const Instance& inst, AgentId i, AgentId j, int p) {
  int rj = position(inst, i, j);
  if (rj < 0) return false;
  return p < 0 || rj < position(inst, i, p);
}

struct OracleScore {
  int max_bp = 0;
  int total_bp = 0;
  int blocking_agents = 0;
  int size = 0;
};

inline OracleScore score(const Instance& inst, const std::vector<int>& partner) {
  const int n = inst.size();
  std::vector<int> per(n, 0);
  OracleScore s;
  for (AgentId i = 0; i < n; ++i) {
    if (partner[i] > i) ++s.size;
    for (AgentId j = i + 1; j < n; ++j) {
      if (partner[i] == j) continue;
      if (wants(inst, i, j, partner[i]) && wants(inst, j, i, partner[j])) {
        ++per[i];
        ++per[j];
        ++s.total_bp;
      }
    }
  }
  for (int c : per) {
    s.max_bp = std::max(s.max_bp, c);
    s.blocking_agents += c > 0;
  }
  return s;
}

// 0 = minimax, 1 = total blocking pairs, 2 = blocking agents.
inline int pick(const OracleScore& s, int objective) {
  return objective == 0 ? s.max_bp : objective == 1 ? s.total_bp : s.blocking_agents;
}

inline int oracle_max_size(const Instance& inst) {
  int best = 0;
  for_each_matching(inst, [&](const std::vector<int>& p) {
    int size = 0;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) size += p[i] > i;
    best = std::max(best, size);
  });
  return best;
}

// Optimum of |objective| over all matchings (required_size = 0) or over
// matchings of exactly the maximum size (required_size < 0 means "compute").
inline int oracle_optimum(const Instance& inst, int objective, bool max_card) {
  const int required = max_card ? oracle_max_size(inst) : 0;
  int best = -1;
  for_each_matching(inst, [&](const std::vector<int>& p) {
    OracleScore s = score(inst, p);
    if (s.size < required) return;
    int v = pick(s, objective);
    if (best < 0 || v < best) best = v;
  });
  return best;
}

inline int count_max_matchings(const Instance& inst) {
  const int required = oracle_max_size(inst);
  int count = 0;
  for_each_matching(inst, [&](const std::vector<int>& p) {
    int size = 0;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) size += p[i] > i;
    count += size == required;
  });
  return count;
}

inline bool oracle_solvable(const Instance& inst) {
  return oracle_optimum(inst, 1, false) == 0;
}

// Random graph with edge probability |density|, random strict orders.
inline Instance random_sri(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(density);
  Prefs prefs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge(rng)) {
        prefs[i].push_back(j);
        prefs[j].push_back(i);
      }
    }
  }
  for (auto& list : prefs) std::shuffle(list.begin(), list.end(), rng);
  return Instance(InstanceKind::kSri, std::move(prefs));
}

// Random bipartite graph: agents are split into two random classes.
inline Instance random_smi(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(density), coin(0.5);
  std::vector<int> side(n);
  for (int i = 0; i < n; ++i) side[i] = coin(rng);
  Prefs prefs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (side[i] != side[j] && edge(rng)) {
        prefs[i].push_back(j);
        prefs[j].push_back(i);
      }
    }
  }
  for (auto& list : prefs) std::shuffle(list.begin(), list.end(), rng);
  return Instance(InstanceKind::kSmi, std::move(prefs));
}

// Random acceptability graph of maximum degree 2 (paths and cycles). With
// |bipartite| the edges respect a random 2-colouring.
inline Instance random_deg2(int n, bool bipartite, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> side(n);
  for (int i = 0; i < n; ++i) side[i] = coin(rng);
  Prefs prefs(n);
  std::uniform_int_distribution<int> agent(0, n - 1);
  const int attempts = 3 * n;
  for (int t = 0; t < attempts; ++t) {
    int i = agent(rng), j = agent(rng);
    if (i == j || prefs[i].size() >= 2 || prefs[j].size() >= 2) continue;
    if (bipartite && side[i] == side[j]) continue;
    if (std::find(prefs[i].begin(), prefs[i].end(), j) != prefs[i].end()) continue;
    prefs[i].push_back(j);
    prefs[j].push_back(i);
  }
  for (auto& list : prefs) std::shuffle(list.begin(), list.end(), rng);
  return Instance(bipartite ? InstanceKind::kSmi : InstanceKind::kSri, std::move(prefs));
}

}  // namespace almoststable::testing

#endif  // ALMOSTSTABLE_TESTS_TEST_UTIL_H_
