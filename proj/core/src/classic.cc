#include "almoststable/classic.h"

#include <algorithm>
#include <limits>
#include <queue>

#include "almoststable/error.h"

namespace almoststable {

Matching gale_shapley(const Instance& inst, int proposer_side) {
  if (!inst.is_smi()) {
    throw Error(ErrorCode::kNotSmi, "Gale-Shapley needs a bipartite instance");
  }
  const int n = inst.size();
  const auto& side = inst.sides();
  std::vector<int> next(n, 0);
  std::vector<AgentId> partner(n, kUnmatched);
  std::vector<AgentId> free;
  for (AgentId i = n - 1; i >= 0; --i) {
    if (side[i] == proposer_side) free.push_back(i);
  }
  while (!free.empty()) {
    AgentId p = free.back();
    if (next[p] >= inst.degree(p)) {
      free.pop_back();
      continue;
    }
    AgentId r = inst.prefs(p)[next[p]++];
    AgentId held = partner[r];
    if (held == kUnmatched) {
      free.pop_back();
      partner[r] = p;
      partner[p] = r;
    } else if (inst.rank(r, p) < inst.rank(r, held)) {
      free.pop_back();
      partner[r] = p;
      partner[p] = r;
      partner[held] = kUnmatched;
      free.push_back(held);
    }
  }
  return matching_from_partners(inst, partner);
}

namespace {

// Preference table with symmetric pair deletion, as used by both phases of
// Irving's algorithm.
class ReducedTable {
 public:
  explicit ReducedTable(const Instance& inst) : inst_(inst) {
    const int n = inst.size();
    alive_.resize(n);
    head_.assign(n, 0);
    count_.resize(n);
    tail_.resize(n);
    for (AgentId i = 0; i < n; ++i) {
      alive_[i].assign(inst.degree(i), true);
      count_[i] = inst.degree(i);
      tail_[i] = inst.degree(i) - 1;
    }
  }

  int count(AgentId i) const { return count_[i]; }

  void remove(AgentId a, AgentId b) {
    int ra = inst_.rank(a, b);
    if (!alive_[a][ra]) return;
    alive_[a][ra] = false;
    alive_[b][inst_.rank(b, a)] = false;
    --count_[a];
    --count_[b];
  }

  AgentId first(AgentId i) {
    while (head_[i] <= tail_[i] && !alive_[i][head_[i]]) ++head_[i];
    return head_[i] <= tail_[i] ? inst_.prefs(i)[head_[i]] : kUnmatched;
  }

  AgentId last(AgentId i) {
    while (tail_[i] >= head_[i] && !alive_[i][tail_[i]]) --tail_[i];
    return tail_[i] >= head_[i] ? inst_.prefs(i)[tail_[i]] : kUnmatched;
  }

  AgentId second(AgentId i) {
    first(i);
    for (int pos = head_[i] + 1; pos <= tail_[i]; ++pos) {
      if (alive_[i][pos]) return inst_.prefs(i)[pos];
    }
    return kUnmatched;
  }

  // Deletes every pair {holder, b} with b strictly after |keep| in holder's
  // list. Returns the agents that lost an entry.
  std::vector<AgentId> truncate_after(AgentId holder, AgentId keep) {
    std::vector<AgentId> dropped;
    const int cut = inst_.rank(holder, keep);
    for (int pos = tail_[holder]; pos > cut; --pos) {
      if (!alive_[holder][pos]) continue;
      AgentId b = inst_.prefs(holder)[pos];
      remove(holder, b);
      dropped.push_back(b);
    }
    return dropped;
  }

 private:
  const Instance& inst_;
  std::vector<std::vector<bool>> alive_;
  std::vector<int> head_, tail_, count_;
};

}  // namespace

std::optional<Matching> irving(const Instance& inst) {
  const int n = inst.size();
  ReducedTable table(inst);

  // Phase 1: proposals. holder[y] is the agent whose proposal y holds.
  std::vector<AgentId> holder(n, kUnmatched);
  std::vector<AgentId> free;
  for (AgentId i = n - 1; i >= 0; --i) free.push_back(i);
  while (!free.empty()) {
    AgentId x = free.back();
    free.pop_back();
    if (table.count(x) == 0) continue;
    AgentId y = table.first(x);
    AgentId previous = holder[y];
    holder[y] = x;
    for (AgentId b : table.truncate_after(y, x)) {
      if (b == previous) free.push_back(b);
    }
  }

  // Agents left with empty lists are single in every stable matching; any
  // other list emptied by rotation elimination means no stable matching.
  std::vector<bool> active(n);
  for (AgentId i = 0; i < n; ++i) active[i] = table.count(i) > 0;

  // Phase 2: eliminate exposed rotations until every list is a singleton.
  std::vector<int> seen_at(n, -1);
  for (AgentId start = 0; start < n; ++start) {
    while (table.count(start) >= 2) {
      std::vector<AgentId> walk;
      AgentId x = start;
      while (seen_at[x] < 0) {
        seen_at[x] = static_cast<int>(walk.size());
        walk.push_back(x);
        x = table.last(table.second(x));
      }
      const int from = seen_at[x];
      for (AgentId w : walk) seen_at[w] = -1;

      std::vector<std::pair<AgentId, AgentId>> rotation;  // (x_i, second(x_i))
      for (std::size_t i = from; i < walk.size(); ++i) {
        rotation.emplace_back(walk[i], table.second(walk[i]));
      }
      for (auto [xi, yi] : rotation) table.truncate_after(yi, xi);
      for (AgentId i = 0; i < n; ++i) {
        if (active[i] && table.count(i) == 0) return std::nullopt;
      }
    }
  }

  std::vector<AgentId> partner(n, kUnmatched);
  for (AgentId i = 0; i < n; ++i) {
    if (table.count(i) == 1) partner[i] = table.first(i);
  }
  for (AgentId i = 0; i < n; ++i) {
    if (partner[i] != kUnmatched && partner[partner[i]] != i) {
      return std::nullopt;
    }
  }
  return matching_from_partners(inst, partner);
}

Matching max_matching_deg2(const Instance& inst) {
  if (inst.max_degree() > 2) {
    throw Error(ErrorCode::kDegreeExceeded,
                "max_matching_deg2 needs lists of length at most 2");
  }
  const int n = inst.size();
  std::vector<bool> visited(n, false);
  std::vector<AgentPair> pairs;

  auto walk_from = [&](AgentId start, AgentId toward) {
    // Takes the 1st, 3rd, 5th, ... edge of the walk start -> toward -> ...
    AgentId prev = start, cur = toward;
    visited[start] = true;
    bool take = true;
    while (cur != kUnmatched && !visited[cur]) {
      visited[cur] = true;
      if (take) pairs.emplace_back(prev, cur);
      take = !take;
      AgentId next = kUnmatched;
      for (AgentId w : inst.prefs(cur)) {
        if (w != prev) next = w;
      }
      prev = cur;
      cur = next;
    }
  };

  // Paths first, each from its lowest-id endpoint.
  for (AgentId i = 0; i < n; ++i) {
    if (visited[i] || inst.degree(i) > 1) continue;
    if (inst.degree(i) == 0) {
      visited[i] = true;
      continue;
    }
    walk_from(i, inst.prefs(i)[0]);
  }
  // Remaining components are cycles; start at the lowest id.
  for (AgentId i = 0; i < n; ++i) {
    if (!visited[i]) walk_from(i, inst.prefs(i)[0]);
  }
  return build_matching(inst, pairs);
}

std::vector<int> edmonds_matching(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> match(n, -1), parent(n), base(n), queue(n);
  std::vector<char> used(n), in_blossom(n), on_path(n);

  auto lca = [&](int a, int b) {
    std::fill(on_path.begin(), on_path.end(), 0);
    while (true) {
      a = base[a];
      on_path[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (on_path[b]) return b;
      b = parent[match[b]];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = in_blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };

  auto find_path = [&](int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    int qh = 0, qt = 0;
    queue[qt++] = root;
    while (qh < qt) {
      int v = queue[qh++];
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue[qt++] = i;
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          queue[qt++] = match[to];
        }
      }
    }
    return -1;
  };

  // Greedy start, then augment from every exposed vertex.
  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    for (int to : adj[v]) {
      if (match[to] == -1) {
        match[v] = to;
        match[to] = v;
        break;
      }
    }
  }
  for (int root = 0; root < n; ++root) {
    if (match[root] != -1 || adj[root].empty()) continue;
    int v = find_path(root);
    while (v != -1) {
      int pv = parent[v];
      int ppv = match[pv];
      match[v] = pv;
      match[pv] = v;
      v = ppv;
    }
  }
  return match;
}

std::vector<int> hopcroft_karp(const std::vector<std::vector<int>>& adj,
                               const std::vector<int>& side) {
  const int n = static_cast<int>(adj.size());
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match(n, -1), dist(n);
  std::vector<int> left;
  for (int v = 0; v < n; ++v) {
    if (side[v] == 0) left.push_back(v);
  }

  auto bfs = [&] {
    std::queue<int> q;
    bool found = false;
    for (int u : left) {
      if (match[u] == -1) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        int mu = match[w];
        if (mu == -1) {
          found = true;
        } else if (dist[mu] == kInf) {
          dist[mu] = dist[u] + 1;
          q.push(mu);
        }
      }
    }
    return found;
  };

  std::vector<std::size_t> it(n);
  auto dfs = [&](auto&& self, int u) -> bool {
    for (; it[u] < adj[u].size(); ++it[u]) {
      int w = adj[u][it[u]];
      int mu = match[w];
      if (mu == -1 || (dist[mu] == dist[u] + 1 && self(self, mu))) {
        match[u] = w;
        match[w] = u;
        ++it[u];
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int u : left) {
      if (match[u] == -1) dfs(dfs, u);
    }
  }
  return match;
}

Matching max_matching(const Instance& inst) {
  std::vector<int> mate = inst.is_smi()
                              ? hopcroft_karp(inst.all_prefs(), inst.sides())
                              : edmonds_matching(inst.all_prefs());
  return matching_from_partners(inst, mate);
}

int max_matching_size(const Instance& inst) { return max_matching(inst).size(); }

}  // namespace almoststable
