#include "almoststable/random_instances.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "almoststable/error.h"

namespace almoststable {

namespace {

[[noreturn]] void bad_config(const std::string& what) {
  throw Error(ErrorCode::kBadConfig, what);
}

Instance gen_smi(int n, int l, std::mt19937_64& rng) {
  if (n % 2 != 0) bad_config("SMI instances need an even agent count");
  const int half = n / 2;
  if (l > half) bad_config("list length exceeds the other side's size");
  std::vector<std::vector<AgentId>> prefs(n);
  std::vector<AgentId> other(half);
  std::iota(other.begin(), other.end(), half);
  for (AgentId a = 0; a < half; ++a) {
    std::shuffle(other.begin(), other.end(), rng);
    prefs[a].assign(other.begin(), other.begin() + l);
    for (AgentId b : prefs[a]) prefs[b].push_back(a);
  }
  for (AgentId b = half; b < n; ++b) std::shuffle(prefs[b].begin(), prefs[b].end(), rng);
  return Instance(InstanceKind::kSmi, std::move(prefs));
}

std::vector<std::vector<char>> capped_graph(int n, int l, std::mt19937_64& rng) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<int> degree(n, 0);
  std::vector<AgentId> order(n), open;
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (AgentId a : order) {
    open.clear();
    for (AgentId b = 0; b < n; ++b) {
      if (b != a && degree[b] < l && !adj[a][b]) open.push_back(b);
    }
    std::shuffle(open.begin(), open.end(), rng);
    for (AgentId b : open) {
      if (degree[a] >= l) break;
      adj[a][b] = adj[b][a] = 1;
      ++degree[a];
      ++degree[b];
    }
  }
  return adj;
}

std::vector<std::vector<char>> closure_graph(int n, int l, std::mt19937_64& rng) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<AgentId> others;
  for (AgentId a = 0; a < n; ++a) {
    others.clear();
    for (AgentId b = 0; b < n; ++b) {
      if (b != a) others.push_back(b);
    }
    // Partial Fisher-Yates: the first l entries are a uniform l-subset.
    for (int t = 0; t < l; ++t) {
      std::uniform_int_distribution<int> pick(t, n - 2);
      std::swap(others[t], others[pick(rng)]);
      adj[a][others[t]] = adj[others[t]][a] = 1;
    }
  }
  return adj;
}

Instance gen_sri(int n, int l, SriScheme scheme, std::mt19937_64& rng) {
  if (l >= n) bad_config("list length must be below the agent count");
  auto adj = scheme == SriScheme::kDegreeCapped ? capped_graph(n, l, rng)
                                                : closure_graph(n, l, rng);
  std::vector<std::vector<AgentId>> prefs(n);
  for (AgentId a = 0; a < n; ++a) {
    for (AgentId b = 0; b < n; ++b) {
      if (adj[a][b]) prefs[a].push_back(b);
    }
    std::shuffle(prefs[a].begin(), prefs[a].end(), rng);
  }
  return Instance(InstanceKind::kSri, std::move(prefs));
}

}  // namespace

std::string_view to_string(SriScheme scheme) {
  return scheme == SriScheme::kDegreeCapped ? "capped" : "closure";
}

SriScheme parse_sri_scheme(std::string_view text) {
  if (text == "capped") return SriScheme::kDegreeCapped;
  if (text == "closure") return SriScheme::kProposalClosure;
  bad_config("unknown SRI scheme '" + std::string(text) + "'");
}

Instance gen_random(int n, int l, InstanceKind kind, std::uint64_t seed,
                    SriScheme scheme) {
  if (n < 1) bad_config("agent count must be positive");
  if (l < 1) bad_config("list length must be positive");
  std::mt19937_64 rng(seed);
  return kind == InstanceKind::kSmi ? gen_smi(n, l, rng) : gen_sri(n, l, scheme, rng);
}

}  // namespace almoststable
