#include "almoststable/instance.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <queue>
#include <sstream>

#include "almoststable/error.h"

namespace almoststable {

std::string_view to_string(InstanceKind kind) {
  return kind == InstanceKind::kSmi ? "smi" : "sri";
}

std::vector<int> two_colouring(const std::vector<std::vector<AgentId>>& prefs) {
  const int n = static_cast<int>(prefs.size());
  std::vector<int> side(n, -1);
  std::queue<AgentId> frontier;
  for (AgentId start = 0; start < n; ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    frontier.push(start);
    while (!frontier.empty()) {
      AgentId u = frontier.front();
      frontier.pop();
      for (AgentId v : prefs[u]) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          frontier.push(v);
        } else if (side[v] == side[u]) {
          return {};
        }
      }
    }
  }
  return side;
}

Instance::Instance(InstanceKind kind, std::vector<std::vector<AgentId>> prefs)
    : kind_(kind), n_(static_cast<int>(prefs.size())), prefs_(std::move(prefs)) {
  rank_.assign(static_cast<std::size_t>(n_) * n_, -1);
  long long entries = 0;
  for (AgentId i = 0; i < n_; ++i) {
    const auto& list = prefs_[i];
    max_degree_ = std::max(max_degree_, static_cast<int>(list.size()));
    entries += static_cast<long long>(list.size());
    for (std::size_t pos = 0; pos < list.size(); ++pos) {
      AgentId j = list[pos];
      if (j < 0 || j >= n_) {
        throw Error(ErrorCode::kBadId, "agent " + std::to_string(i + 1) +
                                           " ranks unknown agent " +
                                           std::to_string(j + 1));
      }
      if (j == i) {
        throw Error(ErrorCode::kSelfRanked,
                    "agent " + std::to_string(i + 1) + " ranks itself");
      }
      int& slot = rank_[static_cast<std::size_t>(i) * n_ + j];
      if (slot >= 0) {
        throw Error(ErrorCode::kDuplicateEntry,
                    "agent " + std::to_string(i + 1) + " ranks agent " +
                        std::to_string(j + 1) + " twice");
      }
      slot = static_cast<int>(pos);
    }
  }
  for (AgentId i = 0; i < n_; ++i) {
    for (AgentId j : prefs_[i]) {
      if (rank(j, i) < 0) {
        throw Error(ErrorCode::kAsymmetric,
                    "agent " + std::to_string(i + 1) + " ranks agent " +
                        std::to_string(j + 1) + " but not vice versa");
      }
    }
  }
  edge_count_ = static_cast<int>(entries / 2);
  if (kind_ == InstanceKind::kSmi) {
    sides_ = two_colouring(prefs_);
    if (sides_.empty()) {
      throw Error(ErrorCode::kNotBipartite,
                  "acceptability graph contains an odd cycle");
    }
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

long long parse_int(std::string_view token, int line_no) {
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kMalformed, "line " + std::to_string(line_no) +
                                           ": expected integer, got '" +
                                           std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::optional<InstanceKind> kind;
  long long n = -1;
  std::vector<std::vector<AgentId>> prefs;
  std::vector<bool> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::kMalformed,
                  "line " + std::to_string(line_no) + ": missing ':'");
    }
    std::string_view key = trim(line.substr(0, colon));
    std::string_view rest = trim(line.substr(colon + 1));

    if (key == "kind") {
      if (kind) {
        throw Error(ErrorCode::kMalformed, "duplicate kind line");
      }
      if (rest == "sri") {
        kind = InstanceKind::kSri;
      } else if (rest == "smi") {
        kind = InstanceKind::kSmi;
      } else {
        throw Error(ErrorCode::kMalformed,
                    "unknown kind '" + std::string(rest) + "'");
      }
      continue;
    }
    if (key == "agents") {
      if (n >= 0) throw Error(ErrorCode::kMalformed, "duplicate agents line");
      n = parse_int(rest, line_no);
      if (n < 0) throw Error(ErrorCode::kMalformed, "negative agent count");
      prefs.assign(static_cast<std::size_t>(n), {});
      seen.assign(static_cast<std::size_t>(n), false);
      continue;
    }
    if (!kind || n < 0) {
      throw Error(ErrorCode::kMalformed,
                  "line " + std::to_string(line_no) +
                      ": preference line before kind/agents header");
    }
    long long id = parse_int(key, line_no);
    if (id < 1 || id > n) {
      throw Error(ErrorCode::kBadId, "line " + std::to_string(line_no) +
                                         ": agent id " + std::to_string(id) +
                                         " outside 1.." + std::to_string(n));
    }
    if (seen[id - 1]) {
      throw Error(ErrorCode::kMalformed, "line " + std::to_string(line_no) +
                                             ": second list for agent " +
                                             std::to_string(id));
    }
    seen[id - 1] = true;
    auto& list = prefs[id - 1];
    for (std::string_view token : split_ws(rest)) {
      long long j = parse_int(token, line_no);
      if (j < 1 || j > n) {
        throw Error(ErrorCode::kBadId, "line " + std::to_string(line_no) +
                                           ": agent id " + std::to_string(j) +
                                           " outside 1.." + std::to_string(n));
      }
      list.push_back(static_cast<AgentId>(j - 1));
    }
  }
  if (!kind) throw Error(ErrorCode::kMalformed, "missing kind line");
  if (n < 0) throw Error(ErrorCode::kMalformed, "missing agents line");
  return Instance(*kind, std::move(prefs));
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kMalformed, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string format_instance(const Instance& inst,
                            const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "kind: " << to_string(inst.kind()) << "\n";
  out << "agents: " << inst.size() << "\n";
  const bool named = !names.empty();
  for (AgentId i = 0; i < inst.size(); ++i) {
    if (named) out << "# " << (i + 1) << " = " << names[i] << "\n";
    if (inst.degree(i) == 0) continue;
    out << (i + 1) << ":";
    for (AgentId j : inst.prefs(i)) out << ' ' << (j + 1);
    out << "\n";
  }
  return out.str();
}

}  // namespace almoststable
