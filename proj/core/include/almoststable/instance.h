#ifndef ALMOSTSTABLE_INSTANCE_H_
#define ALMOSTSTABLE_INSTANCE_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace almoststable {

// Agents are 0-based internally. Every text format uses 1-based ids.
using AgentId = int;

enum class InstanceKind { kSri, kSmi };

std::string_view to_string(InstanceKind kind);

// A roommates (SRI) or marriage (SMI) instance with strict, possibly
// incomplete preference lists. Immutable after construction; the constructor
// validates symmetry of acceptability, duplicates, self-ranking, id range and
// (for SMI) bipartiteness, throwing almoststable::Error on violation.
class Instance {
 public:
  Instance() = default;
  Instance(InstanceKind kind, std::vector<std::vector<AgentId>> prefs);

  InstanceKind kind() const { return kind_; }
  bool is_smi() const { return kind_ == InstanceKind::kSmi; }
  int size() const { return n_; }

  std::span<const AgentId> prefs(AgentId i) const { return prefs_[i]; }
  const std::vector<std::vector<AgentId>>& all_prefs() const { return prefs_; }
  int degree(AgentId i) const { return static_cast<int>(prefs_[i].size()); }
  int max_degree() const { return max_degree_; }
  int edge_count() const { return edge_count_; }

  // Position of j in i's list, or -1 when the pair is unacceptable.
  int rank(AgentId i, AgentId j) const {
    return rank_[static_cast<std::size_t>(i) * n_ + j];
  }
  bool acceptable(AgentId i, AgentId j) const { return rank(i, j) >= 0; }
  // True iff i strictly prefers j to k. k < 0 means "unmatched", which is
  // worse than every acceptable agent.
  bool prefers(AgentId i, AgentId j, AgentId k) const {
    if (k < 0) return acceptable(i, j);
    return acceptable(i, j) && rank(i, j) < rank(i, k);
  }

  // 2-colouring of the acceptability graph (SMI only, otherwise empty). In
  // every component the lowest id is on side 0.
  const std::vector<int>& sides() const { return sides_; }

 private:
  InstanceKind kind_ = InstanceKind::kSri;
  int n_ = 0;
  int max_degree_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<AgentId>> prefs_;
  std::vector<int> rank_;
  std::vector<int> sides_;
};

// Tries to 2-colour the acceptability graph of |prefs| (assumed symmetric).
// Returns an empty vector when an odd cycle exists.
std::vector<int> two_colouring(const std::vector<std::vector<AgentId>>& prefs);

// Instance file format:
//   kind: sri|smi
//   agents: N
//   I: J K L ...      (1-based ids, most preferred first)
// '#' starts a comment; a missing agent line means an empty list.
Instance parse_instance(std::string_view text);
Instance read_instance_file(const std::string& path);

// Emits the instance file format. When |names| is non-empty it must have one
// entry per agent; names are written as comment lines ahead of the lists.
std::string format_instance(const Instance& inst,
                            const std::vector<std::string>& names = {});

}  // namespace almoststable

#endif  // ALMOSTSTABLE_INSTANCE_H_
