#ifndef ALMOSTSTABLE_CONSTRUCTIONS_H_
#define ALMOSTSTABLE_CONSTRUCTIONS_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "almoststable/instance.h"
#include "almoststable/matching.h"
#include "almoststable/sat.h"

namespace almoststable {

// Accumulates named agents and their lists before validation.
class InstanceBuilder {
 public:
  AgentId add_agent(std::string name);
  void append(AgentId agent, AgentId entry) { prefs_[agent].push_back(entry); }
  void set_list(AgentId agent, std::vector<AgentId> list) {
    prefs_[agent] = std::move(list);
  }
  int size() const { return static_cast<int>(prefs_.size()); }
  const std::vector<AgentId>& list(AgentId agent) const { return prefs_[agent]; }
  const std::vector<std::string>& names() const { return names_; }
  Instance build(InstanceKind kind) const { return Instance(kind, prefs_); }

 private:
  std::vector<std::vector<AgentId>> prefs_;
  std::vector<std::string> names_;
};

// Complete lists on 3^k agents arranged as nested preference cycles: at each
// level a block splits into three sub-blocks B0, B1, B2; members of B0 append
// B1 then B2, members of B1 append B2 then B0, members of B2 append B0 then
// B1, each sub-block in increasing id order. Its minimax value is k.
// Throws Error(kBadK) unless 1 <= k <= 7.
Instance build_prop34(int k);
// Lists only, for a block of 3^k local indices.
std::vector<std::vector<int>> nested_cycle_lists(int k);

// Pairs {a1,a2}, {a3,a4}, ..., {a_{3^k-2}, a_{3^k-1}}; max_bp <= k.
Matching witness_prop34(int k);

// SMI instance on 2(k+1) agents a_j = 2j-1, a'_j = 2j (1-based). For j <= k,
// a_j ranks a_{k+1} then a'_j; a_{k+1} ranks a_1..a_k then a'_{k+1}; each a'_j
// ranks only a_j. The perfect matching is the only maximum matching and it
// forces k blocking pairs on a_{k+1}. Throws Error(kBadK) for k < 0.
Instance build_prop36(int k);

// Adds 3^omega - 1 agents wired as build_prop34(omega) with |target| as its
// first agent. The target's current list is kept in front of the gadget
// agents. Returns the new agents in order. Throws Error(kBadOmega) for
// omega < 2.
std::vector<AgentId> attach_forcing_gadget(InstanceBuilder& builder,
                                           AgentId target, int omega);

enum class ReductionKind { kSri, kSmi };

// A reduced instance plus the bookkeeping that links it to the formula.
struct ReductionOutput {
  ReductionKind kind = ReductionKind::kSri;
  SatFormula formula;
  Instance instance;
  std::vector<std::string> agent_names;
  // (clause, slot), both 0-based -> variable-gadget agent the slot talks to.
  std::map<std::pair<int, int>, AgentId> literal_links;
  // Per variable. SRI: {v^T, v^F, v^1, v^2}. SMI: {x1..x4, y1..y4}.
  std::vector<std::vector<AgentId>> variable_agents;
  // Per clause. SRI: {x^1, x^2, x^3}. SMI: {c1, c2, c3, p1, p2, p3, q, z}.
  std::vector<std::vector<AgentId>> clause_agents;
  // SRI only: the 2n forcing gadgets, on v^1 then v^2 of each variable.
  std::vector<std::vector<AgentId>> forcing_gadgets;
};

// Roommates instance on 20n + 3m agents with lists of length at most 10. It
// has a matching with max_bp <= 1 iff the formula is satisfiable. Throws
// Error(kInvalidFormula) unless the formula is (2,2)-E3-SAT.
ReductionOutput reduce_sat_to_sri(const SatFormula& f);

// Marriage instance on 8(n + m) agents with lists of length at most 3. It
// has a perfect matching with max_bp <= 1 iff the formula is satisfiable.
ReductionOutput reduce_sat_to_smi(const SatFormula& f);

// Matchings built from a satisfying assignment; max_bp <= 1. Throw
// Error(kUnsatisfyingAssignment) if some clause is false.
Matching witness_from_assignment_sri(const ReductionOutput& r,
                                     const Assignment& a);
Matching witness_from_assignment_smi(const ReductionOutput& r,
                                     const Assignment& a);

// Reads the assignment off the variable gadgets: {v^T, v^1} means true,
// {v^F, v^1} false. Throws Error(kPrecondition) if max_bp > 1 and
// Error(kMalformedWitness) if a gadget matches neither pattern.
Assignment extract_assignment_sri(const ReductionOutput& r, const Matching& m);

}  // namespace almoststable

#endif  // ALMOSTSTABLE_CONSTRUCTIONS_H_
