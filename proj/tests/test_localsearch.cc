#include <gtest/gtest.h>

#include <random>

#include "almoststable/blocking.h"
#include "almoststable/constructions.h"
#include "almoststable/localsearch.h"
#include "almoststable/random_instances.h"
#include "gtest_helpers.h"
#include "test_util.h"

namespace almoststable {
namespace {

using testing::code_of;

CutState all_on_one_side(const Instance& inst) {
  CutState cut;
  cut.side.assign(inst.size(), 0);
  cut.cross.assign(inst.size(), 0);
  return cut;
}

TEST(BalancedCut, SingleEdge) {
  Instance inst = parse_instance("kind: sri\nagents: 2\n1: 2\n2: 1\n");
  CutState cut = balanced_cut(inst);
  EXPECT_NE(cut.side[0], cut.side[1]);
  EXPECT_EQ(cut.cross, (std::vector<int>{1, 1}));
  EXPECT_EQ(potential(inst, cut), 1);
}

TEST(BalancedCut, Triangle) {
  Instance inst = build_prop34(1);
  CutState cut = balanced_cut(inst);
  for (int c : cut.cross) EXPECT_GE(c, 1);
  EXPECT_EQ(potential(inst, cut), 2);
}

TEST(BalancedCut, EmptyListsNeverFlip) {
  Instance inst = parse_instance("kind: sri\nagents: 4\n1: 2\n2: 1\n");
  CutState cut = balanced_cut(inst);
  EXPECT_EQ(cut.cross[2], 0);
  EXPECT_EQ(cut.cross[3], 0);
  EXPECT_EQ(cut.flips, 1);
}

TEST(Potential, AllOnOneSide) {
  Instance inst = build_prop34(2);
  EXPECT_EQ(potential(inst, all_on_one_side(inst)), 0);
}

TEST(Potential, InconsistentCrossCounts) {
  Instance inst = build_prop34(1);
  CutState cut = all_on_one_side(inst);
  cut.cross[0] = 2;
  EXPECT_EQ(code_of([&] { potential(inst, cut); }), ErrorCode::kInconsistentCut);
}

TEST(CutSubinstance, KeepsOnlyCrossingPairsAndIsBipartite) {
  Instance inst = build_prop34(2);
  CutState cut = balanced_cut(inst);
  Instance sub = cut_subinstance(inst, cut);
  EXPECT_TRUE(sub.is_smi());
  EXPECT_EQ(sub.edge_count(), potential(inst, cut));
  for (AgentId i = 0; i < sub.size(); ++i) {
    for (AgentId j : sub.prefs(i)) EXPECT_NE(cut.side[i], cut.side[j]);
  }
}

TEST(Approx, SolvableReturnsStable) {
  Instance inst = parse_instance("kind: sri\nagents: 4\n1: 2 3\n2: 1 4\n3: 4 1\n4: 3 2\n");
  ApproxResult r = approx_minimax_sri_detailed(inst);
  EXPECT_TRUE(r.solvable);
  EXPECT_TRUE(blocking_report(inst, r.matching).stable);
}

TEST(Approx, NestedCyclesPerAgentBound) {
  for (int k : {1, 2}) {
    Instance inst = build_prop34(k);
    BlockingReport r = blocking_report(inst, approx_minimax_sri(inst));
    for (AgentId i = 0; i < inst.size(); ++i) {
      EXPECT_LE(r.per_agent[i], (inst.degree(i) + 1) / 2);
    }
  }
}

TEST(Approx, GuaranteesOnRandomInstances) {
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 10 + trial % 40;
    const int l = 1 + trial % 9;
    Instance inst = gen_random(n, l, InstanceKind::kSri, 500 + trial);
    ApproxResult r = approx_minimax_sri_detailed(inst);
    BlockingReport rep = blocking_report(inst, r.matching);
    for (AgentId i = 0; i < n; ++i) {
      ASSERT_LE(rep.per_agent[i], (inst.degree(i) + 1) / 2);
    }
    if (r.solvable) continue;
    const auto& trace = r.cut.potential_trace;
    for (std::size_t t = 1; t < trace.size(); ++t) ASSERT_LT(trace[t - 1], trace[t]);
    ASSERT_LE(2 * r.cut.flips, static_cast<std::int64_t>(n) * inst.max_degree());
    ASSERT_EQ(potential(inst, r.cut), trace.empty() ? 0 : trace.back());
  }
}

}  // namespace
}  // namespace almoststable
