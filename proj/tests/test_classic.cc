#include <gtest/gtest.h>

#include <random>

#include "almoststable/blocking.h"
#include "almoststable/classic.h"
#include "almoststable/instance.h"
#include "gtest_helpers.h"
#include "test_util.h"

namespace almoststable {
namespace {

using testing::code_of;

TEST(GaleShapley, StableOnRandomMarriage) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = testing::random_smi(10, 0.6, rng);
    for (int side : {0, 1}) {
      Matching m = gale_shapley(inst, side);
      EXPECT_TRUE(blocking_report(inst, m).stable);
    }
  }
}

TEST(GaleShapley, ProposerOptimal) {
  // Two men, two women, opposite first choices.
  Instance inst = parse_instance("kind: smi\nagents: 4\n1: 3 4\n2: 4 3\n3: 2 1\n4: 1 2\n");
  EXPECT_EQ(gale_shapley(inst, 0).pairs(), testing::pairs1({{1, 3}, {2, 4}}));
  EXPECT_EQ(gale_shapley(inst, 1).pairs(), testing::pairs1({{1, 4}, {2, 3}}));
}

TEST(GaleShapley, RejectsRoommates) {
  Instance inst = parse_instance("kind: sri\nagents: 2\n1: 2\n2: 1\n");
  EXPECT_EQ(code_of([&] { gale_shapley(inst); }), ErrorCode::kNotSmi);
}

TEST(Irving, TriangleAndEdgeHasNoStableMatching) {
  Instance inst = parse_instance("kind: sri\nagents: 5\n1: 2 3\n2: 3 1\n3: 1 2\n4: 5\n5: 4\n");
  EXPECT_FALSE(irving(inst).has_value());
}

TEST(Irving, AgreesWithOracleOnSolvability) {
  std::mt19937_64 rng(12);
  int solvable = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 3 + trial % 6;
    Instance inst = testing::random_sri(n, 0.4 + 0.1 * (trial % 5), rng);
    auto m = irving(inst);
    ASSERT_EQ(m.has_value(), testing::oracle_solvable(inst)) << format_instance(inst);
    if (m) {
      ++solvable;
      ASSERT_TRUE(blocking_report(inst, *m).stable) << format_instance(inst);
    }
  }
  EXPECT_GT(solvable, 100);
}

TEST(Irving, CompleteListsOnEightAgents) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = testing::random_sri(8, 1.0, rng);
    auto m = irving(inst);
    ASSERT_EQ(m.has_value(), testing::oracle_solvable(inst));
    if (m) {
      ASSERT_TRUE(blocking_report(inst, *m).stable);
    }
  }
}

TEST(MaxMatching, AgreesWithOracle) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 9;
    Instance inst = trial % 2 ? testing::random_sri(n, 0.35, rng)
                              : testing::random_smi(n, 0.5, rng);
    Matching m = max_matching(inst);
    ASSERT_EQ(m.size(), testing::oracle_max_size(inst));
    ASSERT_EQ(max_matching_size(inst), m.size());
    for (auto [a, b] : m.pairs()) ASSERT_TRUE(inst.acceptable(a, b));
  }
}

TEST(MaxMatching, Degree2AgreesWithOracle) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 400; ++trial) {
    Instance inst = testing::random_deg2(2 + trial % 11, trial % 2, rng);
    Matching m = max_matching_deg2(inst);
    ASSERT_EQ(m.size(), testing::oracle_max_size(inst));
  }
}

TEST(MaxMatching, Degree2RejectsDegreeThree) {
  Instance inst = parse_instance("kind: sri\nagents: 4\n1: 2 3 4\n2: 1\n3: 1\n4: 1\n");
  EXPECT_EQ(code_of([&] { max_matching_deg2(inst); }), ErrorCode::kDegreeExceeded);
}

TEST(MaxMatching, OddCycleBlossom) {
  // A 5-cycle with a pendant: the blossom must be contracted to find size 3.
  Instance inst = parse_instance(
      "kind: sri\nagents: 6\n1: 2 5\n2: 1 3\n3: 2 4\n4: 3 5\n5: 4 1 6\n6: 5\n");
  EXPECT_EQ(max_matching(inst).size(), 3);
}

}  // namespace
}  // namespace almoststable
