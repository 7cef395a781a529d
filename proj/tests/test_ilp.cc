#include <gtest/gtest.h>

#include <random>

#include "almoststable/blocking.h"
#include "almoststable/constructions.h"
#include "almoststable/exact.h"
#include "almoststable/ilp.h"
#include "gtest_helpers.h"
#include "test_util.h"

namespace almoststable {
namespace {

using testing::code_of;

const char* kTriangleAndEdge =
    "kind: sri\nagents: 5\n1: 2 3\n2: 3 1\n3: 1 2\n4: 5\n5: 4\n";

int count_rows(const IlpModel& model, char prefix) {
  int count = 0;
  for (const auto& row : model.rows) count += row.name[0] == prefix;
  return count;
}

TEST(BuildModel, TriangleAndEdgeCounts) {
  IlpModel model = build_model(parse_instance(kTriangleAndEdge), IlpMode::kMinimax);
  EXPECT_EQ(model.pairs.size(), 4u);
  EXPECT_EQ(model.variables.size(), 9u);
  EXPECT_EQ(count_rows(model, 'm'), 5);
  EXPECT_EQ(count_rows(model, 's'), 4);
  EXPECT_EQ(count_rows(model, 'c'), 5);
  EXPECT_FALSE(model.maximize);
}

TEST(BuildModel, MaxCardinalityWeight) {
  IlpModel model = build_model(build_prop36(1), IlpMode::kMinimaxMax);
  EXPECT_EQ(model.weight, 5);
  EXPECT_TRUE(model.maximize);
  std::string lp = export_lp(model);
  EXPECT_NE(lp.find("obj: 5 x_1_2 + 5 x_1_3 + 5 x_3_4 - r"), std::string::npos) << lp;
}

TEST(BuildModel, EmptyListAgent) {
  IlpModel model = build_model(parse_instance("kind: sri\nagents: 3\n1: 2\n2: 1\n"),
                               IlpMode::kMinimax);
  EXPECT_EQ(count_rows(model, 'm'), 3);
  EXPECT_EQ(count_rows(model, 'c'), 3);
  EXPECT_EQ(model.pairs.size(), 1u);
}

TEST(ExportLp, CapRowAndDeterminism) {
  IlpModel model = build_model(parse_instance(kTriangleAndEdge), IlpMode::kMinimax);
  std::string lp = export_lp(model);
  EXPECT_NE(lp.find(" c1: b_1_2 + b_1_3 - r <= 0\n"), std::string::npos) << lp;
  EXPECT_NE(lp.find(" s1_2: 2 x_1_2 + x_2_3 + b_1_2 >= 1\n"), std::string::npos) << lp;
  EXPECT_NE(lp.find(" 0 <= r <= 2\n"), std::string::npos);
  EXPECT_EQ(lp, export_lp(model));
  EXPECT_EQ(lp.rfind("End\n"), lp.size() - 4);
}

TEST(VariableMap, ListsPairs) {
  IlpModel model = build_model(parse_instance(kTriangleAndEdge), IlpMode::kMinimax);
  std::string json = variable_map_json(model);
  EXPECT_NE(json.find("\"x_4_5\""), std::string::npos);
  EXPECT_NE(json.find("\"b_1_3\""), std::string::npos);
}

TEST(CheckSolution, ExactWitnessSatisfies) {
  Instance inst = parse_instance(kTriangleAndEdge);
  IlpModel model = build_model(inst, IlpMode::kMinimax);
  ExactResult r = solve_exact(inst, Objective::kMinimax, Cardinality::kAny);
  IlpAssignment a = assignment_from_matching(inst, r.witness);
  EXPECT_EQ(a.at("r"), 1);
  EXPECT_TRUE(check_solution(model, a).satisfied);
  EXPECT_EQ(objective_value(model, a), 1);
}

TEST(CheckSolution, EmptyMatchingViolates) {
  Instance inst = parse_instance(kTriangleAndEdge);
  IlpModel model = build_model(inst, IlpMode::kMinimax);
  IlpAssignment a;
  for (const auto& v : model.variables) a[v.name] = 0;
  IlpCheck check = check_solution(model, a);
  EXPECT_FALSE(check.satisfied);
  EXPECT_EQ(check.violated.size(), 4u);
}

TEST(CheckSolution, StableMatchingSatisfiesWithZero) {
  Instance inst = parse_instance("kind: sri\nagents: 4\n1: 2 3\n2: 1 4\n3: 4 1\n4: 3 2\n");
  IlpModel model = build_model(inst, IlpMode::kMinimax);
  IlpAssignment a = assignment_from_matching(inst, build_matching(inst, testing::pairs1({{1, 2}, {3, 4}})));
  EXPECT_EQ(a.at("r"), 0);
  EXPECT_TRUE(check_solution(model, a).satisfied);
}

TEST(CheckSolution, MissingVariableAndBounds) {
  Instance inst = parse_instance(kTriangleAndEdge);
  IlpModel model = build_model(inst, IlpMode::kMinimax);
  EXPECT_EQ(code_of([&] { check_solution(model, IlpAssignment{}); }),
            ErrorCode::kMissingVariable);
  IlpAssignment a = assignment_from_matching(inst, Matching(5));
  a["x_1_2"] = 2;
  IlpCheck check = check_solution(model, a);
  EXPECT_FALSE(check.satisfied);
  EXPECT_EQ(check.violated.back(), "bound:x_1_2");
}

// Assignment for a partner array with b set on exactly the blocking pairs,
// computed from the lists rather than the library.
IlpAssignment encode(const Instance& inst, const IlpModel& model,
                     const std::vector<int>& partner) {
  IlpAssignment a;
  std::vector<int> per(inst.size(), 0);
  for (const auto& p : model.pairs) {
    auto [i, j] = p.pair;
    const bool blocking = partner[i] != j && testing::wants(inst, i, j, partner[i]) &&
                          testing::wants(inst, j, i, partner[j]);
    a[p.x] = partner[i] == j;
    a[p.b] = blocking;
    per[i] += blocking;
    per[j] += blocking;
  }
  a["r"] = per.empty() ? 0 : *std::max_element(per.begin(), per.end());
  return a;
}

// Smallest r of a feasible model assignment over all matchings.
int brute_force_min_r(const Instance& inst, IlpMode mode) {
  IlpModel model = build_model(inst, mode);
  const int required = mode == IlpMode::kMinimaxMax ? testing::oracle_max_size(inst) : 0;
  int best = -1;
  testing::for_each_matching(inst, [&](const std::vector<int>& p) {
    int size = 0;
    for (int i = 0; i < inst.size(); ++i) size += p[i] > i;
    if (size < required) return;
    IlpAssignment a = encode(inst, model, p);
    EXPECT_TRUE(check_solution(model, a).satisfied);
    for (const auto& pv : model.pairs) {
      if (a[pv.b] == 0) continue;
      a[pv.b] = 0;
      EXPECT_FALSE(check_solution(model, a).satisfied);
      a[pv.b] = 1;
    }
    if (best < 0 || a.at("r") < best) best = a.at("r");
  });
  return best;
}

TEST(IlpModel, MinimumRMatchesOracle) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 7;
    Instance inst = trial % 2 ? testing::random_sri(n, 0.6, rng)
                              : testing::random_smi(n, 0.6, rng);
    ASSERT_EQ(brute_force_min_r(inst, IlpMode::kMinimax), testing::oracle_optimum(inst, 0, false));
    ASSERT_EQ(brute_force_min_r(inst, IlpMode::kMinimaxMax), testing::oracle_optimum(inst, 0, true));
  }
}

TEST(IlpMode, Names) {
  EXPECT_EQ(parse_ilp_mode("minimax-max"), IlpMode::kMinimaxMax);
  EXPECT_EQ(to_string(IlpMode::kMinimax), "minimax");
}

}  // namespace
}  // namespace almoststable
