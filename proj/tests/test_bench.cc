#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "almoststable/blocking.h"
#include "almoststable/classic.h"
#include "almoststable/experiment.h"
#include "almoststable/random_instances.h"
#include "gtest_helpers.h"

namespace almoststable {
namespace {

using testing::code_of;

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("almoststable_" + name);
}

TEST(GenRandom, MarriageListLengths) {
  Instance inst = gen_random(50, 5, InstanceKind::kSmi, 3);
  EXPECT_TRUE(inst.is_smi());
  for (AgentId i = 0; i < 25; ++i) EXPECT_EQ(inst.degree(i), 5);
  int total = 0;
  for (AgentId i = 25; i < 50; ++i) total += inst.degree(i);
  EXPECT_EQ(total, 125);
}

TEST(GenRandom, Deterministic) {
  for (InstanceKind kind : {InstanceKind::kSri, InstanceKind::kSmi}) {
    EXPECT_EQ(gen_random(20, 4, kind, 9).all_prefs(), gen_random(20, 4, kind, 9).all_prefs());
  }
  EXPECT_NE(gen_random(20, 4, InstanceKind::kSri, 9).all_prefs(),
            gen_random(20, 4, InstanceKind::kSri, 10).all_prefs());
}

TEST(GenRandom, CompleteBipartite) {
  Instance inst = gen_random(50, 25, InstanceKind::kSmi, 1);
  for (AgentId i = 0; i < 50; ++i) EXPECT_EQ(inst.degree(i), 25);
  Matching m = gale_shapley(inst);
  EXPECT_EQ(m.size(), 25);
  EXPECT_TRUE(blocking_report(inst, m).stable);
}

TEST(GenRandom, RoommatesCappedDegrees) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst = gen_random(40, 6, InstanceKind::kSri, seed);
    int exact = 0;
    for (AgentId i = 0; i < 40; ++i) {
      EXPECT_LE(inst.degree(i), 6);
      exact += inst.degree(i) == 6;
    }
    EXPECT_GE(exact, 36);
  }
}

TEST(GenRandom, RoommatesProposalClosure) {
  Instance inst = gen_random(40, 6, InstanceKind::kSri, 2, SriScheme::kProposalClosure);
  for (AgentId i = 0; i < 40; ++i) EXPECT_GE(inst.degree(i), 6);
  EXPECT_GT(inst.edge_count(), 40 * 6 / 2);
  EXPECT_EQ(parse_sri_scheme("closure"), SriScheme::kProposalClosure);
  EXPECT_EQ(code_of([] { parse_sri_scheme("regular"); }), ErrorCode::kBadConfig);
}

TEST(GenRandom, BadConfig) {
  EXPECT_EQ(code_of([] { gen_random(7, 2, InstanceKind::kSmi, 0); }), ErrorCode::kBadConfig);
  EXPECT_EQ(code_of([] { gen_random(10, 6, InstanceKind::kSmi, 0); }), ErrorCode::kBadConfig);
  EXPECT_EQ(code_of([] { gen_random(10, 10, InstanceKind::kSri, 0); }), ErrorCode::kBadConfig);
  EXPECT_EQ(code_of([] { gen_random(10, 0, InstanceKind::kSri, 0); }), ErrorCode::kBadConfig);
}

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.n = 12;
  cfg.l = 3;
  cfg.kind = InstanceKind::kSri;
  cfg.mode = IlpMode::kMinimax;
  cfg.count = 20;
  cfg.base_seed = 100;
  cfg.solver = SolverChoice::kExact;
  cfg.record_timing = false;
  return cfg;
}

TEST(RunExperiment, DeterministicCsv) {
  ExperimentConfig cfg = small_config();
  cfg.output_path = temp_path("a.csv").string();
  run_experiment(cfg);
  std::string first = slurp(cfg.output_path);
  cfg.threads = 3;
  cfg.output_path = temp_path("b.csv").string();
  run_experiment(cfg);
  EXPECT_EQ(first, slurp(cfg.output_path));
  EXPECT_EQ(first.substr(0, first.find('\n')), csv_header());
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 21);
}

TEST(RunExperiment, ExactRowsAreOptimalAndConsistent) {
  ExperimentConfig cfg = small_config();
  std::vector<RunRow> rows = run_experiment(cfg);
  ExperimentConfig approx = cfg;
  approx.solver = SolverChoice::kApprox;
  std::vector<RunRow> approx_rows = run_experiment(approx);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_FALSE(rows[i].failed) << rows[i].error;
    EXPECT_EQ(rows[i].optimal, 1);
    EXPECT_EQ(rows[i].seed, cfg.base_seed + i);
    EXPECT_EQ(rows[i].stable, rows[i].max_bp == 0);
    EXPECT_GE(approx_rows[i].max_bp, rows[i].max_bp);
  }
  ExperimentConfig max_mode = cfg;
  max_mode.mode = IlpMode::kMinimaxMax;
  std::vector<RunRow> max_rows = run_experiment(max_mode);
  Summary a = summarize(rows), b = summarize(max_rows);
  EXPECT_LE(a.mean_max_bp, b.mean_max_bp);
  for (const RunRow& r : max_rows) EXPECT_EQ(r.size, r.max_size);
}

TEST(RunExperiment, IlpExportWritesFiles) {
  ExperimentConfig cfg = small_config();
  cfg.count = 2;
  cfg.solver = SolverChoice::kIlpExport;
  cfg.output_path = temp_path("ilp.csv").string();
  std::vector<RunRow> rows = run_experiment(cfg);
  EXPECT_EQ(rows[0].max_bp, -1);
  EXPECT_TRUE(std::filesystem::exists(temp_path("ilp_0.lp")));
  EXPECT_TRUE(std::filesystem::exists(temp_path("ilp_1.lp")));
}

TEST(RunExperiment, BadConfig) {
  ExperimentConfig cfg = small_config();
  cfg.solver = SolverChoice::kApprox;
  cfg.mode = IlpMode::kMinimaxMax;
  EXPECT_EQ(code_of([&] { run_experiment(cfg); }), ErrorCode::kBadConfig);
  cfg = small_config();
  cfg.solver = SolverChoice::kIlpExport;
  EXPECT_EQ(code_of([&] { run_experiment(cfg); }), ErrorCode::kBadConfig);
  cfg = small_config();
  cfg.count = 0;
  EXPECT_EQ(code_of([&] { run_experiment(cfg); }), ErrorCode::kBadConfig);
}

TEST(Summarize, Arithmetic) {
  std::vector<RunRow> rows(2);
  rows[0].max_bp = 0;
  rows[0].stable = 1;
  rows[1].max_bp = 2;
  rows[1].stable = 0;
  Summary s = summarize(rows);
  EXPECT_DOUBLE_EQ(s.mean_max_bp, 1.0);
  EXPECT_EQ(s.max_max_bp, 2);
  EXPECT_DOUBLE_EQ(s.stable_pct, 50.0);
}

TEST(Summarize, AllStable) {
  std::vector<RunRow> rows(3);
  for (auto& r : rows) {
    r.stable = 1;
    r.max_bp = 0;
  }
  Summary s = summarize(rows);
  EXPECT_DOUBLE_EQ(s.stable_pct, 100.0);
  EXPECT_DOUBLE_EQ(s.mean_max_bp, 0.0);
  EXPECT_NE(format_summary_table({s}).find("100.00%"), std::string::npos);
}

TEST(Summarize, Empty) {
  EXPECT_EQ(code_of([] { summarize({}); }), ErrorCode::kEmpty);
}

}  // namespace
}  // namespace almoststable
