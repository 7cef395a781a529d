#ifndef ALMOSTSTABLE_EXPERIMENT_H_
#define ALMOSTSTABLE_EXPERIMENT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "almoststable/ilp.h"
#include "almoststable/instance.h"
#include "almoststable/random_instances.h"

namespace almoststable {

enum class SolverChoice { kExact, kIlpExport, kApprox, kAuto };
std::string_view to_string(SolverChoice solver);
SolverChoice parse_solver(std::string_view text);

struct ExperimentConfig {
  int n = 50;
  int l = 5;
  InstanceKind kind = InstanceKind::kSri;
  SriScheme sri_scheme = SriScheme::kDegreeCapped;
  IlpMode mode = IlpMode::kMinimax;  // kMinimaxMax restricts to max matchings
  int count = 1;
  std::uint64_t base_seed = 0;  // instance i uses base_seed + i
  SolverChoice solver = SolverChoice::kAuto;
  std::string output_path;      // CSV; empty means none
  std::int64_t budget_ms = 10000;  // per instance, for the large-n search
  int exact_cap = 24;              // kAuto uses the exact solver up to here
  int threads = 1;
  bool record_timing = true;  // false writes solve_ms = 0 for diffable CSVs
};

// One instance of an experiment. Failed rows carry -1 in every measured
// column and the error text in |error|.
struct RunRow {
  int index = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int l = 0;
  InstanceKind kind = InstanceKind::kSri;
  IlpMode mode = IlpMode::kMinimax;
  int size = -1;
  int max_size = -1;
  int stable = -1;
  int max_bp = -1;
  int total_bp = -1;
  int blocking_agents = -1;
  int optimal = -1;  // 1 when max_bp is a proven optimum
  double solve_ms = 0;
  bool failed = false;
  std::string error;
};

// Validates the config (Error(kBadConfig)), solves every instance and, when
// output_path is set, writes the CSV. Rows are ordered by index whatever the
// thread count. kIlpExport writes <output stem>_<index>.lp per instance and
// leaves the measured columns at -1.
std::vector<RunRow> run_experiment(const ExperimentConfig& cfg);

std::string csv_header();
std::string rows_to_csv(const std::vector<RunRow>& rows);

struct Summary {
  int n = 0;
  int l = 0;
  InstanceKind kind = InstanceKind::kSri;
  IlpMode mode = IlpMode::kMinimax;
  int rows = 0;
  int failed = 0;
  int proven = 0;
  double mean_size = 0;
  double mean_max_size = 0;
  double stable_pct = 0;
  double mean_max_bp = 0;
  int max_max_bp = 0;
  double mean_solve_ms = 0;
};

// Aggregates over the rows that did not fail. Throws Error(kEmpty) if there
// are none.
Summary summarize(const std::vector<RunRow>& rows);

// Aligned text table, one line per summary.
std::string format_summary_table(const std::vector<Summary>& summaries);

}  // namespace almoststable

#endif  // ALMOSTSTABLE_EXPERIMENT_H_
