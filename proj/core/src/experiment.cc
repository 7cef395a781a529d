#include "almoststable/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "almoststable/blocking.h"
#include "almoststable/budgeted_search.h"
#include "almoststable/classic.h"
#include "almoststable/error.h"
#include "almoststable/exact.h"
#include "almoststable/localsearch.h"
#include "almoststable/random_instances.h"

namespace almoststable {

std::string_view to_string(SolverChoice solver) {
  switch (solver) {
    case SolverChoice::kExact: return "exact";
    case SolverChoice::kIlpExport: return "ilp-export";
    case SolverChoice::kApprox: return "approx";
    case SolverChoice::kAuto: return "auto";
  }
  return "auto";
}

SolverChoice parse_solver(std::string_view text) {
  if (text == "exact") return SolverChoice::kExact;
  if (text == "ilp-export" || text == "ilp") return SolverChoice::kIlpExport;
  if (text == "approx") return SolverChoice::kApprox;
  if (text == "auto") return SolverChoice::kAuto;
  throw Error(ErrorCode::kBadConfig, "unknown solver '" + std::string(text) + "'");
}

namespace {

void validate(const ExperimentConfig& cfg) {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::kBadConfig, what); };
  if (cfg.count < 1) bad("count must be at least 1");
  if (cfg.l < 1) bad("l must be at least 1");
  if (cfg.threads < 1) bad("threads must be at least 1");
  if (cfg.kind == InstanceKind::kSmi && cfg.n % 2 != 0) bad("SMI needs even n");
  if (cfg.solver == SolverChoice::kApprox && cfg.mode == IlpMode::kMinimaxMax) {
    bad("the approximation does not support the max-cardinality mode");
  }
  if (cfg.solver == SolverChoice::kIlpExport && cfg.output_path.empty()) {
    bad("ilp-export needs an output path");
  }
  // Surface generator errors before any work starts.
  gen_random(cfg.n, cfg.l, cfg.kind, cfg.base_seed, cfg.sri_scheme);
}

std::string lp_path(const ExperimentConfig& cfg, int index) {
  std::filesystem::path p(cfg.output_path);
  p.replace_extension();
  return p.string() + "_" + std::to_string(index) + ".lp";
}

RunRow solve_row(const ExperimentConfig& cfg, int index) {
  RunRow row;
  row.index = index;
  row.seed = cfg.base_seed + static_cast<std::uint64_t>(index);
  row.n = cfg.n;
  row.l = cfg.l;
  row.kind = cfg.kind;
  row.mode = cfg.mode;
  try {
    Instance inst = gen_random(cfg.n, cfg.l, cfg.kind, row.seed, cfg.sri_scheme);
    const Cardinality card =
        cfg.mode == IlpMode::kMinimax ? Cardinality::kAny : Cardinality::kMaxCard;
    const auto start = std::chrono::steady_clock::now();

    if (cfg.solver == SolverChoice::kIlpExport) {
      std::ofstream out(lp_path(cfg, index));
      out << export_lp(build_model(inst, cfg.mode));
      if (!out) throw Error(ErrorCode::kBadConfig, "cannot write " + lp_path(cfg, index));
      return row;
    }

    Matching m;
    bool optimal = false;
    const bool use_exact =
        cfg.solver == SolverChoice::kExact ||
        (cfg.solver == SolverChoice::kAuto && inst.size() <= cfg.exact_cap);
    if (use_exact) {
      ExactOptions options;
      options.cap = cfg.exact_cap;
      m = solve_exact(inst, Objective::kMinimax, card, options).witness;
      optimal = true;
    } else if (cfg.solver == SolverChoice::kApprox) {
      m = approx_minimax_sri(inst);
    } else {
      BudgetedOptions options;
      options.budget_ms = cfg.budget_ms;
      BudgetedResult r = solve_minimax_budgeted(inst, card, options);
      m = r.witness;
      optimal = r.proven_optimal;
    }
    const auto stop = std::chrono::steady_clock::now();

    BlockingReport report = blocking_report(inst, m);
    row.size = m.size();
    row.max_size = max_matching_size(inst);
    row.stable = report.stable ? 1 : 0;
    row.max_bp = report.max_bp;
    row.total_bp = report.total_bp;
    row.blocking_agents = report.blocking_agents;
    row.optimal = (optimal || report.stable) ? 1 : 0;
    if (cfg.record_timing) {
      row.solve_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
  } catch (const std::exception& e) {
    row.failed = true;
    row.error = e.what();
    row.size = row.max_size = row.stable = row.max_bp = -1;
    row.total_bp = row.blocking_agents = row.optimal = -1;
  }
  return row;
}

}  // namespace

std::vector<RunRow> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  std::vector<RunRow> rows(cfg.count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < cfg.count; i = next++) rows[i] = solve_row(cfg, i);
  };
  const int threads = std::min(cfg.threads, cfg.count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (!cfg.output_path.empty()) {
    std::ofstream out(cfg.output_path, std::ios::binary);
    out << rows_to_csv(rows);
    if (!out) throw Error(ErrorCode::kBadConfig, "cannot write " + cfg.output_path);
  }
  return rows;
}

std::string csv_header() {
  return "index,seed,n,l,kind,mode,size,max_size,stable,max_bp,total_bp,"
         "blocking_agents,optimal,solve_ms";
}

std::string rows_to_csv(const std::vector<RunRow>& rows) {
  std::ostringstream out;
  out << csv_header() << "\n";
  for (const RunRow& r : rows) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.solve_ms);
    out << r.index << ',' << r.seed << ',' << r.n << ',' << r.l << ','
        << to_string(r.kind) << ',' << to_string(r.mode) << ',' << r.size << ','
        << r.max_size << ',' << r.stable << ',' << r.max_bp << ',' << r.total_bp
        << ',' << r.blocking_agents << ',' << r.optimal << ',' << ms << "\n";
  }
  return out.str();
}

Summary summarize(const std::vector<RunRow>& rows) {
  Summary s;
  if (!rows.empty()) {
    s.n = rows.front().n;
    s.l = rows.front().l;
    s.kind = rows.front().kind;
    s.mode = rows.front().mode;
  }
  for (const RunRow& r : rows) {
    if (r.failed || r.max_bp < 0) {
      ++s.failed;
      continue;
    }
    ++s.rows;
    s.proven += r.optimal == 1;
    s.mean_size += r.size;
    s.mean_max_size += r.max_size;
    s.stable_pct += r.stable;
    s.mean_max_bp += r.max_bp;
    s.max_max_bp = std::max(s.max_max_bp, r.max_bp);
    s.mean_solve_ms += r.solve_ms;
  }
  if (s.rows == 0) throw Error(ErrorCode::kEmpty, "no solved rows to summarize");
  s.mean_size /= s.rows;
  s.mean_max_size /= s.rows;
  s.stable_pct = 100.0 * s.stable_pct / s.rows;
  s.mean_max_bp /= s.rows;
  s.mean_solve_ms /= s.rows;
  return s;
}

std::string format_summary_table(const std::vector<Summary>& summaries) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-5s %-4s %-4s %-12s %6s %8s %8s %8s %8s %6s %7s %10s\n",
                "n", "l", "kind", "mode", "rows", "size", "max", "stable", "max-bp",
                "peak", "proven", "ms");
  out << line;
  for (const Summary& s : summaries) {
    std::snprintf(line, sizeof line,
                  "%-5d %-4d %-4s %-12s %6d %8.2f %8.2f %7.2f%% %8.2f %6d %7d %10.2f\n",
                  s.n, s.l, std::string(to_string(s.kind)).c_str(),
                  std::string(to_string(s.mode)).c_str(), s.rows, s.mean_size,
                  s.mean_max_size, s.stable_pct, s.mean_max_bp, s.max_max_bp,
                  s.proven, s.mean_solve_ms);
    out << line;
  }
  return out.str();
}

}  // namespace almoststable
