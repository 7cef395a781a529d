#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "almoststable/blocking.h"
#include "almoststable/budgeted_search.h"
#include "almoststable/classic.h"
#include "almoststable/constructions.h"
#include "almoststable/error.h"
#include "almoststable/exact.h"
#include "almoststable/experiment.h"
#include "almoststable/ilp.h"
#include "almoststable/localsearch.h"
#include "almoststable/random_instances.h"
#include "almoststable/result_io.h"
#include "almoststable/sat.h"
#include "almoststable/shortlist.h"
#include "json.hpp"

namespace almoststable::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMalformed, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::kBadConfig, "cannot write " + path);
}

InstanceKind parse_kind(const std::string& text) {
  if (text == "sri") return InstanceKind::kSri;
  if (text == "smi") return InstanceKind::kSmi;
  throw Error(ErrorCode::kBadConfig, "kind must be sri or smi");
}

int ceil_half(int d) { return (d + 1) / 2; }

struct SolveArgs {
  std::string instance;
  std::string objective = "minimax";
  std::string cardinality = "any";
  std::string method = "auto";
  int cap = 24;
  bool force = false;
  std::int64_t budget_ms = 10000;
};

// Picks the solver for `solve`: the linear-time short-list algorithms when
// they apply, the exact search up to the cap, the budgeted search beyond it.
int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  Instance inst = read_instance_file(a.instance);
  const Objective objective = parse_objective(a.objective);
  const Cardinality card = parse_cardinality(a.cardinality);
  ExactOptions options{a.cap, a.force};

  std::string method = a.method;
  if (method == "auto") {
    const bool minimax = objective == Objective::kMinimax;
    if (minimax && inst.max_degree() <= 2 &&
        (card == Cardinality::kAny ||
         (card == Cardinality::kMaxCard && inst.is_smi()))) {
      method = "shortlist";
    } else if (inst.size() <= a.cap || a.force) {
      method = "exact";
    } else if (minimax && card != Cardinality::kPerfect) {
      method = "search";
    } else {
      method = "exact";
    }
  }

  Matching m;
  if (method == "shortlist") {
    if (card == Cardinality::kAny) {
      m = solve_minimax_sri_deg2(inst);
    } else {
      m = solve_minimax_max_smi_deg2(inst);
    }
  } else if (method == "exact") {
    m = solve_exact(inst, objective, card, options).witness;
  } else if (method == "approx") {
    m = approx_minimax_sri(inst);
  } else if (method == "search") {
    BudgetedResult r = solve_minimax_budgeted(inst, card, {a.budget_ms});
    if (!r.proven_optimal) {
      err << "note: budget exhausted; value " << r.value << " not proven optimal (lower bound "
          << r.lower_bound << ")\n";
    }
    m = r.witness;
  } else {
    throw Error(ErrorCode::kBadConfig, "unknown method '" + method + "'");
  }
  out << serialize_result(m, blocking_report(inst, m), objective) << "\n";
  return kOk;
}

int run_approx(const std::string& path, std::ostream& out) {
  Instance inst = read_instance_file(path);
  Matching m = approx_minimax_sri(inst);
  BlockingReport report = blocking_report(inst, m);
  auto j = nlohmann::ordered_json::parse(serialize_result(m, report));
  auto per_agent = nlohmann::ordered_json::array();
  auto bound = nlohmann::ordered_json::array();
  for (AgentId i = 0; i < inst.size(); ++i) {
    per_agent.push_back(report.per_agent[i]);
    bound.push_back(ceil_half(inst.degree(i)));
  }
  j["per_agent"] = per_agent;
  j["per_agent_bound"] = bound;
  out << j.dump() << "\n";
  return kOk;
}

struct GenArgs {
  std::string family = "random";
  int k = 1;
  int n = 10;
  int l = 3;
  std::string kind = "sri";
  std::uint64_t seed = 0;
  std::string scheme = "capped";
  std::string out;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  Instance inst;
  if (a.family == "prop34") {
    inst = build_prop34(a.k);
  } else if (a.family == "prop36") {
    inst = build_prop36(a.k);
  } else if (a.family == "random") {
    inst = gen_random(a.n, a.l, parse_kind(a.kind), a.seed, parse_sri_scheme(a.scheme));
  } else {
    throw Error(ErrorCode::kBadConfig, "unknown family '" + a.family + "'");
  }
  std::string text = format_instance(inst);
  if (a.out.empty()) {
    out << text;
  } else {
    write_file(a.out, text);
  }
  return kOk;
}

struct ReduceArgs {
  std::string target = "sri";
  std::string formula;
  std::string assignment;  // optional, e.g. "1 0 0" or "T F F"
  std::string out;
};

int run_reduce(const ReduceArgs& a, std::ostream& out) {
  SatFormula f = read_formula_file(a.formula);
  ReductionOutput r;
  if (a.target == "sri") {
    r = reduce_sat_to_sri(f);
  } else if (a.target == "smi") {
    r = reduce_sat_to_smi(f);
  } else {
    throw Error(ErrorCode::kBadConfig, "target must be sri or smi");
  }
  std::string text = format_instance(r.instance, r.agent_names);
  if (a.out.empty()) {
    out << text;
  } else {
    write_file(a.out, text);
  }
  if (!a.assignment.empty()) {
    Assignment values;
    std::istringstream in(a.assignment);
    std::string token;
    while (in >> token) {
      if (token == "1" || token == "T" || token == "t" || token == "true") {
        values.push_back(true);
      } else if (token == "0" || token == "F" || token == "f" || token == "false") {
        values.push_back(false);
      } else {
        throw Error(ErrorCode::kMalformed, "bad truth value '" + token + "'");
      }
    }
    Matching m = r.kind == ReductionKind::kSri ? witness_from_assignment_sri(r, values)
                                               : witness_from_assignment_smi(r, values);
    // With the instance on stdout the witness goes to the same stream after
    // it; with --out it is the only output.
    out << serialize_result(m, blocking_report(r.instance, m)) << "\n";
  }
  return kOk;
}

int run_ilp_export(const std::string& path, const std::string& mode,
                   const std::string& out_path, std::ostream& out) {
  Instance inst = read_instance_file(path);
  IlpModel model = build_model(inst, parse_ilp_mode(mode));
  std::string lp = export_lp(model);
  if (out_path.empty()) {
    out << lp;
  } else {
    write_file(out_path, lp);
    write_file(out_path + ".map.json", variable_map_json(model));
  }
  return kOk;
}

struct BenchArgs {
  ExperimentConfig cfg;
  std::string kind = "sri";
  std::string mode = "minimax";
  std::string solver = "auto";
  std::string scheme = "capped";
  bool no_timing = false;
};

int run_bench(BenchArgs a, std::ostream& out, std::ostream& err) {
  a.cfg.kind = parse_kind(a.kind);
  a.cfg.mode = parse_ilp_mode(a.mode);
  a.cfg.solver = parse_solver(a.solver);
  a.cfg.sri_scheme = parse_sri_scheme(a.scheme);
  a.cfg.record_timing = !a.no_timing;
  std::vector<RunRow> rows = run_experiment(a.cfg);
  int failed = 0;
  for (const RunRow& r : rows) {
    if (r.failed) {
      ++failed;
      err << "instance " << r.index << " failed: " << r.error << "\n";
    }
  }
  if (a.cfg.solver == SolverChoice::kIlpExport) {
    out << "wrote " << rows.size() << " LP files next to " << a.cfg.output_path << "\n";
    return kOk;
  }
  out << format_summary_table({summarize(rows)});
  return failed == 0 ? kOk : kValidation;
}

int run_check(const std::string& instance_path, const std::string& matching_path,
              const std::string& objective, std::ostream& out) {
  Instance inst = read_instance_file(instance_path);
  Matching m = parse_matching(inst, read_file(matching_path));
  out << serialize_result(m, blocking_report(inst, m), parse_objective(objective)) << "\n";
  return kOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Minimax almost-stable matching solver", "almoststable"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Minimax solve with automatic routing");
  solve_cmd->add_option("--instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--objective", solve.objective, "minimax|minbp|minba");
  solve_cmd->add_option("--cardinality", solve.cardinality, "any|max|perfect");
  solve_cmd->add_option("--method", solve.method, "auto|shortlist|exact|approx|search");
  solve_cmd->add_option("--cap", solve.cap, "Largest instance for the exact search");
  solve_cmd->add_flag("--force", solve.force, "Ignore the exact cap");
  solve_cmd->add_option("--budget-ms", solve.budget_ms, "Time budget for --method search");

  std::string approx_instance;
  auto* approx_cmd = app.add_subcommand("approx", "Balanced-cut approximation");
  approx_cmd->add_option("--instance", approx_instance, "Instance file")->required();

  SolveArgs exact;
  exact.method = "exact";
  auto* exact_cmd = app.add_subcommand("exact", "Exact branch and bound");
  exact_cmd->add_option("--instance", exact.instance, "Instance file")->required();
  exact_cmd->add_option("--objective", exact.objective, "minimax|minbp|minba");
  exact_cmd->add_option("--cardinality", exact.cardinality, "any|max|perfect");
  exact_cmd->add_option("--cap", exact.cap, "Largest instance accepted");
  exact_cmd->add_flag("--force", exact.force, "Ignore the cap");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", gen.family, "prop34|prop36|random");
  gen_cmd->add_option("--k", gen.k, "Family parameter");
  gen_cmd->add_option("--n", gen.n, "Agents (random)");
  gen_cmd->add_option("--l", gen.l, "List length (random)");
  gen_cmd->add_option("--kind", gen.kind, "sri|smi (random)");
  gen_cmd->add_option("--seed", gen.seed, "Seed (random)");
  gen_cmd->add_option("--sri-scheme", gen.scheme, "capped|closure (random SRI)");
  gen_cmd->add_option("--out", gen.out, "Output file");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a (2,2)-E3-SAT formula");
  reduce_cmd->add_option("--target", reduce.target, "sri|smi");
  reduce_cmd->add_option("--formula", reduce.formula, "Formula file")->required();
  reduce_cmd->add_option("--assignment", reduce.assignment,
                         "Truth values; also prints the witness matching");
  reduce_cmd->add_option("--out", reduce.out, "Instance output file");

  std::string ilp_instance, ilp_mode = "minimax", ilp_out;
  auto* ilp_cmd = app.add_subcommand("ilp-export", "Write the ILP in LP format");
  ilp_cmd->add_option("--instance", ilp_instance, "Instance file")->required();
  ilp_cmd->add_option("--mode", ilp_mode, "minimax|minimax-max");
  ilp_cmd->add_option("--out", ilp_out, "LP file; a .map.json sidecar is written next to it");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Random-instance experiment");
  bench_cmd->add_option("--n", bench.cfg.n, "Agents")->required();
  bench_cmd->add_option("--l", bench.cfg.l, "List length")->required();
  bench_cmd->add_option("--kind", bench.kind, "sri|smi");
  bench_cmd->add_option("--mode", bench.mode, "minimax|minimax-max");
  bench_cmd->add_option("--count", bench.cfg.count, "Instances");
  bench_cmd->add_option("--seed", bench.cfg.base_seed, "Base seed");
  bench_cmd->add_option("--out", bench.cfg.output_path, "CSV output");
  bench_cmd->add_option("--solver", bench.solver, "auto|exact|approx|ilp-export");
  bench_cmd->add_option("--budget-ms", bench.cfg.budget_ms, "Per-instance budget");
  bench_cmd->add_option("--cap", bench.cfg.exact_cap, "Exact solver cap");
  bench_cmd->add_option("--threads", bench.cfg.threads, "Worker threads");
  bench_cmd->add_option("--sri-scheme", bench.scheme, "capped|closure");
  bench_cmd->add_flag("--no-timing", bench.no_timing, "Write solve_ms as 0");

  std::string check_instance, check_matching, check_objective = "minimax";
  auto* check_cmd = app.add_subcommand("check", "Blocking report for a matching");
  check_cmd->add_option("--instance", check_instance, "Instance file")->required();
  check_cmd->add_option("--matching", check_matching, "Matching file")->required();
  check_cmd->add_option("--objective", check_objective, "minimax|minbp|minba");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve, out, err);
    if (*approx_cmd) return run_approx(approx_instance, out);
    if (*exact_cmd) return run_solve(exact, out, err);
    if (*gen_cmd) return run_gen(gen, out);
    if (*reduce_cmd) return run_reduce(reduce, out);
    if (*ilp_cmd) return run_ilp_export(ilp_instance, ilp_mode, ilp_out, out);
    if (*bench_cmd) return run_bench(bench, out, err);
    if (*check_cmd) return run_check(check_instance, check_matching, check_objective, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool unsolvable =
        e.code() == ErrorCode::kTooLarge || e.code() == ErrorCode::kInfeasible;
    return unsolvable ? kUnsolvable : kValidation;
  }
  return kUsage;
}

}  // namespace almoststable::cli
