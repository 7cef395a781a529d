#ifndef ALMOSTSTABLE_ILP_H_
#define ALMOSTSTABLE_ILP_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "almoststable/instance.h"
#include "almoststable/matching.h"

namespace almoststable {

// Integer programs for minimax almost-stability. Pair variables are named
// x_i_j (matched) and b_i_j (blocking) with 1-based i < j; r bounds every
// agent's blocking-pair count.

enum class IlpMode { kMinimax, kMinimaxMax };
std::string_view to_string(IlpMode mode);
IlpMode parse_ilp_mode(std::string_view text);  // "minimax" | "minimax-max"

struct LinearTerm {
  int coef = 0;
  std::string var;
};

enum class RowSense { kLessEq, kGreaterEq };

struct LinearRow {
  std::string name;
  std::vector<LinearTerm> terms;
  RowSense sense = RowSense::kLessEq;
  int rhs = 0;
};

struct IlpVariable {
  std::string name;
  bool binary = true;  // otherwise a general integer
  int lower = 0;
  int upper = 1;
};

struct PairVariables {
  AgentPair pair;  // 0-based, first < second
  std::string x;
  std::string b;
};

struct IlpModel {
  IlpMode mode = IlpMode::kMinimax;
  bool maximize = false;
  int weight = 0;  // coefficient of each x in the kMinimaxMax objective
  std::vector<LinearTerm> objective;
  std::vector<IlpVariable> variables;  // x and b by pair, then r
  std::vector<LinearRow> rows;         // sorted: c*, m*, s* by agent ids
  std::vector<PairVariables> pairs;
};

// Matching rows m_i (sum of x <= 1), stability rows s_i_j and cap rows c_i
// (sum of b - r <= 0). kMinimax minimises r; kMinimaxMax maximises
// (n + 1) * sum(x) - r.
IlpModel build_model(const Instance& inst, IlpMode mode);

// LP text with sections Minimize/Maximize, Subject To, Bounds, Binaries,
// Generals, End. Deterministic.
std::string export_lp(const IlpModel& model);

// JSON array of {"pair": [i, j], "x": name, "b": name} records.
std::string variable_map_json(const IlpModel& model);

using IlpAssignment = std::map<std::string, int, std::less<>>;

struct IlpCheck {
  bool satisfied = true;
  std::vector<std::string> violated;  // row names, then "bound:<var>"
};

// Evaluates every row and bound. Throws Error(kMissingVariable) if a model
// variable has no value.
IlpCheck check_solution(const IlpModel& model, const IlpAssignment& assignment);

// x from |m|, b on its blocking pairs, r = max_bp.
IlpAssignment assignment_from_matching(const Instance& inst, const Matching& m);

// Objective value of |assignment| (variables must be present).
long long objective_value(const IlpModel& model,
                          const IlpAssignment& assignment);

}  // namespace almoststable

#endif  // ALMOSTSTABLE_ILP_H_
