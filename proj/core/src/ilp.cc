#include "almoststable/ilp.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <tuple>

#include "almoststable/blocking.h"
#include "almoststable/error.h"
#include "json.hpp"

namespace almoststable {

std::string_view to_string(IlpMode mode) {
  return mode == IlpMode::kMinimax ? "minimax" : "minimax-max";
}

IlpMode parse_ilp_mode(std::string_view text) {
  if (text == "minimax") return IlpMode::kMinimax;
  if (text == "minimax-max" || text == "minimax_max") return IlpMode::kMinimaxMax;
  throw Error(ErrorCode::kMalformed, "unknown ILP mode '" + std::string(text) + "'");
}

namespace {

std::string pair_name(char prefix, AgentId a, AgentId b) {
  if (a > b) std::swap(a, b);
  return std::string(1, prefix) + "_" + std::to_string(a + 1) + "_" +
         std::to_string(b + 1);
}

// Sort key for names like "s3_10" or "x_1_2": leading letters, then the
// embedded numbers in order.
std::pair<std::string, std::vector<int>> name_key(const std::string& name) {
  std::string letters;
  std::vector<int> numbers;
  std::size_t i = 0;
  while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) {
    letters += name[i++];
  }
  while (i < name.size()) {
    if (std::isdigit(static_cast<unsigned char>(name[i]))) {
      int v = 0;
      while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) {
        v = v * 10 + (name[i++] - '0');
      }
      numbers.push_back(v);
    } else {
      ++i;
    }
  }
  return {letters, numbers};
}

bool name_less(const std::string& a, const std::string& b) {
  return name_key(a) < name_key(b);
}

void write_terms(std::ostringstream& out, const std::vector<LinearTerm>& terms,
                 std::size_t indent) {
  constexpr std::size_t kWidth = 78;
  if (terms.empty()) {
    out << " 0 r";
    return;
  }
  std::size_t column = indent;
  bool first = true;
  for (const auto& t : terms) {
    std::string piece;
    int coef = t.coef;
    if (first) {
      if (coef < 0) piece += "- ";
    } else {
      piece += coef < 0 ? "- " : "+ ";
    }
    if (coef < 0) coef = -coef;
    if (coef != 1) piece += std::to_string(coef) + " ";
    piece += t.var;
    if (column + piece.size() + 1 > kWidth && !first) {
      out << "\n   ";
      column = 3;
    }
    out << " " << piece;
    column += piece.size() + 1;
    first = false;
  }
}

}  // namespace

IlpModel build_model(const Instance& inst, IlpMode mode) {
  const int n = inst.size();
  IlpModel model;
  model.mode = mode;

  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j : inst.prefs(i)) {
      if (i < j) {
        model.pairs.push_back({{i, j}, pair_name('x', i, j), pair_name('b', i, j)});
      }
    }
  }
  std::sort(model.pairs.begin(), model.pairs.end(),
            [](const PairVariables& a, const PairVariables& b) {
              return a.pair < b.pair;
            });
  for (const auto& p : model.pairs) model.variables.push_back({p.x, true, 0, 1});
  for (const auto& p : model.pairs) model.variables.push_back({p.b, true, 0, 1});
  model.variables.push_back({"r", false, 0, inst.max_degree()});

  // Matching and cap rows, one per agent.
  for (AgentId i = 0; i < n; ++i) {
    std::vector<AgentId> partners(inst.prefs(i).begin(), inst.prefs(i).end());
    std::sort(partners.begin(), partners.end());
    LinearRow m{"m" + std::to_string(i + 1), {}, RowSense::kLessEq, 1};
    LinearRow c{"c" + std::to_string(i + 1), {}, RowSense::kLessEq, 0};
    for (AgentId j : partners) {
      m.terms.push_back({1, pair_name('x', i, j)});
      c.terms.push_back({1, pair_name('b', i, j)});
    }
    c.terms.push_back({-1, "r"});
    model.rows.push_back(std::move(m));
    model.rows.push_back(std::move(c));
  }

  // Stability rows: i or j holds someone at least as good as the other,
  // unless the pair is flagged as blocking.
  for (const auto& p : model.pairs) {
    auto [i, j] = p.pair;
    std::map<std::string, int> coef;
    for (AgentId a : {i, j}) {
      AgentId other = a == i ? j : i;
      for (AgentId k : inst.prefs(a)) {
        ++coef[pair_name('x', a, k)];
        if (k == other) break;
      }
    }
    LinearRow s{"s" + std::to_string(i + 1) + "_" + std::to_string(j + 1), {},
                RowSense::kGreaterEq, 1};
    for (const auto& [var, c] : coef) s.terms.push_back({c, var});
    std::sort(s.terms.begin(), s.terms.end(),
              [](const LinearTerm& a, const LinearTerm& b) {
                return name_less(a.var, b.var);
              });
    s.terms.push_back({1, p.b});
    model.rows.push_back(std::move(s));
  }
  std::sort(model.rows.begin(), model.rows.end(),
            [](const LinearRow& a, const LinearRow& b) {
              return name_less(a.name, b.name);
            });

  if (mode == IlpMode::kMinimax) {
    model.maximize = false;
    model.objective.push_back({1, "r"});
  } else {
    model.maximize = true;
    model.weight = n + 1;
    for (const auto& p : model.pairs) model.objective.push_back({model.weight, p.x});
    model.objective.push_back({-1, "r"});
  }
  return model;
}

std::string export_lp(const IlpModel& model) {
  std::ostringstream out;
  out << "\\ minimax almost-stable matching, mode " << to_string(model.mode)
      << "\n";
  out << (model.maximize ? "Maximize" : "Minimize") << "\n obj:";
  write_terms(out, model.objective, 5);
  out << "\nSubject To\n";
  for (const auto& row : model.rows) {
    out << " " << row.name << ":";
    write_terms(out, row.terms, row.name.size() + 2);
    out << (row.sense == RowSense::kLessEq ? " <= " : " >= ") << row.rhs << "\n";
  }
  out << "Bounds\n";
  for (const auto& v : model.variables) {
    if (!v.binary) out << " " << v.lower << " <= " << v.name << " <= " << v.upper << "\n";
  }
  auto write_names = [&](bool binary) {
    std::size_t column = 0;
    for (const auto& v : model.variables) {
      if (v.binary != binary) continue;
      if (column > 0 && column + v.name.size() + 1 > 78) {
        out << "\n";
        column = 0;
      }
      out << " " << v.name;
      column += v.name.size() + 1;
    }
    if (column > 0) out << "\n";
  };
  out << "Binaries\n";
  write_names(true);
  out << "Generals\n";
  write_names(false);
  out << "End\n";
  return out.str();
}

std::string variable_map_json(const IlpModel& model) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& p : model.pairs) {
    nlohmann::ordered_json entry;
    entry["pair"] = {p.pair.first + 1, p.pair.second + 1};
    entry["x"] = p.x;
    entry["b"] = p.b;
    out.push_back(entry);
  }
  return out.dump(2) + "\n";
}

IlpCheck check_solution(const IlpModel& model, const IlpAssignment& assignment) {
  for (const auto& v : model.variables) {
    if (assignment.find(v.name) == assignment.end()) {
      throw Error(ErrorCode::kMissingVariable, "no value for variable " + v.name);
    }
  }
  IlpCheck check;
  for (const auto& row : model.rows) {
    long long lhs = 0;
    for (const auto& t : row.terms) lhs += static_cast<long long>(t.coef) * assignment.find(t.var)->second;
    bool ok = row.sense == RowSense::kLessEq ? lhs <= row.rhs : lhs >= row.rhs;
    if (!ok) check.violated.push_back(row.name);
  }
  for (const auto& v : model.variables) {
    int value = assignment.find(v.name)->second;
    if (value < v.lower || value > v.upper) check.violated.push_back("bound:" + v.name);
  }
  check.satisfied = check.violated.empty();
  return check;
}

IlpAssignment assignment_from_matching(const Instance& inst, const Matching& m) {
  BlockingReport report = blocking_report(inst, m);
  IlpAssignment a;
  for (AgentId i = 0; i < inst.size(); ++i) {
    for (AgentId j : inst.prefs(i)) {
      if (i < j) {
        a[pair_name('x', i, j)] = m.partner(i) == j ? 1 : 0;
        a[pair_name('b', i, j)] = 0;
      }
    }
  }
  for (auto [i, j] : report.blocking_pairs) a[pair_name('b', i, j)] = 1;
  a["r"] = report.max_bp;
  return a;
}

long long objective_value(const IlpModel& model, const IlpAssignment& assignment) {
  long long total = 0;
  for (const auto& t : model.objective) {
    auto it = assignment.find(t.var);
    if (it == assignment.end()) {
      throw Error(ErrorCode::kMissingVariable, "no value for variable " + t.var);
    }
    total += static_cast<long long>(t.coef) * it->second;
  }
  return total;
}

}  // namespace almoststable
