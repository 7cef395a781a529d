#include "almoststable/sat.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "almoststable/error.h"

namespace almoststable {

std::vector<std::string> validate_22e3sat(const SatFormula& f) {
  std::vector<std::string> violations;
  if (f.num_vars < 0) {
    violations.push_back("negative variable count");
    return violations;
  }
  std::vector<int> pos(f.num_vars, 0), neg(f.num_vars, 0);
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    for (const Literal& lit : f.clauses[c]) {
      if (lit.var < 0 || lit.var >= f.num_vars) {
        violations.push_back("clause " + std::to_string(c + 1) +
                             " uses unknown variable " + std::to_string(lit.var + 1));
        continue;
      }
      ++(lit.negated ? neg : pos)[lit.var];
    }
  }
  for (int v = 0; v < f.num_vars; ++v) {
    if (pos[v] != 2 || neg[v] != 2) {
      violations.push_back("variable " + std::to_string(v + 1) + " occurs " +
                           std::to_string(pos[v]) + " times unnegated and " +
                           std::to_string(neg[v]) + " times negated");
    }
  }
  return violations;
}

bool is_valid_22e3sat(const SatFormula& f) { return validate_22e3sat(f).empty(); }

int first_unsatisfied_clause(const SatFormula& f, const Assignment& a) {
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    bool sat = false;
    for (const Literal& lit : f.clauses[c]) sat = sat || (a[lit.var] != lit.negated);
    if (!sat) return static_cast<int>(c);
  }
  return -1;
}

bool satisfies(const SatFormula& f, const Assignment& a) {
  return static_cast<int>(a.size()) == f.num_vars &&
         first_unsatisfied_clause(f, a) < 0;
}

SatFormula parse_formula(std::string_view text) {
  SatFormula f;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kMalformed,
                "formula line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_header) {
      std::istringstream fields(line);
      std::string key, extra;
      if (!(fields >> key) || key != "vars:" || !(fields >> f.num_vars) ||
          (fields >> extra) || f.num_vars < 0) {
        fail("expected 'vars: N'");
      }
      have_header = true;
      continue;
    }
    std::istringstream fields(line);
    Clause clause;
    for (auto& lit : clause) {
      long long v = 0;
      if (!(fields >> v)) fail("expected three literals");
      if (v == 0 || v > f.num_vars || -v > f.num_vars) {
        throw Error(ErrorCode::kInvalidFormula,
                    "formula line " + std::to_string(line_no) +
                        ": variable out of range");
      }
      lit = {static_cast<int>((v < 0 ? -v : v) - 1), v < 0};
    }
    std::string extra;
    if (fields >> extra) fail("expected three literals");
    f.clauses.push_back(clause);
  }
  if (!have_header) throw Error(ErrorCode::kMalformed, "missing 'vars:' line");
  return f;
}

SatFormula read_formula_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kMalformed, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_formula(buf.str());
}

std::string format_formula(const SatFormula& f) {
  std::ostringstream out;
  out << "vars: " << f.num_vars << "\n";
  for (const Clause& c : f.clauses) {
    for (std::size_t s = 0; s < c.size(); ++s) {
      out << (s ? " " : "") << (c[s].negated ? -(c[s].var + 1) : c[s].var + 1);
    }
    out << "\n";
  }
  return out.str();
}

namespace {

bool distinct_vars(const Clause& c) {
  return c[0].var != c[1].var && c[0].var != c[2].var && c[1].var != c[2].var;
}

int true_count(const Clause& c, const Assignment& a) {
  int t = 0;
  for (const Literal& lit : c) t += a[lit.var] != lit.negated;
  return t;
}

}  // namespace

PlantedFormula planted_22e3sat(int num_vars, std::uint64_t seed) {
  if (num_vars <= 0 || num_vars % 3 != 0) {
    throw Error(ErrorCode::kInvalidFormula,
                "variable count must be a positive multiple of 3");
  }
  std::mt19937_64 rng(seed);
  PlantedFormula out;
  out.assignment.resize(num_vars);
  for (int v = 0; v < num_vars; ++v) out.assignment[v] = rng() & 1;

  std::vector<Literal> pool;
  for (int v = 0; v < num_vars; ++v) {
    for (bool neg : {false, false, true, true}) pool.push_back({v, neg});
  }
  const int m = num_vars * 4 / 3;
  const Assignment& a = out.assignment;

  while (true) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Clause> clauses(m);
    for (int c = 0; c < m; ++c) {
      clauses[c] = {pool[3 * c], pool[3 * c + 1], pool[3 * c + 2]};
    }
    // Repair: swap literals between clauses until every clause has distinct
    // variables and a true literal. Gives up after a bounded number of
    // attempts and reshuffles.
    std::uniform_int_distribution<int> pick_clause(0, m - 1), pick_slot(0, 2);
    bool ok = false;
    for (int attempt = 0; attempt < 50 * m && !ok; ++attempt) {
      int bad = -1;
      for (int c = 0; c < m && bad < 0; ++c) {
        if (!distinct_vars(clauses[c]) || true_count(clauses[c], a) == 0) bad = c;
      }
      if (bad < 0) {
        ok = true;
        break;
      }
      int other = pick_clause(rng);
      if (other == bad) continue;
      int s = pick_slot(rng), t = pick_slot(rng);
      if (true_count(clauses[bad], a) == 0) {
        // Bring a true literal in, taking it from a clause that can spare it.
        if (true_count(clauses[other], a) < 2) continue;
        bool is_true = a[clauses[other][t].var] != clauses[other][t].negated;
        if (!is_true) continue;
      }
      std::swap(clauses[bad][s], clauses[other][t]);
    }
    if (ok) {
      out.formula = {num_vars, std::move(clauses)};
      return out;
    }
  }
}

}  // namespace almoststable
