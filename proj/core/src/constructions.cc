#include "almoststable/constructions.h"

#include <array>

#include "almoststable/blocking.h"
#include "almoststable/error.h"

namespace almoststable {

AgentId InstanceBuilder::add_agent(std::string name) {
  prefs_.emplace_back();
  names_.push_back(std::move(name));
  return static_cast<AgentId>(prefs_.size() - 1);
}

namespace {

int power_of_three(int k) {
  int p = 1;
  for (int i = 0; i < k; ++i) p *= 3;
  return p;
}

std::string one_based(int v) { return std::to_string(v + 1); }

}  // namespace

std::vector<std::vector<int>> nested_cycle_lists(int k) {
  const int n = power_of_three(k);
  std::vector<std::vector<int>> lists(n);
  for (int t = 0; t < n; ++t) {
    for (int level = 1, block = 3; level <= k; ++level, block *= 3) {
      const int sub = block / 3;
      const int start = t - t % block;
      const int mine = (t % block) / sub;
      for (int step : {1, 2}) {
        const int other = start + ((mine + step) % 3) * sub;
        for (int u = other; u < other + sub; ++u) lists[t].push_back(u);
      }
    }
  }
  return lists;
}

Instance build_prop34(int k) {
  if (k < 1 || k > 7) {
    throw Error(ErrorCode::kBadK, "k must lie in 1..7, got " + std::to_string(k));
  }
  return Instance(InstanceKind::kSri, nested_cycle_lists(k));
}

Matching witness_prop34(int k) {
  Instance inst = build_prop34(k);
  std::vector<AgentPair> pairs;
  for (AgentId a = 0; a + 1 < inst.size(); a += 2) pairs.emplace_back(a, a + 1);
  return build_matching(inst, pairs);
}

Instance build_prop36(int k) {
  if (k < 0) {
    throw Error(ErrorCode::kBadK, "k must be non-negative, got " + std::to_string(k));
  }
  // a_j -> 2(j-1), a'_j -> 2(j-1)+1 for j = 1..k+1.
  auto a = [](int j) { return 2 * (j - 1); };
  auto a_prime = [](int j) { return 2 * (j - 1) + 1; };
  std::vector<std::vector<AgentId>> prefs(2 * (k + 1));
  for (int j = 1; j <= k; ++j) {
    prefs[a(j)] = {a(k + 1), a_prime(j)};
    prefs[a_prime(j)] = {a(j)};
    prefs[a(k + 1)].push_back(a(j));
  }
  prefs[a(k + 1)].push_back(a_prime(k + 1));
  prefs[a_prime(k + 1)] = {a(k + 1)};
  return Instance(InstanceKind::kSmi, std::move(prefs));
}

std::vector<AgentId> attach_forcing_gadget(InstanceBuilder& builder,
                                           AgentId target, int omega) {
  if (omega < 2) {
    throw Error(ErrorCode::kBadOmega,
                "omega must be at least 2, got " + std::to_string(omega));
  }
  const auto lists = nested_cycle_lists(omega);
  std::vector<AgentId> global(lists.size());
  global[0] = target;
  const std::string target_name = builder.names()[target];
  std::vector<AgentId> fresh;
  for (std::size_t t = 1; t < lists.size(); ++t) {
    global[t] = builder.add_agent("f" + std::to_string(t) + "(" + target_name + ")");
    fresh.push_back(global[t]);
  }
  for (std::size_t t = 0; t < lists.size(); ++t) {
    for (int u : lists[t]) builder.append(global[t], global[u]);
  }
  return fresh;
}

namespace {

void require_valid(const SatFormula& f) {
  auto violations = validate_22e3sat(f);
  if (!violations.empty()) {
    throw Error(ErrorCode::kInvalidFormula, violations.front());
  }
}

// occurrence[(clause, slot)] = 0 or 1: first or second time this literal
// (variable with this sign) is seen scanning clauses left to right.
std::map<std::pair<int, int>, int> occurrence_index(const SatFormula& f) {
  std::map<std::pair<int, int>, int> out;
  std::vector<std::array<int, 2>> seen(f.num_vars, {0, 0});
  for (int j = 0; j < static_cast<int>(f.clauses.size()); ++j) {
    for (int s = 0; s < 3; ++s) {
      const Literal& lit = f.clauses[j][s];
      out[{j, s}] = seen[lit.var][lit.negated]++;
    }
  }
  return out;
}

// Lowest slot whose literal is true, or -1.
int satisfying_slot(const Clause& c, const Assignment& a) {
  for (int s = 0; s < 3; ++s) {
    if (a[c[s].var] != c[s].negated) return s;
  }
  return -1;
}

void require_satisfying(const ReductionOutput& r, const Assignment& a) {
  if (static_cast<int>(a.size()) != r.formula.num_vars) {
    throw Error(ErrorCode::kUnsatisfyingAssignment,
                "assignment has " + std::to_string(a.size()) + " values for " +
                    std::to_string(r.formula.num_vars) + " variables");
  }
  int bad = first_unsatisfied_clause(r.formula, a);
  if (bad >= 0) {
    throw Error(ErrorCode::kUnsatisfyingAssignment,
                "clause " + one_based(bad) + " is not satisfied");
  }
}

}  // namespace

ReductionOutput reduce_sat_to_sri(const SatFormula& f) {
  require_valid(f);
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  InstanceBuilder b;
  ReductionOutput out;
  out.kind = ReductionKind::kSri;
  out.formula = f;

  enum { kT, kF, k1, k2 };
  for (int i = 0; i < n; ++i) {
    const std::string v = "v" + one_based(i);
    std::vector<AgentId> g = {b.add_agent(v + "^T"), b.add_agent(v + "^F"),
                              b.add_agent(v + "^1"), b.add_agent(v + "^2")};
    b.set_list(g[k1], {g[kT], g[kF]});
    b.set_list(g[k2], {g[kT], g[kF]});
    out.forcing_gadgets.push_back(attach_forcing_gadget(b, g[k1], 2));
    out.forcing_gadgets.push_back(attach_forcing_gadget(b, g[k2], 2));
    out.variable_agents.push_back(g);
  }
  for (int j = 0; j < m; ++j) {
    std::vector<AgentId> x;
    for (int s = 0; s < 3; ++s) {
      x.push_back(b.add_agent("x" + one_based(j) + "^" + one_based(s)));
    }
    out.clause_agents.push_back(x);
  }

  // x1(v) and x2(v) for each literal agent v, then the final lists.
  const auto occurrence = occurrence_index(f);
  std::vector<std::array<AgentId, 2>> links(b.size(), {kUnmatched, kUnmatched});
  for (int j = 0; j < m; ++j) {
    const auto& x = out.clause_agents[j];
    for (int s = 0; s < 3; ++s) {
      const Literal& lit = f.clauses[j][s];
      AgentId v = out.variable_agents[lit.var][lit.negated ? kF : kT];
      links[v][occurrence.at({j, s})] = x[s];
      out.literal_links[{j, s}] = v;
      b.set_list(x[s], {x[(s + 1) % 3], x[(s + 2) % 3], v});
    }
  }
  for (const auto& g : out.variable_agents) {
    for (int z : {kT, kF}) {
      b.set_list(g[z], {g[k1], links[g[z]][0], links[g[z]][1], g[k2]});
    }
  }
  out.instance = b.build(InstanceKind::kSri);
  out.agent_names = b.names();
  return out;
}

Matching witness_from_assignment_sri(const ReductionOutput& r,
                                     const Assignment& a) {
  if (r.kind != ReductionKind::kSri) {
    throw Error(ErrorCode::kPrecondition, "not a roommates reduction");
  }
  require_satisfying(r, a);
  std::vector<AgentPair> pairs;
  for (int i = 0; i < r.formula.num_vars; ++i) {
    const auto& g = r.variable_agents[i];  // T, F, 1, 2
    if (a[i]) {
      pairs.emplace_back(g[0], g[2]);
      pairs.emplace_back(g[1], g[3]);
    } else {
      pairs.emplace_back(g[0], g[3]);
      pairs.emplace_back(g[1], g[2]);
    }
  }
  for (const auto& gadget : r.forcing_gadgets) {
    for (std::size_t t = 0; t + 1 < gadget.size(); t += 2) {
      pairs.emplace_back(gadget[t], gadget[t + 1]);
    }
  }
  for (int j = 0; j < static_cast<int>(r.formula.clauses.size()); ++j) {
    const int d = satisfying_slot(r.formula.clauses[j], a);
    const auto& x = r.clause_agents[j];
    pairs.emplace_back(x[(d + 2) % 3], x[(d + 1) % 3]);
  }
  return build_matching(r.instance, pairs);
}

Assignment extract_assignment_sri(const ReductionOutput& r, const Matching& m) {
  if (r.kind != ReductionKind::kSri) {
    throw Error(ErrorCode::kPrecondition, "not a roommates reduction");
  }
  BlockingReport report = blocking_report(r.instance, m);
  if (report.max_bp > 1) {
    throw Error(ErrorCode::kPrecondition,
                "matching has an agent in " + std::to_string(report.max_bp) +
                    " blocking pairs");
  }
  Assignment a(r.formula.num_vars);
  for (int i = 0; i < r.formula.num_vars; ++i) {
    const auto& g = r.variable_agents[i];
    if (m.partner(g[2]) == g[0]) {
      a[i] = true;
    } else if (m.partner(g[2]) == g[1]) {
      a[i] = false;
    } else {
      throw Error(ErrorCode::kMalformedWitness,
                  "variable gadget " + one_based(i) +
                      " pairs v^1 with neither v^T nor v^F");
    }
  }
  return a;
}

ReductionOutput reduce_sat_to_smi(const SatFormula& f) {
  require_valid(f);
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  InstanceBuilder b;
  ReductionOutput out;
  out.kind = ReductionKind::kSmi;
  out.formula = f;

  for (int i = 0; i < n; ++i) {
    std::vector<AgentId> g;
    for (const char* side : {"x", "y"}) {
      for (int r = 1; r <= 4; ++r) {
        g.push_back(b.add_agent(side + one_based(i) + "^" + std::to_string(r)));
      }
    }
    out.variable_agents.push_back(g);
  }
  for (int j = 0; j < m; ++j) {
    const std::string c = one_based(j);
    std::vector<AgentId> g;
    for (const char* kind : {"c", "p"}) {
      for (int s = 1; s <= 3; ++s) {
        g.push_back(b.add_agent(kind + c + "^" + std::to_string(s)));
      }
    }
    g.push_back(b.add_agent("q" + c));
    g.push_back(b.add_agent("z" + c));
    out.clause_agents.push_back(g);
  }

  // Communication edges: unnegated occurrences go to x^1, x^2, negated ones
  // to x^3, x^4.
  const auto occurrence = occurrence_index(f);
  std::vector<AgentId> partner_of(b.size(), kUnmatched);
  for (int j = 0; j < m; ++j) {
    for (int s = 0; s < 3; ++s) {
      const Literal& lit = f.clauses[j][s];
      const int r = (lit.negated ? 2 : 0) + occurrence.at({j, s});
      AgentId x = out.variable_agents[lit.var][r];
      AgentId c = out.clause_agents[j][s];
      partner_of[x] = c;
      partner_of[c] = x;
      out.literal_links[{j, s}] = x;
    }
  }
  for (const auto& g : out.variable_agents) {
    const AgentId *x = &g[0], *y = &g[4];
    b.set_list(x[0], {y[0], partner_of[x[0]], y[1]});
    b.set_list(x[1], {y[1], partner_of[x[1]], y[2]});
    b.set_list(x[2], {y[3], partner_of[x[2]], y[2]});
    b.set_list(x[3], {y[0], partner_of[x[3]], y[3]});
    b.set_list(y[0], {x[0], x[3]});
    b.set_list(y[1], {x[0], x[1]});
    b.set_list(y[2], {x[1], x[2]});
    b.set_list(y[3], {x[2], x[3]});
  }
  for (const auto& g : out.clause_agents) {
    const AgentId *c = &g[0], *p = &g[3], q = g[6], z = g[7];
    for (int s = 0; s < 3; ++s) {
      b.set_list(c[s], {p[s], partner_of[c[s]], q});
      b.set_list(p[s], {c[s], z});
    }
    b.set_list(q, {c[0], c[1], c[2]});
    b.set_list(z, {p[0], p[1], p[2]});
  }
  out.instance = b.build(InstanceKind::kSmi);
  out.agent_names = b.names();
  return out;
}

Matching witness_from_assignment_smi(const ReductionOutput& r,
                                     const Assignment& a) {
  if (r.kind != ReductionKind::kSmi) {
    throw Error(ErrorCode::kPrecondition, "not a marriage reduction");
  }
  require_satisfying(r, a);
  std::vector<AgentPair> pairs;
  for (int i = 0; i < r.formula.num_vars; ++i) {
    const auto& g = r.variable_agents[i];
    for (int t = 0; t < 4; ++t) {
      // True: x^t with y^t. False: x^t with y^(t+1).
      pairs.emplace_back(g[t], g[4 + (a[i] ? t : (t + 1) % 4)]);
    }
  }
  for (int j = 0; j < static_cast<int>(r.formula.clauses.size()); ++j) {
    const int d = satisfying_slot(r.formula.clauses[j], a);
    const auto& g = r.clause_agents[j];
    for (int s = 0; s < 3; ++s) {
      if (s != d) pairs.emplace_back(g[s], g[3 + s]);
    }
    pairs.emplace_back(g[d], g[6]);
    pairs.emplace_back(g[3 + d], g[7]);
  }
  return build_matching(r.instance, pairs);
}

}  // namespace almoststable
