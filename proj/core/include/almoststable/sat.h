#ifndef ALMOSTSTABLE_SAT_H_
#define ALMOSTSTABLE_SAT_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace almoststable {

// A literal over 0-based variable indices.
struct Literal {
  int var = 0;
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct SatFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
  friend bool operator==(const SatFormula&, const SatFormula&) = default;
};

// Truth value per variable.
using Assignment = std::vector<bool>;

// Violations of the (2,2)-E3-SAT shape: every variable occurs exactly twice
// unnegated and twice negated. Clause size is fixed by the type. Empty when
// valid.
std::vector<std::string> validate_22e3sat(const SatFormula& f);
bool is_valid_22e3sat(const SatFormula& f);

bool satisfies(const SatFormula& f, const Assignment& a);
// Index of the first clause |a| falsifies, or -1.
int first_unsatisfied_clause(const SatFormula& f, const Assignment& a);

// Text format: "vars: n", then one clause per line as three signed 1-based
// integers (negative means negated). '#' starts a comment. Throws
// Error(kMalformed) or Error(kInvalidFormula) for out-of-range variables.
SatFormula parse_formula(std::string_view text);
SatFormula read_formula_file(const std::string& path);
std::string format_formula(const SatFormula& f);

struct PlantedFormula {
  SatFormula formula;
  Assignment assignment;  // satisfies formula
};

// Random valid (2,2)-E3-SAT formula on |num_vars| variables (a positive
// multiple of 3) with a planted satisfying assignment; clauses never repeat a
// variable. Deterministic in |seed|.
PlantedFormula planted_22e3sat(int num_vars, std::uint64_t seed);

}  // namespace almoststable

#endif  // ALMOSTSTABLE_SAT_H_
