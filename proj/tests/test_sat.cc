#include <gtest/gtest.h>

#include "almoststable/sat.h"
#include "gtest_helpers.h"

namespace almoststable {
namespace {

using testing::code_of;

SatFormula formula_b() { return read_formula_file(testing::fixture("formula_b.cnf")); }

TEST(Formula, ExampleIsValid) {
  SatFormula f = formula_b();
  EXPECT_EQ(f.num_vars, 3);
  EXPECT_EQ(f.clauses.size(), 4u);
  EXPECT_EQ(f.clauses[1][0], (Literal{0, true}));
  EXPECT_TRUE(is_valid_22e3sat(f));
}

TEST(Formula, DroppingAClauseBreaksCounts) {
  SatFormula f = formula_b();
  f.clauses.pop_back();
  EXPECT_FALSE(is_valid_22e3sat(f));
  EXPECT_FALSE(validate_22e3sat(f).empty());
}

TEST(Formula, EmptyIsValid) { EXPECT_TRUE(is_valid_22e3sat(SatFormula{})); }

TEST(Formula, Satisfaction) {
  SatFormula f = formula_b();
  EXPECT_TRUE(satisfies(f, {true, false, false}));
  EXPECT_FALSE(satisfies(f, {true, true, true}));
  EXPECT_EQ(first_unsatisfied_clause(f, {true, true, true}), 1);
  EXPECT_EQ(first_unsatisfied_clause(f, {true, false, false}), -1);
}

TEST(Formula, ParseErrors) {
  EXPECT_EQ(code_of([] { parse_formula("1 2 3\n"); }), ErrorCode::kMalformed);
  EXPECT_EQ(code_of([] { parse_formula("vars: 3\n1 2\n"); }), ErrorCode::kMalformed);
  EXPECT_EQ(code_of([] { parse_formula("vars: 3\n1 2 x\n"); }), ErrorCode::kMalformed);
  EXPECT_EQ(code_of([] { parse_formula("vars: 2\n1 2 3\n"); }), ErrorCode::kInvalidFormula);
}

TEST(Formula, FormatRoundTrip) {
  SatFormula f = formula_b();
  EXPECT_EQ(parse_formula(format_formula(f)), f);
}

TEST(Planted, ValidAndSatisfied) {
  for (int seed = 0; seed < 40; ++seed) {
    const int n = 3 * (1 + seed % 6);
    PlantedFormula p = planted_22e3sat(n, seed);
    EXPECT_EQ(p.formula.num_vars, n);
    EXPECT_EQ(static_cast<int>(p.formula.clauses.size()), 4 * n / 3);
    EXPECT_TRUE(is_valid_22e3sat(p.formula));
    EXPECT_TRUE(satisfies(p.formula, p.assignment));
  }
  EXPECT_EQ(planted_22e3sat(9, 4).formula, planted_22e3sat(9, 4).formula);
}

}  // namespace
}  // namespace almoststable
