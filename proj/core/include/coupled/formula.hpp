#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coupled::gen {

/// Clause (x_positive OR NOT x_negated).
struct TwoClause {
  int positive = 0;
  int negated = 0;

  friend bool operator==(const TwoClause&, const TwoClause&) = default;
};

/// Restricted one-in-three 3SAT formula: n variables (n a multiple of 3),
/// n two-clauses (x OR NOT y) and n/3 positive three-clauses, such that every
/// literal x and NOT x sits in exactly one two-clause, every positive literal
/// in exactly one three-clause, and for each two-clause (x OR NOT y) the
/// variables x and y lie in different three-clauses.
struct Formula131 {
  int n = 0;
  std::vector<TwoClause> clauses2;
  std::vector<std::array<int, 3>> clauses3;

  friend bool operator==(const Formula131&, const Formula131&) = default;
};

/// Throws FormulaError naming the first broken structural constraint.
void check_formula(const Formula131& formula);

/// Text format: "p vars <n>" followed by one clause per line, either
/// "c3 x<i> x<j> x<k>" or "c2 x<i> -x<j>". Blank lines and lines starting with
/// '#' are ignored. The parsed formula is checked.
Formula131 parse_formula(std::string_view text);
std::string format_formula(const Formula131& formula);

/// Exactly one true literal in every clause.
bool is_one_in_three(const Formula131& formula, const std::vector<bool>& assignment);

struct PlantedFormula {
  Formula131 formula;
  std::vector<bool> assignment;
};

/// Plants a one-in-three assignment first and builds the clauses around it,
/// so the formula is always satisfiable. Requires n >= 6 and n % 3 == 0.
PlantedFormula random_formula(int n, std::uint64_t seed);

/// The six-variable formula x0..x5 used as the canonical small example,
/// satisfied by x0 = x3 = 1 and every other variable false.
Formula131 example_formula();

}  // namespace coupled::gen
