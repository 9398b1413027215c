#include <charconv>
#include <sstream>

#include "coupled/errors.hpp"
#include "coupled/formula.hpp"
#include "coupled/random.hpp"

namespace coupled::gen {

namespace {

std::string var(int i) { return "x" + std::to_string(i); }

}  // namespace

void check_formula(const Formula131& f) {
  if (f.n <= 0 || f.n % 3 != 0) {
    throw FormulaError("variable count must be a positive multiple of 3, got " + std::to_string(f.n));
  }
  const auto n = static_cast<std::size_t>(f.n);
  if (f.clauses3.size() != n / 3) {
    throw FormulaError("expected " + std::to_string(n / 3) + " three-clauses, got " + std::to_string(f.clauses3.size()));
  }
  if (f.clauses2.size() != n) {
    throw FormulaError("expected " + std::to_string(n) + " two-clauses, got " + std::to_string(f.clauses2.size()));
  }
  auto in_range = [&](int v) {
    if (v < 0 || v >= f.n) throw FormulaError("variable " + var(v) + " out of range");
  };
  std::vector<int> triple_of(n, -1);
  for (std::size_t j = 0; j < f.clauses3.size(); ++j) {
    for (int v : f.clauses3[j]) {
      in_range(v);
      if (triple_of[static_cast<std::size_t>(v)] != -1) {
        throw FormulaError(var(v) + " appears in more than one three-clause slot");
      }
      triple_of[static_cast<std::size_t>(v)] = static_cast<int>(j);
    }
  }
  std::vector<int> positive(n, 0);
  std::vector<int> negated(n, 0);
  for (const TwoClause& c : f.clauses2) {
    in_range(c.positive);
    in_range(c.negated);
    if (++positive[static_cast<std::size_t>(c.positive)] > 1) {
      throw FormulaError("literal " + var(c.positive) + " appears in two two-clauses");
    }
    if (++negated[static_cast<std::size_t>(c.negated)] > 1) {
      throw FormulaError("literal -" + var(c.negated) + " appears in two two-clauses");
    }
    if (triple_of[static_cast<std::size_t>(c.positive)] == triple_of[static_cast<std::size_t>(c.negated)]) {
      throw FormulaError("two-clause (" + var(c.positive) + " or -" + var(c.negated) +
                         ") joins variables of the same three-clause");
    }
  }
}

Formula131 parse_formula(std::string_view text) {
  Formula131 f;
  bool header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) -> FormulaError {
    return FormulaError("line " + std::to_string(line_no) + ": " + why);
  };
  auto variable = [&](std::string_view token, bool negative) {
    if (negative) {
      if (token.empty() || token[0] != '-') throw fail("expected a negated literal, got '" + std::string(token) + "'");
      token.remove_prefix(1);
    }
    if (token.size() < 2 || token[0] != 'x') throw fail("expected a variable like x3, got '" + std::string(token) + "'");
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) throw fail("bad variable '" + std::string(token) + "'");
    return value;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty() || w[0][0] == '#') continue;
    if (w[0] == "p") {
      if (header) throw fail("repeated header");
      if (w.size() != 3 || w[1] != "vars") throw fail("header must read 'p vars <n>'");
      auto [ptr, ec] = std::from_chars(w[2].data(), w[2].data() + w[2].size(), f.n);
      if (ec != std::errc{} || ptr != w[2].data() + w[2].size()) throw fail("bad variable count '" + w[2] + "'");
      header = true;
    } else if (!header) {
      throw fail("clause before the 'p vars' header");
    } else if (w[0] == "c3") {
      if (w.size() != 4) throw fail("three-clause needs three literals");
      f.clauses3.push_back({variable(w[1], false), variable(w[2], false), variable(w[3], false)});
    } else if (w[0] == "c2") {
      if (w.size() != 3) throw fail("two-clause needs two literals");
      f.clauses2.push_back({variable(w[1], false), variable(w[2], true)});
    } else {
      throw fail("unknown record '" + w[0] + "'");
    }
  }
  if (!header) throw FormulaError("missing 'p vars <n>' header");
  check_formula(f);
  return f;
}

std::string format_formula(const Formula131& f) {
  std::ostringstream out;
  out << "p vars " << f.n << '\n';
  for (const auto& c : f.clauses3) out << "c3 " << var(c[0]) << ' ' << var(c[1]) << ' ' << var(c[2]) << '\n';
  for (const auto& c : f.clauses2) out << "c2 " << var(c.positive) << " -" << var(c.negated) << '\n';
  return out.str();
}

bool is_one_in_three(const Formula131& f, const std::vector<bool>& a) {
  if (a.size() != static_cast<std::size_t>(f.n)) return false;
  for (const auto& c : f.clauses3) {
    int count = 0;
    for (int v : c) count += a[static_cast<std::size_t>(v)] ? 1 : 0;
    if (count != 1) return false;
  }
  for (const auto& c : f.clauses2) {
    const bool first = a[static_cast<std::size_t>(c.positive)];
    const bool second = !a[static_cast<std::size_t>(c.negated)];
    if (first == second) return false;
  }
  return true;
}

PlantedFormula random_formula(int n, std::uint64_t seed) {
  if (n < 6 || n % 3 != 0) {
    throw ParameterError("planted formulas need a multiple of 3 variables, at least 6; got " + std::to_string(n));
  }
  Rng rng(seed);
  const int m = n / 3;
  std::vector<int> vars(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = i;
  rng.shuffle(vars);

  PlantedFormula out;
  out.formula.n = n;
  out.assignment.assign(static_cast<std::size_t>(n), false);
  std::vector<std::array<int, 3>> triples;
  for (int j = 0; j < m; ++j) {
    std::array<int, 3> t{vars[static_cast<std::size_t>(3 * j)], vars[static_cast<std::size_t>(3 * j + 1)],
                         vars[static_cast<std::size_t>(3 * j + 2)]};
    triples.push_back(t);
  }
  out.formula.clauses3 = triples;

  // Exactly one true variable per triple. Each two-clause (x or -y) needs x and
  // y equal, so y = pi(x) with pi a permutation preserving truth and moving
  // every variable to another triple: a cyclic shift over the triples.
  std::vector<int> trues;
  std::vector<int> falses;
  std::vector<std::size_t> order(static_cast<std::size_t>(m));
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  rng.shuffle(order);
  for (std::size_t j : order) {
    auto pick = static_cast<std::size_t>(rng.uniform(0, 2));
    trues.push_back(triples[j][pick]);
    out.assignment[static_cast<std::size_t>(triples[j][pick])] = true;
  }
  rng.shuffle(order);
  for (std::size_t j : order) {
    for (int v : triples[j]) {
      if (!out.assignment[static_cast<std::size_t>(v)]) falses.push_back(v);
    }
  }
  for (std::size_t i = 0; i < trues.size(); ++i) {
    out.formula.clauses2.push_back({trues[i], trues[(i + 1) % trues.size()]});
  }
  for (std::size_t i = 0; i < falses.size(); ++i) {
    out.formula.clauses2.push_back({falses[i], falses[(i + 2) % falses.size()]});
  }
  rng.shuffle(out.formula.clauses2);
  check_formula(out.formula);
  return out;
}

Formula131 example_formula() {
  Formula131 f;
  f.n = 6;
  f.clauses3 = {{0, 1, 2}, {3, 4, 5}};
  f.clauses2 = {{3, 0}, {0, 3}, {2, 4}, {4, 1}, {1, 5}, {5, 2}};
  return f;
}

}  // namespace coupled::gen
