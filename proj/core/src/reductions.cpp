#include <algorithm>
#include <string>

#include "coupled/errors.hpp"
#include "coupled/reductions.hpp"

namespace coupled::gen {

SubsetSumStar ssp_to_star(std::span<const std::int64_t> values, std::int64_t v) {
  if (v < 1) throw ParameterError("target value must be positive");
  std::vector<Task> tasks;
  std::vector<std::pair<TaskId, TaskId>> edges;
  const auto center = static_cast<TaskId>(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1) throw ParameterError("subset-sum values must be positive");
    if (values[i] > v) {
      throw ParameterError("value " + std::to_string(values[i]) + " exceeds the target " + std::to_string(v));
    }
    tasks.push_back({static_cast<TaskId>(i), values[i]});
    edges.emplace_back(static_cast<TaskId>(i), center);
  }
  tasks.push_back({center, 3 * v});
  SubsetSumStar out{Instance(std::move(tasks), edges), center, 0};
  out.target = seq(out.instance) - 3 * v;
  return out;
}

TaskId SatReduction::variable_task(int var, VariableRole role) const { return 4 * var + static_cast<int>(role); }
TaskId SatReduction::literal_task(int var) const { return 4 * variables + 3 * var; }
TaskId SatReduction::positive_host(int var) const { return literal_task(var) + 1; }
TaskId SatReduction::negative_host(int var) const { return literal_task(var) + 2; }
TaskId SatReduction::clause3_host(int clause) const { return 7 * variables + 2 * clause; }
TaskId SatReduction::clause3_negative_host(int clause) const { return clause3_host(clause) + 1; }
TaskId SatReduction::clause2_host(int clause) const { return 7 * variables + 2 * (variables / 3) + clause; }

TaskId SatReduction::clause2_dummy(int clause) const {
  if (!with_dummies) throw ParameterError("reduction has no dummy tasks");
  return clause2_host(variables) + clause;
}

TaskId SatReduction::clause3_dummy(int clause) const {
  if (!with_dummies) throw ParameterError("reduction has no dummy tasks");
  return clause2_host(variables) + variables + clause;
}

namespace {

struct Lookup {
  std::vector<int> triple_of;
  std::vector<int> positive_clause;
  std::vector<int> negated_clause;
};

Lookup lookup(const Formula131& f) {
  Lookup l;
  const auto n = static_cast<std::size_t>(f.n);
  l.triple_of.assign(n, -1);
  l.positive_clause.assign(n, -1);
  l.negated_clause.assign(n, -1);
  for (std::size_t j = 0; j < f.clauses3.size(); ++j) {
    for (int v : f.clauses3[j]) l.triple_of[static_cast<std::size_t>(v)] = static_cast<int>(j);
  }
  for (std::size_t k = 0; k < f.clauses2.size(); ++k) {
    l.positive_clause[static_cast<std::size_t>(f.clauses2[k].positive)] = static_cast<int>(k);
    l.negated_clause[static_cast<std::size_t>(f.clauses2[k].negated)] = static_cast<int>(k);
  }
  return l;
}

}  // namespace

SatReduction sat_to_bipartite(const Formula131& f, bool with_dummies) {
  check_formula(f);
  SatReduction r;
  r.variables = f.n;
  r.with_dummies = with_dummies;
  const int n = f.n;
  const int m = n / 3;
  const Alpha clause_alpha = with_dummies ? 6 : 3;

  std::vector<Task> tasks;
  std::vector<std::pair<TaskId, TaskId>> edges;
  for (int i = 0; i < n; ++i) {
    for (int role = 0; role < 4; ++role) tasks.push_back({r.variable_task(i, static_cast<VariableRole>(role)), 1});
  }
  for (int i = 0; i < n; ++i) {
    tasks.push_back({r.literal_task(i), 2});
    tasks.push_back({r.positive_host(i), 6});
    tasks.push_back({r.negative_host(i), 6});
    edges.emplace_back(r.literal_task(i), r.positive_host(i));
    edges.emplace_back(r.literal_task(i), r.negative_host(i));
    edges.emplace_back(r.variable_task(i, VariableRole::plain), r.positive_host(i));
    edges.emplace_back(r.variable_task(i, VariableRole::primed), r.positive_host(i));
    edges.emplace_back(r.variable_task(i, VariableRole::negated), r.negative_host(i));
    edges.emplace_back(r.variable_task(i, VariableRole::negated_primed), r.negative_host(i));
  }
  for (int j = 0; j < m; ++j) {
    tasks.push_back({r.clause3_host(j), clause_alpha});
    tasks.push_back({r.clause3_negative_host(j), 6});
    for (int v : f.clauses3[static_cast<std::size_t>(j)]) {
      edges.emplace_back(r.variable_task(v, VariableRole::plain), r.clause3_host(j));
      edges.emplace_back(r.variable_task(v, VariableRole::negated_primed), r.clause3_negative_host(j));
    }
  }
  for (int k = 0; k < n; ++k) {
    const TwoClause& c = f.clauses2[static_cast<std::size_t>(k)];
    tasks.push_back({r.clause2_host(k), clause_alpha});
    edges.emplace_back(r.variable_task(c.positive, VariableRole::primed), r.clause2_host(k));
    edges.emplace_back(r.variable_task(c.negated, VariableRole::negated), r.clause2_host(k));
  }
  if (with_dummies) {
    for (int k = 0; k < n; ++k) {
      tasks.push_back({r.clause2_dummy(k), 1});
      edges.emplace_back(r.clause2_dummy(k), r.clause2_host(k));
    }
    for (int j = 0; j < m; ++j) {
      tasks.push_back({r.clause3_dummy(j), 1});
      edges.emplace_back(r.clause3_dummy(j), r.clause3_host(j));
    }
  }
  const auto task_count = static_cast<Time>(tasks.size());
  r.instance = Instance(std::move(tasks), edges);

  Time hosts = 0;
  for (const Task& t : r.instance.tasks()) {
    if (t.alpha >= 3) hosts += 3 * t.alpha;
  }
  r.target = hosts;
  r.target_task_count_reading = 54 * task_count;
  return r;
}

PackingPlan assignment_to_plan(const Formula131& f, const std::vector<bool>& assignment, const SatReduction& r) {
  check_formula(f);
  if (r.variables != f.n) throw FormulaError("reduction was built for a different formula");
  if (!is_one_in_three(f, assignment)) {
    throw FormulaError("assignment does not make exactly one literal true in every clause");
  }
  const Lookup l = lookup(f);
  PackingPlan plan;
  for (int i = 0; i < f.n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    auto task = [&](VariableRole role) { return r.variable_task(i, role); };
    if (assignment[u]) {
      plan.pack(r.literal_task(i), r.positive_host(i));
      plan.pack(task(VariableRole::plain), r.clause3_host(l.triple_of[u]));
      plan.pack(task(VariableRole::primed), r.clause2_host(l.positive_clause[u]));
      plan.pack(task(VariableRole::negated), r.negative_host(i));
      plan.pack(task(VariableRole::negated_primed), r.negative_host(i));
    } else {
      plan.pack(r.literal_task(i), r.negative_host(i));
      plan.pack(task(VariableRole::negated), r.clause2_host(l.negated_clause[u]));
      plan.pack(task(VariableRole::negated_primed), r.clause3_negative_host(l.triple_of[u]));
      plan.pack(task(VariableRole::plain), r.positive_host(i));
      plan.pack(task(VariableRole::primed), r.positive_host(i));
    }
  }
  if (r.with_dummies) {
    for (int k = 0; k < f.n; ++k) plan.pack(r.clause2_dummy(k), r.clause2_host(k));
    for (int j = 0; j < f.n / 3; ++j) plan.pack(r.clause3_dummy(j), r.clause3_host(j));
  }
  return plan;
}

Schedule assignment_to_schedule(const Formula131& f, const std::vector<bool>& assignment, const SatReduction& r) {
  return plan_to_schedule(r.instance, assignment_to_plan(f, assignment, r));
}

}  // namespace coupled::gen
