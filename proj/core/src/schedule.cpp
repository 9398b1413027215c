#include "coupled/schedule.hpp"

#include <algorithm>
#include <tuple>

#include "coupled/errors.hpp"

namespace coupled {

void Schedule::place(const Task& task, Time start) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), task.id,
                             [](const ScheduledTask& e, TaskId id) { return e.id < id; });
  ScheduledTask entry{task.id, task.alpha, start};
  if (it != entries_.end() && it->id == task.id) {
    *it = entry;
  } else {
    entries_.insert(it, entry);
  }
}

const ScheduledTask* Schedule::find(TaskId id) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                             [](const ScheduledTask& e, TaskId key) { return e.id < key; });
  if (it == entries_.end() || it->id != id) return nullptr;
  return &*it;
}

std::map<TaskId, Time> Schedule::starts() const {
  std::map<TaskId, Time> out;
  for (const auto& e : entries_) out.emplace(e.id, e.start);
  return out;
}

Time makespan(const Schedule& schedule) {
  Time end = 0;
  for (const auto& e : schedule.entries()) end = std::max(end, e.end());
  return end;
}

Schedule schedule_from_starts(const Instance& instance, const std::map<TaskId, Time>& starts) {
  Schedule schedule;
  for (const auto& [id, start] : starts) {
    auto index = instance.index_of(id);
    if (!index) throw InvalidInstance("schedule refers to unknown task " + std::to_string(id));
    schedule.place(instance.task(*index), start);
  }
  return schedule;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::overlap: return "overlap";
    case ViolationKind::incompatible: return "incompatible";
    case ViolationKind::missing_task: return "missing";
    case ViolationKind::unknown_task: return "unknown";
    case ViolationKind::alpha_mismatch: return "alpha-mismatch";
    case ViolationKind::negative_start: return "negative-start";
  }
  return "?";
}

std::string Violation::describe() const {
  auto id = [](TaskId t) { return std::to_string(t); };
  switch (kind) {
    case ViolationKind::overlap:
      return std::string("overlap: sub-task ") + first_part + " of task " + id(first) + " and sub-task " +
             second_part + " of task " + id(second) + " share the machine";
    case ViolationKind::incompatible:
      return "incompatible: tasks " + id(first) + " and " + id(second) +
             " run interleaved without a compatibility edge";
    case ViolationKind::missing_task: return "missing: task " + id(first) + " is not scheduled";
    case ViolationKind::unknown_task: return "unknown: task " + id(first) + " is not in the instance";
    case ViolationKind::alpha_mismatch:
      return "alpha-mismatch: task " + id(first) + " is scheduled with a different stretch factor";
    case ViolationKind::negative_start: return "negative-start: task " + id(first) + " starts before 0";
  }
  return "?";
}

namespace {

struct Interval {
  Time begin;
  Time end;
  TaskId id;
  char part;
};

// Reports every pair of intersecting half-open intervals, each pair once with
// the smaller task id first.
template <typename Report>
void sweep(std::vector<Interval> intervals, Report&& report) {
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    return std::tie(a.begin, a.id, a.part) < std::tie(b.begin, b.id, b.part);
  });
  std::vector<Interval> active;
  for (const Interval& cur : intervals) {
    std::erase_if(active, [&](const Interval& a) { return a.end <= cur.begin; });
    for (const Interval& a : active) {
      if (a.id < cur.id) {
        report(a, cur);
      } else {
        report(cur, a);
      }
    }
    active.push_back(cur);
  }
}

}  // namespace

ValidationReport validate(const Instance& instance, const Schedule& schedule) {
  ValidationReport report;
  std::vector<bool> seen(instance.size(), false);
  std::vector<Interval> parts;
  std::vector<Interval> spans;
  parts.reserve(2 * schedule.size());
  spans.reserve(schedule.size());

  for (const auto& e : schedule.entries()) {
    auto index = instance.index_of(e.id);
    if (!index) {
      report.violations.push_back({ViolationKind::unknown_task, e.id, e.id});
    } else {
      seen[*index] = true;
      if (instance.alpha(*index) != e.alpha) {
        report.violations.push_back({ViolationKind::alpha_mismatch, e.id, e.id});
      }
    }
    if (e.start < 0) report.violations.push_back({ViolationKind::negative_start, e.id, e.id});
    parts.push_back({e.a_begin(), e.idle_begin(), e.id, 'a'});
    parts.push_back({e.b_begin(), e.end(), e.id, 'b'});
    spans.push_back({e.a_begin(), e.end(), e.id, ' '});
  }
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (!seen[i]) report.violations.push_back({ViolationKind::missing_task, instance.id(i), instance.id(i)});
  }

  std::vector<Violation> overlaps;
  sweep(std::move(parts), [&](const Interval& x, const Interval& y) {
    overlaps.push_back({ViolationKind::overlap, x.id, y.id, x.part, y.part});
  });
  std::vector<Violation> incompatible;
  sweep(std::move(spans), [&](const Interval& x, const Interval& y) {
    auto ix = instance.index_of(x.id);
    auto iy = instance.index_of(y.id);
    if (!ix || !iy || x.id == y.id) return;
    if (!instance.adjacent(*ix, *iy)) incompatible.push_back({ViolationKind::incompatible, x.id, y.id});
  });
  auto order = [](const Violation& a, const Violation& b) {
    return std::tie(a.first, a.second, a.first_part, a.second_part) <
           std::tie(b.first, b.second, b.first_part, b.second_part);
  };
  std::sort(overlaps.begin(), overlaps.end(), order);
  std::sort(incompatible.begin(), incompatible.end(), order);
  report.violations.insert(report.violations.end(), overlaps.begin(), overlaps.end());
  report.violations.insert(report.violations.end(), incompatible.begin(), incompatible.end());
  return report;
}

}  // namespace coupled
