#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coupled/instance.hpp"

namespace coupled {

/// One task placed on the machine. Sub-task a occupies [start, start+alpha),
/// the idle gap [start+alpha, start+2*alpha) and sub-task b
/// [start+2*alpha, start+3*alpha).
struct ScheduledTask {
  TaskId id = 0;
  Alpha alpha = 1;
  Time start = 0;

  Time a_begin() const { return start; }
  Time idle_begin() const { return start + alpha; }
  Time b_begin() const { return start + 2 * alpha; }
  Time end() const { return start + 3 * alpha; }

  friend bool operator==(const ScheduledTask&, const ScheduledTask&) = default;
};

/// Explicit start times, kept sorted by task id.
class Schedule {
 public:
  Schedule() = default;

  /// Inserts or replaces the placement of `task.id`.
  void place(const Task& task, Time start);

  std::span<const ScheduledTask> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const ScheduledTask* find(TaskId id) const;

  std::map<TaskId, Time> starts() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<ScheduledTask> entries_;
};

/// Completion time of the latest task; 0 for an empty schedule.
Time makespan(const Schedule& schedule);

/// Attaches stretch factors from the instance. Throws InvalidInstance when a
/// start refers to a task the instance does not have.
Schedule schedule_from_starts(const Instance& instance, const std::map<TaskId, Time>& starts);

enum class ViolationKind {
  overlap,         ///< two sub-tasks occupy the machine at the same time
  incompatible,    ///< spans intersect but the tasks share no edge
  missing_task,    ///< instance task absent from the schedule
  unknown_task,    ///< scheduled id absent from the instance
  alpha_mismatch,  ///< scheduled stretch factor differs from the instance
  negative_start,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind = ViolationKind::overlap;
  TaskId first = 0;
  TaskId second = 0;
  /// For overlaps: which sub-task of each task ('a' or 'b').
  char first_part = ' ';
  char second_part = ' ';

  std::string describe() const;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the single-machine and compatibility invariants. Violations are
/// returned as data and listed exhaustively, never thrown.
ValidationReport validate(const Instance& instance, const Schedule& schedule);

}  // namespace coupled
