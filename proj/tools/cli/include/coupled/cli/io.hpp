#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "coupled/errors.hpp"
#include "coupled/instance.hpp"
#include "coupled/rational.hpp"
#include "coupled/schedule.hpp"

namespace coupled::cli {

/// Unreadable or malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An output file could not be written.
class OutputError : public Error {
 public:
  using Error::Error;
};

/// {"tasks":[{"id":..,"alpha":..}], "edges":[[u,v], ...]}; unknown keys are
/// rejected. Throws ParseError.
Instance parse_instance(std::string_view text);
std::string format_instance(const Instance& instance);

struct ScheduleFile {
  std::map<TaskId, Time> starts;
  Time makespan = 0;
  std::string solver;
  std::string certified_ratio;
};

ScheduleFile parse_schedule(std::string_view text);
std::string format_schedule(const ScheduleFile& file);

/// Throws ParseError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);
/// Writes to `console` when `path` is empty or "-". Throws OutputError.
void write_output(const std::string& path, std::string_view content, std::ostream& console);

}  // namespace coupled::cli
