#include "coupled/cli/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace coupled::cli {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

void only_keys(const json& object, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!object.is_object()) throw ParseError(where + " must be an object");
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) throw ParseError(where + ": unknown key '" + key + "'");
  }
}

std::int64_t integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + " must be an integer");
  return value.get<std::int64_t>();
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc = parse_json(text, "instance");
  only_keys(doc, {"tasks", "edges"}, "instance");
  if (!doc.contains("tasks") || !doc["tasks"].is_array()) throw ParseError("instance: 'tasks' must be an array");
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < doc["tasks"].size(); ++i) {
    const json& t = doc["tasks"][i];
    const std::string where = "tasks[" + std::to_string(i) + "]";
    only_keys(t, {"id", "alpha"}, where);
    if (!t.contains("id") || !t.contains("alpha")) throw ParseError(where + " needs 'id' and 'alpha'");
    tasks.push_back({integer(t["id"], where + ".id"), integer(t["alpha"], where + ".alpha")});
  }
  std::vector<std::pair<TaskId, TaskId>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("instance: 'edges' must be an array");
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const json& e = doc["edges"][i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() != 2) throw ParseError(where + " must be a pair of ids");
      edges.emplace_back(integer(e[0], where), integer(e[1], where));
    }
  }
  try {
    return Instance(std::move(tasks), edges);
  } catch (const InvalidInstance& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

std::string format_instance(const Instance& instance) {
  ordered doc;
  doc["tasks"] = ordered::array();
  for (const Task& t : instance.tasks()) doc["tasks"].push_back({{"id", t.id}, {"alpha", t.alpha}});
  doc["edges"] = ordered::array();
  for (auto [u, v] : instance.edge_ids()) doc["edges"].push_back({u, v});
  return doc.dump(2) + "\n";
}

ScheduleFile parse_schedule(std::string_view text) {
  json doc = parse_json(text, "schedule");
  only_keys(doc, {"starts", "makespan", "solver", "certified_ratio"}, "schedule");
  if (!doc.contains("starts") || !doc["starts"].is_object()) throw ParseError("schedule: 'starts' must be an object");
  ScheduleFile file;
  for (const auto& [key, value] : doc["starts"].items()) {
    TaskId id = 0;
    std::size_t used = 0;
    try {
      id = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size()) throw ParseError("schedule: '" + key + "' is not a task id");
    file.starts[id] = integer(value, "starts[" + key + "]");
  }
  if (doc.contains("makespan")) file.makespan = integer(doc["makespan"], "makespan");
  if (doc.contains("solver")) {
    if (!doc["solver"].is_string()) throw ParseError("schedule: 'solver' must be a string");
    file.solver = doc["solver"].get<std::string>();
  }
  if (doc.contains("certified_ratio")) {
    if (!doc["certified_ratio"].is_string()) throw ParseError("schedule: 'certified_ratio' must be a string");
    file.certified_ratio = doc["certified_ratio"].get<std::string>();
  }
  return file;
}

std::string format_schedule(const ScheduleFile& file) {
  ordered doc;
  doc["starts"] = ordered::object();
  for (auto [id, start] : file.starts) doc["starts"][std::to_string(id)] = start;
  doc["makespan"] = file.makespan;
  doc["solver"] = file.solver;
  doc["certified_ratio"] = file.certified_ratio;
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw ParseError("error while reading " + path.string());
  return buffer.str();
}

void write_output(const std::string& path, std::string_view content, std::ostream& console) {
  if (path.empty() || path == "-") {
    console << content;
    console.flush();
    if (!console) throw OutputError("cannot write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open " + path + " for writing");
  out << content;
  out.close();
  if (!out) throw OutputError("error while writing " + path);
}

}  // namespace coupled::cli
