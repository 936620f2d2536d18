#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "jforge/cli/scene.hpp"

namespace jforge::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunFlags {
  int grid = 9;             // default nodes per axis
  double tol = 1e-6;        // pass threshold for numeric residuals
  std::uint64_t seed = 0;   // sample points and random flow seeds
  int max_steps = 1024;     // cap on the time subdivision of decompose tasks
};

struct TaskReport {
  std::string kind, name;
  std::string status;  // pass | fail | error
  std::string message;
  Json result = Json::object();
  Json residuals = Json::object();
  std::vector<std::pair<std::string, std::string>> csv;  // file name, contents
};

struct Report {
  Json provenance = Json::object();
  std::vector<TaskReport> tasks;
  bool all_pass() const;
};

// Runs one task; never throws for task-level problems (they become "error" entries).
TaskReport run_task(const Scene& scene, const Task& task, std::size_t index, const RunFlags& flags);

// Tasks in order; later tasks run even if earlier ones fail.
Report run_scene(const Scene& scene, const RunFlags& flags, const std::string& scene_name);

Json to_json(const Report& r);
std::string dump(const Report& r);  // stable two-space indented JSON with trailing newline

// Writes report.json and task-<k>.csv files into dir (created if missing). Throws IoError.
void write_report(const Report& r, const std::filesystem::path& dir);

// 0 iff no task failed or errored.
int exit_code(const Report& r);

}  // namespace jforge::cli
