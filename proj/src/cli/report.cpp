#include "jforge/cli/report.hpp"

#include <fstream>

namespace jforge::cli {

bool Report::all_pass() const {
  for (const TaskReport& t : tasks)
    if (t.status != "pass") return false;
  return true;
}

Report run_scene(const Scene& scene, const RunFlags& flags, const std::string& scene_name) {
  Report r;
  r.provenance["tool"] = "jforge";
  r.provenance["version"] = kToolVersion;
  r.provenance["scene"] = scene_name;
  r.provenance["seed"] = flags.seed;
  r.provenance["grid"] = flags.grid;
  r.provenance["tol"] = flags.tol;
  r.provenance["max_steps"] = flags.max_steps;
  for (std::size_t i = 0; i < scene.tasks.size(); ++i) r.tasks.push_back(run_task(scene, scene.tasks[i], i, flags));
  return r;
}

Json to_json(const Report& r) {
  Json j;
  j["provenance"] = r.provenance;
  j["tasks"] = Json::array();
  for (std::size_t i = 0; i < r.tasks.size(); ++i) {
    const TaskReport& t = r.tasks[i];
    Json e;
    e["index"] = i;
    e["kind"] = t.kind;
    e["name"] = t.name;
    e["status"] = t.status;
    if (!t.message.empty()) e["message"] = t.message;
    if (!t.result.empty()) e["result"] = t.result;
    if (!t.residuals.empty()) e["residuals"] = t.residuals;
    if (!t.csv.empty()) {
      e["csv"] = Json::array();
      for (const auto& [name, body] : t.csv) e["csv"].push_back(name);
    }
    j["tasks"].push_back(std::move(e));
  }
  return j;
}

std::string dump(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {
void write_file(const std::filesystem::path& p, const std::string& body) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + p.string());
  out << body;
  if (!out) throw IoError("cannot write " + p.string());
}
}  // namespace

void write_report(const Report& r, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
  write_file(dir / "report.json", dump(r));
  for (const TaskReport& t : r.tasks)
    for (const auto& [name, body] : t.csv) write_file(dir / name, body);
}

int exit_code(const Report& r) { return r.all_pass() ? 0 : 1; }

}  // namespace jforge::cli
