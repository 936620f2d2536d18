#include <CLI11.hpp>
#include <iostream>

#include "jforge/cli/report.hpp"

int main(int argc, char** argv) {
  using namespace jforge::cli;
  CLI::App app{"Run a scene of contact-geometry checks and experiments"};
  std::string scene_path, out_dir;
  RunFlags flags;
  app.add_option("--scene", scene_path, "Scene file (JSON)")->required();
  app.add_option("--out", out_dir, "Output directory for report.json and CSV files")->required();
  app.add_option("--grid", flags.grid, "Default grid nodes per axis")->check(CLI::Range(1, 1 << 16));
  app.add_option("--tol", flags.tol, "Pass threshold for numeric residuals")->check(CLI::PositiveNumber);
  app.add_option("--seed", flags.seed, "Seed for sample points and flow seeds");
  app.add_option("--max-steps", flags.max_steps, "Cap on the time subdivision of decompose tasks")
      ->check(CLI::Range(1, 1 << 20));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const Scene scene = load_scene(scene_path);
    const Report report = run_scene(scene, flags, std::filesystem::path(scene_path).filename().string());
    write_report(report, out_dir);
    for (std::size_t i = 0; i < report.tasks.size(); ++i) {
      const TaskReport& t = report.tasks[i];
      std::cout << "[" << i << "] " << t.kind << " " << t.name << ": " << t.status;
      if (!t.message.empty()) std::cout << " (" << t.message << ")";
      std::cout << "\n";
    }
    return exit_code(report);
  } catch (const SceneError& e) {
    std::cerr << scene_path;
    if (e.line()) std::cerr << ":" << e.line() << ":" << e.column();
    std::cerr << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
