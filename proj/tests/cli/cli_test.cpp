#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "jforge/cli/report.hpp"
#include "suites.hpp"

using namespace jforge::cli;

namespace {

Report run(const std::string& text, RunFlags flags = {}) { return run_scene(parse_scene(text), flags, "inline"); }

const char* kStandard = R"({"chart": ["x", "y", "z"], "forms": {"alpha": "d z + x*d y"}, "tasks": [%s]})";

std::string scene(const std::string& tasks) {
  std::string s = kStandard;
  return s.replace(s.find("%s"), 2, tasks);
}

}  // namespace

TEST(Scene, EmptyScene) {
  Report r = run("{}");
  EXPECT_TRUE(r.tasks.empty());
  EXPECT_EQ(exit_code(r), 0);
  EXPECT_EQ(to_json(r)["tasks"], Json::array());
  EXPECT_EQ(to_json(r)["provenance"]["version"], kToolVersion);
}

TEST(Scene, Errors) {
  try {
    parse_scene("{\n  \"chart\": [\"x\",]\n}");
    FAIL();
  } catch (const SceneError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 1u);
  }
  EXPECT_THROW(parse_scene(R"({"chart": ["x"], "plots": []})"), SceneError);
  EXPECT_THROW(parse_scene(R"({"chart": ["x"], "scalars": {"x": "1"}})"), SceneError);
  EXPECT_THROW(parse_scene(R"({"chart": ["x"], "forms": {"a": "d q"}})"), SceneError);
  EXPECT_THROW(parse_scene(R"({"chart": ["x"], "tasks": [{"check": "contact", "flow": {}}]})"), SceneError);
  EXPECT_THROW(parse_scene(R"({"forms": {"a": "d x"}})"), SceneError);
  EXPECT_THROW(parse_scene(R"({"chart": ["x"], "product": {"transverse": [], "leaf": ["y"]}})"), SceneError);
  EXPECT_THROW(load_scene("/nonexistent/scene.json"), IoError);
}

TEST(Scene, LaterDeclarationsSeeEarlierOnes) {
  Scene s = parse_scene(R"({"chart": ["x", "y"], "scalars": {"g": "1 + x^2"}, "forms": {"w": "g*d x ^ d y"}})");
  EXPECT_EQ(serialize(s.symbols.at("w")), "(x^2 + 1)*d x ^ d y");
}

TEST(Report, ContactCheck) {
  Report r = run(scene(R"({"check": "contact"})"));
  ASSERT_EQ(r.tasks.size(), 1u);
  EXPECT_EQ(r.tasks[0].status, "pass");
  EXPECT_EQ(r.tasks[0].result["top_form"], "d x ^ d y ^ d z");
  EXPECT_EQ(exit_code(r), 0);
}

TEST(Report, UndefinedFormIsAnErrorEntryAndLaterTasksRun) {
  Report r = run(scene(R"({"check": "contact", "form": "beta"}, {"check": "reeb", "expect": "@z"})"));
  ASSERT_EQ(r.tasks.size(), 2u);
  EXPECT_EQ(r.tasks[0].status, "error");
  EXPECT_NE(r.tasks[0].message.find("beta"), std::string::npos);
  EXPECT_EQ(r.tasks[1].status, "pass");
  EXPECT_EQ(exit_code(r), 1);
}

TEST(Report, FailingExpectation) {
  Report r = run(scene(R"({"check": "reeb", "expect": "@x"})"));
  EXPECT_EQ(r.tasks[0].status, "fail");
  EXPECT_EQ(exit_code(r), 1);
}

TEST(Report, FlowCsvMatchesClosedForm) {
  Report r = run(scene(R"({"flow": {"H": "z", "t": [0, 1], "seeds": [[0.5, -0.25, 0.75]]}})"));
  const TaskReport& t = r.tasks.at(0);
  ASSERT_EQ(t.status, "pass") << t.message;
  ASSERT_EQ(t.csv.size(), 1u);
  EXPECT_EQ(t.csv[0].first, "task-0.csv");
  std::istringstream in(t.csv[0].second);
  std::string line, last;
  std::getline(in, line);
  EXPECT_EQ(line, "t,x,y,z,lambda");
  double worst = 0;
  while (std::getline(in, line)) {
    double v[5];
    char comma;
    std::istringstream row(line);
    row >> v[0] >> comma >> v[1] >> comma >> v[2] >> comma >> v[3] >> comma >> v[4];
    const double e = std::exp(v[0]);
    worst = std::max({worst, std::abs(v[1] - 0.5 * e), std::abs(v[2] + 0.25), std::abs(v[3] - 0.75 * e), std::abs(v[4] - e)});
    last = line;
  }
  EXPECT_LT(worst, 1e-6);
  EXPECT_EQ(last.substr(0, 2), "1,");
  EXPECT_LT(t.residuals["conformal"].get<double>(), 1e-6);
}

TEST(Report, SeedControlsRandomFlowSeeds) {
  const std::string text = scene(R"({"flow": {"H": "z", "t": [0, 0.1], "h": 0.01, "seeds": 2}})");
  RunFlags a, b;
  b.seed = 7;
  EXPECT_EQ(dump(run(text, a)), dump(run(text, a)));
  EXPECT_NE(run(text, a).tasks[0].result["seeds"], run(text, b).tasks[0].result["seeds"]);
}

TEST(Report, ParameterErrors) {
  Report r = run(scene(R"({"flow": {"H": "z", "t": [0]}},
                          {"flow": {"H": "q + 1"}},
                          {"decompose": {"perturbation": [], "cover": []}},
                          {"check": "poisson", "multivector": "alpha"},
                          {"check": "sparkle"})"));
  for (const TaskReport& t : r.tasks) EXPECT_EQ(t.status, "error") << t.name;
}

TEST(Report, DecomposeCapComesFromMaxSteps) {
  const std::string text = scene(R"({"decompose": {
      "perturbation": [{"axis": "x", "coeff": "9/10*t*y*z"}, {"axis": "y", "coeff": "9/10*t*x*z"},
                       {"axis": "z", "coeff": "9/10*t*x*y"}],
      "cover": [{"lo": [-1.5, -1.5, -1.5], "hi": [1.5, 1.5, 1.5]}], "nodes": 5}})");
  Report ok = run(text);
  ASSERT_EQ(ok.tasks[0].status, "pass") << ok.tasks[0].message;
  EXPECT_EQ(ok.tasks[0].result["n"].get<int>(), 16);
  RunFlags capped;
  capped.max_steps = 4;
  Report bad = run(text, capped);
  EXPECT_EQ(bad.tasks[0].status, "error");
  EXPECT_NE(bad.tasks[0].message.find("partial sum"), std::string::npos);
}

TEST(Report, WriteReport) {
  Report r = run(scene(R"({"flow": {"H": "z", "t": [0, 0.1], "h": 0.01, "seeds": 2}})"));
  const auto dir = std::filesystem::temp_directory_path() / "jforge-report-test";
  std::filesystem::remove_all(dir);
  write_report(r, dir);
  std::ifstream in(dir / "report.json");
  std::stringstream b;
  b << in.rdbuf();
  EXPECT_EQ(b.str(), dump(r));
  EXPECT_TRUE(std::filesystem::exists(dir / "task-0.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "task-0-seed1.csv"));
  std::filesystem::remove_all(dir);
  EXPECT_THROW(write_report(r, "/proc/jforge-cannot-write"), IoError);
}

TEST(Corpus, DeterminismAndExitCodes) {
  auto r = jforge::testing::cli_corpus_check(JFORGE_FIXTURE_DIR, JFORGE_CLI_BINARY);
  EXPECT_TRUE(r.ok()) << r.detail;
}
