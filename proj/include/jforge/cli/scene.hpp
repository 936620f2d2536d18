#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jforge/extcalc/grammar.hpp"
#include "jforge/foliate/foliate.hpp"

namespace jforge::cli {

using Json = nlohmann::ordered_json;

// Malformed scene. line/column are 1-based, 0 when unknown.
class SceneError : public Error {
 public:
  SceneError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// kind is one of check, flow, decompose, graystep; spec is the whole task object.
struct Task {
  std::string kind;
  Json spec;
};

struct Scene {
  ChartPtr chart;            // null only for a scene with no declarations and no tasks
  ProductChartPtr product;  // null unless the scene declares a product chart
  SymbolTable symbols;      // declared scalars, forms and multivectors
  std::vector<Task> tasks;
};

// Optional {"chart": [...]} or {"product": {"transverse": [...], "leaf": [...]}},
// optional "scalars", "forms", "multivectors" (name -> expression, later entries may use
// earlier names) and "tasks".
Scene parse_scene(std::string_view text);
Scene load_scene(const std::filesystem::path& path);

}  // namespace jforge::cli
