#include "jforge/cli/scene.hpp"

#include <fstream>
#include <sstream>

namespace jforge::cli {

namespace {

std::string locate(const std::string& what, std::size_t line, std::size_t column) {
  if (!line) return what;
  return what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
}

void line_column(std::string_view text, std::size_t byte, std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

std::vector<std::string> names(const Json& j, const char* what) {
  if (!j.is_array()) throw SceneError(std::string(what) + " must be an array of coordinate names");
  std::vector<std::string> out;
  for (const auto& n : j) {
    if (!n.is_string()) throw SceneError(std::string(what) + " must contain strings");
    out.push_back(n.get<std::string>());
  }
  return out;
}

void declare(Scene& s, const Json& root, const char* section) {
  if (!root.contains(section)) return;
  const Json& block = root.at(section);
  if (!block.is_object()) throw SceneError(std::string(section) + " must be an object");
  const std::string sec = section;
  for (const auto& [name, value] : block.items()) {
    if (!value.is_string()) throw SceneError(sec + "." + name + " must be an expression string");
    if (s.symbols.count(name) || s.chart->index_of(name)) throw SceneError("name '" + name + "' is already declared or a coordinate");
    const std::string text = value.get<std::string>();
    try {
      Expr e;
      if (sec == "scalars") e = parse_scalar(text, s.chart, &s.symbols);
      else if (sec == "forms") e = parse_form(text, s.chart, &s.symbols);
      else e = parse_multivector(text, s.chart, &s.symbols);
      s.symbols.emplace(name, std::move(e));
    } catch (const ParseError& e) {
      throw SceneError(sec + "." + name + ": " + e.what());
    } catch (const Error& e) {
      throw SceneError(sec + "." + name + ": " + e.what());
    }
  }
}

}  // namespace

SceneError::SceneError(const std::string& what, std::size_t line, std::size_t column)
    : Error(locate(what, line, column)), line_(line), column_(column) {}

Scene parse_scene(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line, column;
    line_column(text, e.byte ? e.byte - 1 : 0, line, column);
    throw SceneError("scene is not valid JSON", line, column);
  }
  if (!root.is_object()) throw SceneError("scene must be a JSON object");
  for (const auto& [key, v] : root.items())
    if (key != "chart" && key != "product" && key != "scalars" && key != "forms" && key != "multivectors" &&
        key != "tasks")
      throw SceneError("unknown scene key '" + key + "'");

  Scene s;
  try {
    if (root.contains("chart") && root.contains("product")) throw SceneError("scene needs at most one of chart, product");
    if (!root.contains("chart") && !root.contains("product")) {
      // Only a scene without declarations or tasks may omit the chart.
      for (const char* k : {"scalars", "forms", "multivectors"})
        if (root.contains(k)) throw SceneError("scene needs a chart or product");
      if (root.contains("tasks") && !(root.at("tasks").is_array() && root.at("tasks").empty()))
        throw SceneError("scene needs a chart or product");
      return s;
    }
    if (root.contains("chart")) {
      s.chart = make_chart(names(root.at("chart"), "chart"));
    } else {
      const Json& p = root.at("product");
      if (!p.is_object() || !p.contains("transverse") || !p.contains("leaf"))
        throw SceneError("product needs transverse and leaf");
      s.product = make_product_chart(names(p.at("transverse"), "product.transverse"), names(p.at("leaf"), "product.leaf"));
      s.chart = s.product->chart();
    }
  } catch (const SceneError&) {
    throw;
  } catch (const std::exception& e) {
    throw SceneError(std::string("bad chart: ") + e.what());
  }
  declare(s, root, "scalars");
  declare(s, root, "forms");
  declare(s, root, "multivectors");

  if (root.contains("tasks")) {
    const Json& tasks = root.at("tasks");
    if (!tasks.is_array()) throw SceneError("tasks must be an array");
    for (const Json& t : tasks) {
      if (!t.is_object()) throw SceneError("each task must be an object");
      std::vector<std::string> kinds;
      for (const char* k : {"check", "flow", "decompose", "graystep"})
        if (t.contains(k)) kinds.emplace_back(k);
      if (kinds.size() != 1) throw SceneError("each task needs exactly one of check, flow, decompose, graystep");
      s.tasks.push_back({kinds.front(), t});
    }
  }
  return s;
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read scene " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

}  // namespace jforge::cli
