#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "jforge/cli/report.hpp"
#include "jforge/extcalc/calculus.hpp"
#include "jforge/flowlab/characteristic.hpp"
#include "jforge/flowlab/decomposition.hpp"
#include "jforge/flowlab/gray.hpp"
#include "jforge/geomstruct/classify.hpp"
#include "jforge/geomstruct/jacobi.hpp"

namespace jforge::cli {

namespace {

// Bad task parameters or unresolved names.
class TaskError : public Error {
 public:
  using Error::Error;
};

// Deterministic across standard libraries, unlike the <random> distributions.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : g_(seed) {}
  Real unit() { return static_cast<Real>(g_() >> 11) * 0x1.0p-53L; }
  int integer(int lo, int hi) { return lo + static_cast<int>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 g_;
};

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw TaskError(std::string("missing parameter '") + key + "'");
  return j.at(key);
}

Real number(const Json& j, const char* what) {
  if (!j.is_number()) throw TaskError(std::string(what) + " must be a number");
  return j.get<double>();
}

Real number_or(const Json& p, const char* key, Real fallback) {
  return p.contains(key) ? number(p.at(key), key) : fallback;
}

int integer_or(const Json& p, const char* key, int fallback) {
  if (!p.contains(key)) return fallback;
  if (!p.at(key).is_number_integer()) throw TaskError(std::string(key) + " must be an integer");
  return p.at(key).get<int>();
}

RVec vector_of(const Json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw TaskError(std::string(what) + " must be an array of " + std::to_string(n) + " numbers");
  RVec v(n);
  for (int i = 0; i < n; ++i) v(i) = number(j.at(static_cast<std::size_t>(i)), what);
  return v;
}

const Expr& symbol(const Scene& s, const Json& name, const char* what) {
  if (!name.is_string()) throw TaskError(std::string(what) + " must name a declaration");
  auto it = s.symbols.find(name.get<std::string>());
  if (it == s.symbols.end()) throw TaskError(std::string("undefined ") + what + " '" + name.get<std::string>() + "'");
  return it->second;
}

// Without the key: the only declared form, else the one named "alpha".
DifferentialForm form_param(const Scene& s, const Json& p, const char* key) {
  if (!p.contains(key)) {
    const DifferentialForm* only = nullptr;
    int count = 0;
    for (const auto& [name, e] : s.symbols)
      if (const auto* w = std::get_if<DifferentialForm>(&e)) {
        ++count;
        only = w;
      }
    if (count == 1) return *only;
    auto it = s.symbols.find("alpha");
    if (it != s.symbols.end() && std::holds_alternative<DifferentialForm>(it->second))
      return std::get<DifferentialForm>(it->second);
    throw TaskError(std::string("missing parameter '") + key + "'");
  }
  const Expr& e = symbol(s, p.at(key), "form");
  if (const auto* w = std::get_if<DifferentialForm>(&e)) return *w;
  throw TaskError("'" + p.at(key).get<std::string>() + "' is not a form");
}

int axis_of(const Scene& s, const Json& j) {
  if (j.is_number_integer()) {
    const int a = j.get<int>();
    if (a < 0 || a >= s.chart->dim()) throw TaskError("axis out of range");
    return a;
  }
  if (!j.is_string()) throw TaskError("axis must be a coordinate name or index");
  auto i = s.chart->index_of(j.get<std::string>());
  if (!i) throw TaskError("unknown coordinate '" + j.get<std::string>() + "'");
  return *i;
}

// Chart with an extra time coordinate for expressions in (u, t).
ChartPtr time_chart(const Scene& s) {
  std::vector<std::string> names;
  for (int i = 0; i < s.chart->dim(); ++i) names.push_back(s.chart->name(i));
  if (s.chart->index_of("t")) throw TaskError("time-dependent expressions need a chart without a coordinate 't'");
  names.emplace_back("t");
  return make_chart(names);
}

ScalarFn bump_spec(const Json& b, int dim) {
  const RVec c = vector_of(need(b, "center"), dim, "bump center");
  const Real radius = number(need(b, "radius"), "bump radius");
  const Real amp = number_or(b, "amplitude", 1);
  if (b.contains("plateau")) return plateau_bump_fn(c, number(b.at("plateau"), "plateau"), radius, amp);
  return bump_fn(c, radius, amp);
}

// Numeric field on M (with_time false) or on M x R. Accepts an expression string,
// a declared scalar name, or {"bump": {...}}; with time, a bump is ramped linearly in t.
ScalarFn field_spec(const Scene& s, const Json& j, bool with_time) {
  const int n = s.chart->dim();
  if (j.is_number()) return constant_fn(with_time ? n + 1 : n, number(j, "constant field"));
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    auto it = s.symbols.find(text);
    if (it != s.symbols.end()) {
      const auto* f = std::get_if<ScalarField>(&it->second);
      if (!f) throw TaskError("'" + text + "' is not a scalar");
      ScalarFn g = symbolic_fn(*f, n);
      return with_time ? time_lifted_fn(g) : g;
    }
    try {
      if (!with_time) return symbolic_fn(parse_scalar(text, s.chart, &s.symbols), n);
      return symbolic_fn(parse_scalar(text, time_chart(s)), n + 1);
    } catch (const ParseError& e) {
      throw TaskError("expression '" + text + "': " + e.what());
    } catch (const UnknownCoordinate& e) {
      throw TaskError("expression '" + text + "': " + e.what());
    }
  }
  if (j.is_object() && j.contains("bump")) {
    ScalarFn b = bump_spec(j.at("bump"), n);
    if (!with_time) return b;
    return product_fn({coordinate_fn(n + 1, n), time_lifted_fn(b)});
  }
  throw TaskError("a field must be an expression, a scalar name, a number or {\"bump\": ...}");
}

GridSpec grid_param(const Scene& s, const Json& p, const RunFlags& flags, Real half, Real t0, Real t1, Real h) {
  const int n = s.chart->dim();
  GridSpec g;
  g.lo = RVec::Constant(n, -half);
  g.hi = RVec::Constant(n, half);
  if (p.contains("box")) {
    const Json& b = p.at("box");
    if (!b.is_array() || static_cast<int>(b.size()) != n) throw TaskError("box must list [lo, hi] for every coordinate");
    for (int i = 0; i < n; ++i) {
      const RVec lh = vector_of(b.at(static_cast<std::size_t>(i)), 2, "box entry");
      g.lo(i) = lh(0);
      g.hi(i) = lh(1);
    }
  }
  g.nodes.assign(static_cast<std::size_t>(n), integer_or(p, "nodes", flags.grid));
  if (p.contains("t")) {
    const RVec t = vector_of(p.at("t"), 2, "t");
    t0 = t(0);
    t1 = t(1);
  }
  g.t0 = t0;
  g.t1 = t1;
  g.h = number_or(p, "h", h);
  g.validate();
  return g;
}

std::vector<Point<Rational>> sample_points(const Scene& s, int count, std::uint64_t seed) {
  Draw d(seed);
  std::vector<Point<Rational>> pts;
  for (int k = 0; k < count; ++k) {
    Vec<Rational> v(s.chart->dim());
    for (int i = 0; i < v.size(); ++i) v(i) = Rational(d.integer(-5, 5), d.integer(1, 4));
    pts.emplace_back(s.chart, v);
  }
  return pts;
}

Json vec_json(const RVec& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(static_cast<double>(v(i)));
  return a;
}

void expect(TaskReport& r, const Json& spec, const std::string& got) {
  if (!spec.contains("expect")) return;
  const std::string want = spec.at("expect").get<std::string>();
  r.result["expected"] = want;
  if (want != got) {
    r.status = "fail";
    r.message = "expected " + want + ", got " + got;
  }
}

// Checks compare serialized results; an "expect" expression is parsed and reserialized.
std::string canonical_expect(const Scene& s, const Json& spec) {
  if (!spec.contains("expect")) return {};
  try {
    return serialize(parse_expression(spec.at("expect").get<std::string>(), s.chart, &s.symbols));
  } catch (const Error&) {
    return spec.at("expect").get<std::string>();
  }
}

void run_check(const Scene& s, const Json& spec, TaskReport& r, std::uint64_t seed) {
  const std::string what = need(spec, "check").get<std::string>();
  r.name = what;
  const auto pts = sample_points(s, integer_or(spec, "samples", 0), seed);
  const Samples samples(pts);
  r.status = "pass";
  if (what == "contact") {
    ContactReport c = is_contact(form_param(s, spec, "form"), samples);
    r.result["contact"] = c.contact();
    r.result["status"] = to_string(c.report.status());
    r.result["top_form"] = serialize(c.top_form);
    if (!c.contact()) {
      r.status = "fail";
      r.message = std::string("not contact: ") + to_string(c.report.status());
    }
    expect(r, spec, c.contact() ? "contact" : "not_contact");
  } else if (what == "nondegenerate") {
    NondegReport n = nondegeneracy_report(form_param(s, spec, "form"), samples);
    r.result["status"] = to_string(n.status());
    r.result["top_power"] = serialize(n.top_power);
    if (!n.nondegenerate()) r.status = "fail";
  } else if (what == "classify") {
    Classification c = classify_2form(form_param(s, spec, "form"), samples);
    r.result["kind"] = to_string(c.kind);
    if (c.theta) r.result["theta"] = serialize(*c.theta);
    const bool good = c.kind == Classification::Kind::Symplectic || c.kind == Classification::Kind::LCS;
    if (!good && !spec.contains("expect")) r.status = "fail";
    expect(r, spec, to_string(c.kind));
  } else if (what == "reeb") {
    const std::string got = serialize(reeb_field(form_param(s, spec, "form")));
    r.result["reeb"] = got;
    if (spec.contains("expect")) {
      r.result["expected"] = canonical_expect(s, spec);
      if (r.result["expected"] != got) {
        r.status = "fail";
        r.message = "expected " + r.result["expected"].get<std::string>() + ", got " + got;
      }
    }
  } else if (what == "hamiltonian") {
    ContactData C(form_param(s, spec, "form"), samples);
    const ScalarField H = parse_scalar(need(spec, "H").get<std::string>(), s.chart, &s.symbols);
    const std::string got = serialize(contact_hamiltonian(C, H));
    r.result["field"] = got;
    if (spec.contains("expect")) {
      r.result["expected"] = canonical_expect(s, spec);
      if (r.result["expected"] != got) {
        r.status = "fail";
        r.message = "expected " + r.result["expected"].get<std::string>() + ", got " + got;
      }
    }
  } else if (what == "jacobi") {
    JacobiPair P = jacobi_from_contact(ContactData(form_param(s, spec, "form"), samples));
    JacobiCheck k = jacobi_check(P);
    r.result["Lambda"] = serialize(P.Lambda);
    r.result["E"] = serialize(P.E);
    r.result["bracket_ok"] = k.bracket_ok;
    r.result["invariance_ok"] = k.invariance_ok;
    if (!k.ok()) r.status = "fail";
  } else if (what == "poisson") {
    const Expr& e = symbol(s, need(spec, "multivector"), "multivector");
    const auto* P = std::get_if<MultiVectorField>(&e);
    if (!P || (P->degree() != 2 && !P->is_zero())) throw TaskError("poisson check needs a bivector");
    MultiVectorField b = schouten_bracket(*P, *P);
    r.result["bracket"] = serialize(b);
    if (!b.is_zero()) r.status = "fail";
  } else if (what == "foliated") {
    if (!s.product) throw TaskError("foliated checks need a product chart");
    std::optional<FoliatedForm> a, w;
    try {
      if (spec.contains("alpha")) a = FoliatedForm(s.product, form_param(s, spec, "alpha"));
      if (spec.contains("omega")) w = FoliatedForm(s.product, form_param(s, spec, "omega"));
    } catch (const DomainError& e) {
      throw TaskError(e.what());
    }
    FoliatedClassification c = foliated_classify(a, w, samples);
    r.result["kind"] = to_string(c.kind);
    if (c.theta) r.result["theta"] = serialize(c.theta->form());
    if (c.kind == FoliatedClassification::Kind::None && !spec.contains("expect")) r.status = "fail";
    expect(r, spec, to_string(c.kind));
  } else {
    throw TaskError("unknown check '" + what + "'");
  }
}

std::string csv_of(const Scene& s, const Trajectory& tr) {
  std::ostringstream o;
  o << "t";
  for (int i = 0; i < s.chart->dim(); ++i) o << "," << s.chart->name(i);
  o << ",lambda\n" << std::setprecision(17);
  for (std::size_t k = 0; k < tr.t.size(); ++k) {
    o << static_cast<double>(tr.t[k]);
    for (int i = 0; i < tr.x[k].size(); ++i) o << "," << static_cast<double>(tr.x[k](i));
    o << "," << static_cast<double>(tr.lambda[k]) << "\n";
  }
  return o.str();
}

void run_flow(const Scene& s, const Json& p, TaskReport& r, std::size_t index, const RunFlags& flags) {
  const int n = s.chart->dim();
  ContactData C(form_param(s, p, "form"));
  const GridSpec g = grid_param(s, p, flags, 4, 0, 1, 1e-3L);
  FlowProblem P(NumericContact(C), field_spec(s, need(p, "H"), true), g);
  std::vector<RVec> seeds;
  const Json seeds_spec = p.contains("seeds") ? p.at("seeds") : Json(3);
  if (seeds_spec.is_number_integer()) {
    Draw d(flags.seed + index);
    const RVec c = (g.lo + g.hi) / 2, w = (g.hi - g.lo) / 8;
    for (int k = 0; k < seeds_spec.get<int>(); ++k) {
      RVec u(n);
      for (int i = 0; i < n; ++i) u(i) = c(i) + (2 * d.unit() - 1) * w(i);
      seeds.push_back(u);
    }
  } else if (seeds_spec.is_array()) {
    for (const Json& q : seeds_spec) seeds.push_back(vector_of(q, n, "seed"));
  } else {
    throw TaskError("seeds must be a count or a list of points");
  }
  if (seeds.empty()) throw TaskError("flow needs at least one seed");
  FlowResult R = integrate_contact_flow(P, seeds);
  std::vector<RVec> probes;
  for (int i = 0; i < n; ++i) probes.push_back(RVec::Unit(n, i));
  const Real conf = conformal_factor_check(P, R, probes);
  r.result["seeds"] = Json::array();
  for (const RVec& u : seeds) r.result["seeds"].push_back(vec_json(u));
  r.result["steps"] = g.steps(g.t0, g.t1);
  r.result["lambda_range"] = {static_cast<double>(R.min_lambda), static_cast<double>(R.max_lambda)};
  r.residuals["conformal"] = static_cast<double>(conf);
  r.residuals["energy"] = static_cast<double>(R.max_energy_residual);
  r.status = conf < flags.tol && R.max_energy_residual < flags.tol ? "pass" : "fail";
  for (std::size_t i = 0; i < R.trajectories.size(); ++i) {
    std::string name = "task-" + std::to_string(index);
    if (i) name += "-seed" + std::to_string(i);
    r.csv.emplace_back(name + ".csv", csv_of(s, R.trajectories[i]));
  }
}

void run_decompose(const Scene& s, const Json& p, TaskReport& r, const RunFlags& flags) {
  const int n = s.chart->dim();
  ContactData C(form_param(s, p, "form"));
  const GridSpec g = grid_param(s, p, flags, 1, 0, 1, 1e-2L);
  std::vector<FormFamily::Term> terms;
  for (const Json& t : need(p, "perturbation")) terms.push_back({axis_of(s, need(t, "axis")), field_spec(s, need(t, "coeff"), true)});
  std::vector<CoverBox> cover;
  for (const Json& b : need(p, "cover")) cover.push_back({vector_of(need(b, "lo"), n, "cover lo"), vector_of(need(b, "hi"), n, "cover hi")});
  DecompOptions opt;
  opt.max_n = flags.max_steps;
  opt.time_samples = integer_or(p, "time_samples", opt.time_samples);
  DecompResult D = primitive_decomposition(FormFamily(NumericContact(C), std::move(terms)), g, cover, opt);
  r.result["n"] = D.n;
  Json prims = Json::array();
  for (const Primitive& q : D.primitives)
    prims.push_back({{"block", q.block}, {"box", q.box}, {"axis", s.chart->name(q.axis)}});
  r.result["primitives"] = prims;
  Real worst = INFINITY;
  for (const auto& row : D.min_contact_top)
    for (Real v : row) worst = std::min(worst, v);
  r.result["all_partial_sums_contact"] = D.all_contact;
  r.residuals["reconstruction"] = static_cast<double>(D.reconstruction_residual);
  r.residuals["partition"] = static_cast<double>(D.partition_residual);
  r.residuals["min_oriented_top"] = static_cast<double>(worst);
  r.status = D.all_contact && D.reconstruction_residual <= 1e-12L && D.partition_residual <= 1e-12L ? "pass" : "fail";
}

void run_graystep(const Scene& s, const Json& p, TaskReport& r, const RunFlags& flags) {
  ContactData C(form_param(s, p, "form"));
  const GridSpec g = grid_param(s, p, flags, 1, 0, 1, 1e-2L);
  GrayOptions opt;
  opt.epsilon = number_or(p, "epsilon", opt.epsilon);
  GrayStepResult G = gray_step(C, field_spec(s, need(p, "r"), false), field_spec(s, need(p, "s"), false), g, opt);
  r.result["nodes"] = G.nodes.size();
  r.result["locality_nodes"] = G.locality_nodes;
  Real moved = 0;
  for (std::size_t i = 0; i < G.nodes.size(); ++i) moved = std::max(moved, (G.f1[i] - G.nodes[i]).cwiseAbs().maxCoeff());
  r.result["max_displacement"] = static_cast<double>(moved);
  r.residuals["conformality"] = static_cast<double>(G.conformality_residual);
  r.residuals["locality"] = static_cast<double>(G.locality_residual);
  r.status = G.conformality_residual < flags.tol && G.locality_residual < 1e-10L ? "pass" : "fail";
}

}  // namespace

TaskReport run_task(const Scene& scene, const Task& task, std::size_t index, const RunFlags& flags) {
  TaskReport r;
  r.kind = task.kind;
  r.name = task.kind;
  try {
    const Json& p = task.kind == "check" ? task.spec : task.spec.at(task.kind);
    if (!p.is_object()) throw TaskError(task.kind + " parameters must be an object");
    if (task.kind == "check") run_check(scene, p, r, flags.seed + index);
    else if (task.kind == "flow") run_flow(scene, p, r, index, flags);
    else if (task.kind == "decompose") run_decompose(scene, p, r, flags);
    else run_graystep(scene, p, r, flags);
  } catch (const std::exception& e) {
    r.status = "error";
    r.message = e.what();
    r.result = Json::object();
    r.residuals = Json::object();
    r.csv.clear();
  }
  return r;
}

}  // namespace jforge::cli
