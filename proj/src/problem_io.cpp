#include "adomian/problem_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "adomian/compose.hpp"
#include "adomian/errors.hpp"
#include "adomian/problems.hpp"

namespace adomian {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("problem file: " + what); }

Rational rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad(where + ": expected an integer or a rational string");
}

Polynomial poly(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Polynomial(j.get<long>());
  if (j.is_string()) return parse_polynomial(j.get<std::string>());
  bad(where + ": expected a polynomial string");
}

Var variable(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where + ": expected a variable name");
  const auto v = parse_var(j.get<std::string>());
  if (!v) bad(where + ": unknown variable '" + j.get<std::string>() + "'");
  return *v;
}

unsigned order(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long>() < 0) bad(where + ": expected a nonnegative integer");
  return static_cast<unsigned>(j.get<long>());
}

const json& field(const json& obj, const char* key) {
  if (!obj.contains(key)) bad(std::string("missing field '") + key + "'");
  return obj.at(key);
}

ExactPoint point(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where + ": expected an object of bindings");
  ExactPoint p;
  for (const auto& [k, v] : j.items()) p.set(variable(json(k), where), rational(v, where + "." + k));
  return p;
}

/// Integers as JSON numbers, other rationals as "n/d" strings.
nlohmann::ordered_json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

nlohmann::ordered_json point_json(const ExactPoint& p) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (Var v : kAllVars)
    if (p.has(v)) out[std::string(name(v))] = rational_json(p.at(v));
  return out;
}

}  // namespace

ProblemSpec parse_problem_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  if (!doc.is_object()) bad("top level must be an object");

  ProblemSpec p;
  const json& id = field(doc, "id");
  if (!id.is_string() || id.get<std::string>().empty()) bad("id must be a nonempty string");
  p.id = id.get<std::string>();

  for (const auto& v : field(doc, "variables")) p.independent_vars.push_back(variable(v, "variables"));

  std::vector<InversePlan::Step> steps;
  for (const auto& s : field(doc, "inverse_plan")) {
    if (!s.is_array() || s.size() != 2) bad("inverse_plan entries are [var, lower]");
    steps.push_back({variable(s[0], "inverse_plan"), rational(s[1], "inverse_plan")});
  }
  try {
    p.inverse_plan = InversePlan(std::move(steps));
  } catch (const std::invalid_argument& e) {
    bad(std::string("inverse_plan: ") + e.what());
  }

  std::vector<LinearComb::Term> rem;
  if (doc.contains("remainder"))
    for (const auto& t : doc.at("remainder")) {
      if (!t.is_array() || t.size() != 3) bad("remainder entries are [coeff, dx, dt]");
      rem.push_back({rational(t[0], "remainder"), order(t[1], "remainder"), order(t[2], "remainder")});
    }
  p.remainder = LinearComb(std::move(rem));

  const json& n = field(doc, "nonlinearity");
  if (!n.is_string()) bad("nonlinearity must be a string");
  p.nonlinearity = parse_nonlinear(n.get<std::string>());

  p.source_f = doc.contains("f") ? poly(doc.at("f"), "f") : Polynomial();
  p.phi = poly(field(doc, "phi"), "phi");

  for (const auto& c : field(doc, "conditions")) {
    if (!c.is_object()) bad("conditions entries are objects");
    Condition cond;
    cond.dx = c.contains("dx") ? order(c.at("dx"), "condition dx") : 0;
    cond.dt = c.contains("dt") ? order(c.at("dt"), "condition dt") : 0;
    cond.point = point(field(c, "at"), "condition at");
    cond.value = poly(field(c, "value"), "condition value");
    p.conditions.push_back(std::move(cond));
  }

  const json& grid = field(doc, "grid");
  const std::string label = grid.value("label", std::string());
  if (grid.contains("axes")) {
    std::vector<SampleGrid::Axis> axes;
    for (const auto& a : grid.at("axes"))
      axes.push_back({variable(field(a, "var"), "grid axis"), rational(field(a, "start"), "grid start"),
                      rational(field(a, "step"), "grid step"), order(field(a, "count"), "grid count")});
    p.default_grid = SampleGrid::cartesian(label, std::move(axes));
  } else {
    p.default_grid.label = label;
    for (const auto& pt : field(grid, "points")) p.default_grid.points.push_back(point(pt, "grid point"));
  }

  for (const auto& d : field(doc, "domain")) {
    if (!d.is_array() || d.size() != 3) bad("domain entries are [var, lo, hi]");
    p.domain.push_back({variable(d[0], "domain"), rational(d[1], "domain"), rational(d[2], "domain")});
  }

  if (doc.contains("exact") && !doc.at("exact").is_null()) {
    const json& e = doc.at("exact");
    const Polynomial den = e.contains("denominator") ? poly(e.at("denominator"), "exact") : Polynomial(1);
    if (den.is_zero()) bad("exact: zero denominator");
    p.exact = ExactSolution{RationalFunction(poly(field(e, "numerator"), "exact"), den),
                            e.value("description", std::string())};
  }

  if (doc.contains("parameters"))
    for (const auto& [k, v] : doc.at("parameters").items()) p.parameters[k] = rational(v, "parameters." + k);
  p.notes = doc.value("notes", std::string());

  const unsigned max_order = ComposeOptions{}.max_derivative_order;
  try {
    p.nonlinearity.validate(max_order);
  } catch (const std::exception& e) {
    bad(std::string("nonlinearity: ") + e.what());
  }
  return p;
}

ProblemSpec load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open problem file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem_json(ss.str());
}

namespace {

/// One top-level field per line; arrays of arrays or objects get one element per line.
std::string layout(const nlohmann::ordered_json& doc) {
  std::string out = "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : doc.items()) {
    out += "  " + nlohmann::ordered_json(key).dump() + ": ";
    const bool nested = value.is_array() && !value.empty() && (value[0].is_array() || value[0].is_object());
    if (nested) {
      out += "[\n";
      for (std::size_t k = 0; k < value.size(); ++k)
        out += "    " + value[k].dump() + (k + 1 < value.size() ? ",\n" : "\n");
      out += "  ]";
    } else if (value.is_object() && value.contains("axes")) {
      out += "{\"label\": " + value["label"].dump() + ", \"axes\": [\n";
      const auto& axes = value["axes"];
      for (std::size_t k = 0; k < axes.size(); ++k)
        out += "    " + axes[k].dump() + (k + 1 < axes.size() ? ",\n" : "\n");
      out += "  ]}";
    } else {
      out += value.dump();
    }
    out += ++i < doc.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

}  // namespace

std::string problem_to_json(const ProblemSpec& p) {
  using json = nlohmann::ordered_json;
  json doc = json::object();
  doc["id"] = p.id;
  doc["variables"] = json::array();
  for (Var v : p.independent_vars) doc["variables"].push_back(std::string(name(v)));
  doc["inverse_plan"] = json::array();
  for (const auto& s : p.inverse_plan.steps())
    doc["inverse_plan"].push_back({std::string(name(s.var)), rational_json(s.lower)});
  doc["remainder"] = json::array();
  for (const auto& t : p.remainder.terms()) doc["remainder"].push_back({rational_json(t.coeff), t.dx, t.dt});
  doc["nonlinearity"] = to_string(p.nonlinearity);
  doc["f"] = to_string(p.source_f);
  doc["phi"] = to_string(p.phi);
  doc["conditions"] = json::array();
  for (const auto& c : p.conditions)
    doc["conditions"].push_back({{"dx", c.dx}, {"dt", c.dt}, {"at", point_json(c.point)}, {"value", to_string(c.value)}});
  json grid = {{"label", p.default_grid.label}};
  if (!p.default_grid.axes.empty()) {
    grid["axes"] = json::array();
    for (const auto& a : p.default_grid.axes)
      grid["axes"].push_back(
          {{"var", std::string(name(a.var))}, {"start", rational_json(a.start)}, {"step", rational_json(a.step)}, {"count", a.count}});
  } else {
    // Explicit point lists are kept compact.
    grid["points"] = json::array();
    for (const auto& pt : p.default_grid.points) grid["points"].push_back(point_json(pt));
  }
  doc["grid"] = grid;
  doc["domain"] = json::array();
  for (const auto& d : p.domain) doc["domain"].push_back({std::string(name(d.var)), rational_json(d.lo), rational_json(d.hi)});
  if (p.exact)
    doc["exact"] = {{"numerator", to_string(p.exact->u.numerator())},
                    {"denominator", to_string(p.exact->u.denominator())},
                    {"description", p.exact->description}};
  doc["parameters"] = json::object();
  for (const auto& [k, v] : p.parameters) doc["parameters"][k] = rational_json(v);
  doc["notes"] = p.notes;
  return layout(doc);
}

ProblemSpec resolve_problem(const std::string& ref) {
  if (ref.size() > 5 && ref.ends_with(".json")) return load_problem(ref);
  return catalog(ref);
}

}  // namespace adomian
