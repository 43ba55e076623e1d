#include <algorithm>

#include "adomian/problem_io.hpp"
#include "adomian/problems.hpp"
#include "adomian/scheme.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace adomian;
using testing::P;
using testing::Q;

namespace {

std::string problem_file(const std::string& id) { return std::string(ADOMIAN_PROBLEM_DIR) + "/" + id + ".json"; }

bool binds_exactly(const ExactPoint& pt, const std::vector<Var>& vars) {
  for (Var v : kAllVars)
    if (pt.has(v) != (std::find(vars.begin(), vars.end(), v) != vars.end())) return false;
  return true;
}

}  // namespace

TEST_CASE("catalog records") {
  const ProblemSpec nems = catalog("nems_vdw");
  CHECK(nems.parameters.at("alpha3") == Q("1/5"));
  CHECK(nems.parameters.at("alpha2") == Q("1/2"));
  CHECK(nems.parameters.at("alpha1") == Q("1/4"));
  CHECK(nems.linear_operator() == LinearComb::derivative(4, 0));
  CHECK(nems.remainder.is_zero());
  CHECK(nems.default_grid.points.size() == 21);

  const ProblemSpec burgers = catalog("burgers");
  CHECK(burgers.exact->u.eval(ExactPoint{{Var::x, 2}, {Var::t, 1}}) == 1);
  CHECK(burgers.default_grid.points.size() == 400);
  CHECK(burgers.remainder == LinearComb::derivative(2, 1));

  const ProblemSpec rlw = catalog("rlw");
  for (int k = 0; k < 10; ++k) {
    const Rational s(k, 3);
    CHECK(rlw.exact->u.eval(ExactPoint{{Var::x, s}, {Var::t, s}}) == 0);
  }

  const ProblemSpec heat = catalog("heat_transfer");
  CHECK(heat.remainder == LinearComb::identity());
  CHECK(heat.linear_operator() == LinearComb::derivative(0, 1));
  CHECK(heat.parameter_bindings().has(Var::eps));

  CHECK_THROWS_AS(catalog("lane_emden"), UnknownProblem);
}

TEST_CASE("catalog specs are valid and deterministic") {
  for (const auto& id : catalog_ids()) {
    CAPTURE(id);
    const ProblemSpec p = catalog(id);
    CHECK(p.id == id);
    CHECK(check_conditions(p.phi, p.conditions).passed());
    CHECK(verify_conditions(p.inverse_plan, p.phi, p.conditions).passed());
    CHECK_FALSE(p.default_grid.points.empty());
    for (const auto& pt : p.default_grid.points) CHECK(binds_exactly(pt, p.independent_vars));
    CHECK(problem_to_json(catalog(id)) == problem_to_json(p));
  }
  CHECK(catalog("nems_casimir").notes.find("no reference baseline") != std::string::npos);
}

TEST_CASE("perturbation baseline") {
  CHECK(perturbation_uprime0(0, Q("1/2")) == -1);
  for (unsigned n = 0; n < 12; ++n) CHECK(perturbation_uprime0(n, 0) == -1);
  const Rational half = Q("1/2");
  Rational power = 1;
  for (int k = 0; k < 10; ++k) power *= -half;
  CHECK(perturbation_uprime0(9, half) == -(1 - power) / (1 + half));
  // At eps = 1 the partial sums alternate between -1 and 0.
  for (unsigned k = 1; k <= 10; ++k) CHECK(perturbation_uprime0(k, 1) == (k % 2 ? 0 : -1));
}

TEST_CASE("first-order ADMP with the analytic c reproduces u'(0)") {
  for (const char* eps : {"0", "3", "1", "1/7", "-1/2", "25/3"}) {
    const CheckReport r = heat_transfer_first_order_check(Q(eps));
    CHECK_MESSAGE(r.passed(), eps);
  }
  CHECK_THROWS_AS(heat_transfer_first_order_check(-1), std::invalid_argument);
}

TEST_CASE("ADM slopes equal the perturbation partial sums") {
  const SeriesSolution adm = adm_solve(catalog("heat_transfer"), 10);
  const Polynomial eps = Polynomial::variable(Var::eps);
  for (std::size_t n = 1; n <= 10; ++n) {
    const Polynomial slope = partial_eval(diff(partial_sum(adm, n), Var::t), ExactPoint{{Var::t, 0}});
    Polynomial geometric;
    for (std::size_t k = 0; k < n; ++k) geometric -= pow(-eps, static_cast<unsigned>(k));
    CHECK(slope == geometric);
    for (const char* e : {"1/3", "2", "-5/4"})
      CHECK(eval(slope, ExactPoint{{Var::eps, Q(e)}}) == perturbation_uprime0(static_cast<unsigned>(n - 1), Q(e)));
  }
}

TEST_CASE("shipped problem files match the catalog") {
  for (const auto& id : catalog_ids()) {
    CAPTURE(id);
    const ProblemSpec loaded = load_problem(problem_file(id));
    CHECK(problem_to_json(loaded) == problem_to_json(catalog(id)));
    CHECK(resolve_problem(problem_file(id)).id == id);
    CHECK(serialize(admp_solve(loaded, 4)) == serialize(admp_solve(catalog(id), 4)));
  }
}

TEST_CASE("problem documents accept integers and rational strings") {
  const ProblemSpec p = parse_problem_json(R"({
    "id": "custom",
    "variables": ["t"],
    "inverse_plan": [["t", 0]],
    "remainder": [[1, 0, 0], ["1/2", 0, 0]],
    "nonlinearity": "u^2",
    "f": "t",
    "phi": 2,
    "conditions": [{"at": {"t": 0}, "value": 2}],
    "grid": {"label": "three", "points": [{"t": "1/3"}, {"t": "2/3"}, {"t": 1}]},
    "domain": [["t", 0, 1]],
    "parameters": {"k": "0.25"}
  })");
  CHECK(p.remainder == LinearComb({{Q("3/2"), 0, 0}}));
  CHECK(p.source_f == P("t"));
  CHECK(p.phi == 2);
  CHECK(p.default_grid.points.size() == 3);
  CHECK(p.parameters.at("k") == Q("1/4"));
  CHECK_FALSE(p.exact.has_value());
  CHECK(parse_problem_json(problem_to_json(p)).remainder == p.remainder);
  CHECK(problem_to_json(parse_problem_json(problem_to_json(p))) == problem_to_json(p));
  CHECK(adm_solve(p, 1).terms[0] == P("1/2*t^2 + 2"));
}

TEST_CASE("malformed problem documents") {
  const std::string ok = R"("id": "q", "variables": ["t"], "inverse_plan": [["t", 0]], "nonlinearity": "u",
    "phi": 1, "conditions": [], "grid": {"points": [{"t": 1}]}, "domain": [["t", 0, 1]])";
  CHECK_NOTHROW(parse_problem_json("{" + ok + "}"));
  CHECK_THROWS_AS(parse_problem_json("{" + ok), ParseError);
  CHECK_THROWS_AS(parse_problem_json("[]"), ParseError);
  CHECK_THROWS_AS(parse_problem_json("{" + ok + R"(, "nonlinearity": "w")" + "}"), ParseError);
  CHECK_THROWS_AS(parse_problem_json(R"({"id": "q"})"), ParseError);
  CHECK_THROWS_AS(parse_problem_json("{" + ok + R"(, "phi": "y")" + "}"), ParseError);
  CHECK_THROWS_AS(parse_problem_json("{" + ok + R"(, "inverse_plan": [["c", 0]])" + "}"), ParseError);
  CHECK_THROWS_AS(parse_problem_json("{" + ok + R"(, "inverse_plan": [])" + "}"), ParseError);
  CHECK_THROWS_AS(parse_problem_json("{" + ok + R"(, "nonlinearity": "dx^5 u")" + "}"), ParseError);
  CHECK_THROWS_AS(parse_problem_json("{" + ok + R"(, "remainder": [[1, -1, 0]])" + "}"), ParseError);
  CHECK_THROWS_AS(parse_problem_json("{" + ok + R"(, "exact": {"numerator": "x", "denominator": "0"})" + "}"),
                  ParseError);
  CHECK_THROWS_AS(load_problem("/nonexistent/problem.json"), Error);
  CHECK_THROWS_AS(resolve_problem("not_a_problem"), UnknownProblem);
}
