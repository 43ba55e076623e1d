#include "adomian/problems.hpp"

#include <stdexcept>

#include "adomian/errors.hpp"
#include "adomian/scheme.hpp"

namespace adomian {

SampleGrid SampleGrid::cartesian(std::string label, std::vector<Axis> axes) {
  SampleGrid g;
  g.label = std::move(label);
  g.points.emplace_back();
  for (const auto& axis : axes) {
    std::vector<ExactPoint> next;
    next.reserve(g.points.size() * axis.count);
    for (const auto& p : g.points)
      for (unsigned i = 0; i < axis.count; ++i) {
        ExactPoint q = p;
        q.set(axis.var, axis.start + axis.step * i);
        next.push_back(std::move(q));
      }
    g.points = std::move(next);
  }
  g.axes = std::move(axes);
  return g;
}

ExactPoint ProblemSpec::parameter_bindings() const {
  ExactPoint out;
  for (const auto& [key, value] : parameters)
    if (const auto v = parse_var(key)) out.set(*v, value);
  return out;
}

namespace {

Polynomial var(Var v) { return Polynomial::variable(v); }

ProblemSpec heat_transfer() {
  ProblemSpec p;
  p.id = "heat_transfer";
  p.independent_vars = {Var::t};
  p.inverse_plan = InversePlan({{Var::t, 0}});
  p.remainder = LinearComb::identity();
  p.nonlinearity = parse_nonlinear("eps*u*dt u");
  p.source_f = 0;
  p.phi = 1;
  p.conditions = {{0, 0, ExactPoint{{Var::t, 0}}, 1}};
  p.default_grid = SampleGrid::cartesian("t_j = j/20, j = 1..20", {{Var::t, Rational(1, 20), Rational(1, 20), 20}});
  p.domain = {{Var::t, 0, 1}};
  p.parameters = {{"eps", 1}};
  p.notes = "(1 + eps*u) u' + u = 0, u(0) = 1; known slope u'(0) = -1/(1+eps), analytic optimum c = 1/(1+eps)";
  return p;
}

ProblemSpec nems(int k) {
  ProblemSpec p;
  p.id = k == 3 ? "nems_vdw" : "nems_casimir";
  p.independent_vars = {Var::x};
  p.inverse_plan = InversePlan({{Var::x, 1}, {Var::x, 1}, {Var::x, 0}, {Var::x, 0}});
  p.remainder = LinearComb();
  p.nonlinearity = parse_nonlinear(k == 3 ? "1/5*u^-3 + 1/2*u^-2 + 1/4*u^-1" : "1/5*u^-4 + 1/2*u^-2 + 1/4*u^-1");
  p.source_f = 0;
  p.phi = 1;
  p.conditions = {
      {0, 0, ExactPoint{{Var::x, 0}}, 1},
      {1, 0, ExactPoint{{Var::x, 0}}, 0},
      {2, 0, ExactPoint{{Var::x, 1}}, 0},
      {3, 0, ExactPoint{{Var::x, 1}}, 0},
  };
  p.default_grid = SampleGrid::cartesian("x_j = j/20, j = 0..20", {{Var::x, 0, Rational(1, 20), 21}});
  p.domain = {{Var::x, 0, 1}};
  p.parameters = {{k == 3 ? "alpha3" : "alpha4", Rational(1, 5)}, {"alpha2", Rational(1, 2)}, {"alpha1", Rational(1, 4)}};
  p.notes = k == 3 ? "u'''' + alpha3/u^3 + alpha2/u^2 + alpha1/u = 0 (van der Waals cantilever)"
                   : "u'''' + alpha4/u^4 + alpha2/u^2 + alpha1/u = 0 (Casimir cantilever); no reference baseline";
  return p;
}

ProblemSpec wave(bool rlw) {
  ProblemSpec p;
  p.id = rlw ? "rlw" : "burgers";
  p.independent_vars = {Var::x, Var::t};
  p.inverse_plan = InversePlan({{Var::t, 0}});
  p.remainder = rlw ? LinearComb({{1, 1, 0}, {1, 2, 1}}) : LinearComb({{1, 2, 1}});
  p.nonlinearity = parse_nonlinear("u*dx u");
  p.source_f = 0;
  p.phi = var(Var::x);
  p.conditions = {{0, 0, ExactPoint{{Var::t, 0}}, var(Var::x)}};
  p.default_grid = SampleGrid::cartesian("(x_i, t_j) = (i/2, j/20), i, j = 1..20",
                                         {{Var::x, Rational(1, 2), Rational(1, 2), 20},
                                          {Var::t, Rational(1, 20), Rational(1, 20), 20}});
  p.domain = {{Var::x, Rational(1, 2), 10}, {Var::t, Rational(1, 20), 1}};
  const Polynomial one_plus_t = Polynomial(1) + var(Var::t);
  if (rlw) {
    p.exact = ExactSolution{RationalFunction(var(Var::x) - var(Var::t), one_plus_t), "(x - t)/(1 + t)"};
    p.notes = "u_t + u_x + u u_x + u_xxt = 0, u(x,0) = x";
  } else {
    p.exact = ExactSolution{RationalFunction(var(Var::x), one_plus_t), "x/(1 + t)"};
    p.notes = "u_t + u u_x + u_xxt = 0, u(x,0) = x";
  }
  return p;
}

}  // namespace

std::vector<std::string> catalog_ids() { return {"heat_transfer", "nems_vdw", "burgers", "rlw", "nems_casimir"}; }

ProblemSpec catalog(const std::string& id) {
  ProblemSpec p;
  if (id == "heat_transfer") p = heat_transfer();
  else if (id == "nems_vdw") p = nems(3);
  else if (id == "nems_casimir") p = nems(4);
  else if (id == "burgers") p = wave(false);
  else if (id == "rlw") p = wave(true);
  else throw UnknownProblem(id);

  const CheckReport report = verify_conditions(p.inverse_plan, p.phi, p.conditions);
  if (!report.passed()) throw std::logic_error("catalog problem '" + id + "' fails its own conditions");
  return p;
}

Rational perturbation_uprime0(unsigned n, const Rational& eps) {
  Rational sum = 0, term = 1;
  for (unsigned k = 0; k <= n; ++k) {
    sum += term;
    term *= -eps;
  }
  return -sum;
}

CheckReport heat_transfer_first_order_check(const Rational& eps) {
  if (eps == -1) throw std::invalid_argument("eps = -1 makes 1/(1+eps) undefined");
  const ProblemSpec p = heat_transfer();
  const SeriesSolution sol = admp_solve(p, 1);
  const Rational c = 1 / (1 + eps);
  const Polynomial slope = partial_eval(diff(partial_sum(sol, 1), Var::t), ExactPoint{{Var::t, 0}});
  const Rational got = eval(slope, ExactPoint{{Var::c, c}, {Var::eps, eps}});
  const Rational want = -1 / (1 + eps);
  CheckReport report;
  report.add("psi_1'(0, 1/(1+eps)) = -1/(1+eps) at eps = " + to_string(eps), got == want,
             "got " + to_string(got) + ", want " + to_string(want));
  return report;
}

}  // namespace adomian
