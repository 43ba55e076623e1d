#include <cmath>

#include "adomian/minimize.hpp"
#include "adomian/problems.hpp"
#include "adomian/residual.hpp"
#include "adomian/scheme.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace adomian;
using testing::P;
using testing::Q;

namespace {

Polynomial admp_psi(const std::string& id, std::size_t n) { return partial_sum(admp_solve(catalog(id), n), n); }

/// u_t = f with R = N = 0; residual of psi is d(psi)/dt - f.
ProblemSpec linear_time_problem(const Polynomial& f) {
  ProblemSpec p;
  p.id = "synthetic";
  p.independent_vars = {Var::t, Var::x};
  p.source_f = f;
  p.phi = 0;
  p.domain = {{Var::t, 0, 1}, {Var::x, 0, 1}};
  return p;
}

double scan_argmin(const std::function<double(double)>& f, double lo, double hi, double step) {
  double best_c = lo, best = f(lo);
  const int n = static_cast<int>(std::lround((hi - lo) / step));
  for (int i = 1; i <= n; ++i) {
    const double c = lo + step * i;
    const double v = f(c);
    if (v < best) {
      best = v;
      best_c = c;
    }
  }
  return best_c;
}

}  // namespace

TEST_CASE("exact solutions annihilate the residual") {
  for (const char* id : {"burgers", "rlw"}) {
    const ProblemSpec p = catalog(id);
    for (const auto& pt : p.default_grid.points)
      CHECK(std::abs(exact_solution_residual(p, p.exact->u, to_float(pt))) < 1e-12);
  }
}

TEST_CASE("NEMS first-order residual at x = 1 matches a term-by-term oracle") {
  const ProblemSpec p = catalog("nems_vdw");
  const Polynomial psi = partial_sum(adm_solve(p, 1), 1);
  const double u = 1.0 - 19.0 / 80 + 19.0 / 120 - 19.0 / 480;
  const double fourth = -19.0 / 20;
  const double n = 0.2 / (u * u * u) + 0.5 / (u * u) + 0.25 / u;
  CHECK(error_remainder(p, psi, FloatPoint{{Var::x, 1.0}}, 1.0) == doctest::Approx(fourth + n).epsilon(1e-14));
}

TEST_CASE("NEMS maximal error remainders") {
  const ProblemSpec p = catalog("nems_vdw");
  const SeriesSolution adm = adm_solve(p, 10);
  const SeriesSolution admp = admp_solve(p, 5);
  const double mer10 = max_error_remainder(p, partial_sum(adm, 10), 1.0, p.domain).value;
  CHECK(mer10 == doctest::Approx(2.58802e-4).epsilon(0.01));
  const double mer5 = max_error_remainder(p, partial_sum(adm, 5), 1.0, p.domain).value;
  CHECK(mer5 == doctest::Approx(8.77839e-3).epsilon(0.01));
  const double mer5p = max_error_remainder(p, partial_sum(admp, 5), 1.21285, p.domain).value;
  CHECK(mer5p < 2 * 7.58058e-5);
  CHECK(mer5p > 7.58058e-5 / 2);
}

TEST_CASE("max_error_remainder of a constant residual") {
  const ProblemSpec p = linear_time_problem(0);
  const MaxResidual m = max_error_remainder(p, P("3*t"), 0.7, p.domain, 11);
  CHECK(m.value == doctest::Approx(3.0));
  CHECK_THROWS_AS(max_error_remainder(p, P("3*t"), 0.7, p.domain, 1), std::invalid_argument);
}

TEST_CASE("max_error_remainder refines between samples") {
  // Residual -(t - 0.3)^2 + 1 peaks at t = 0.3, between the samples 0 and 0.5.
  ProblemSpec p = linear_time_problem(0);
  p.domain = {{Var::t, 0, 1}};
  p.independent_vars = {Var::t};
  const Polynomial psi = antideriv(P("1 - (t - 3/10)^2"), Var::t, 0);
  const MaxResidual m = max_error_remainder(p, psi, 1.0, p.domain, 3);
  CHECK(m.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(*m.location.get(Var::t) == doctest::Approx(0.3).epsilon(1e-4));
}

TEST_CASE("averaged residual") {
  const ProblemSpec p = linear_time_problem(P("x^2"));
  SampleGrid one;
  one.label = "one point";
  one.points = {ExactPoint{{Var::t, 0}, {Var::x, Q("1/2")}}};
  // residual = c*(1 + x) - x^2
  const Polynomial psi = P("c*t*(1 + x)");
  CHECK(averaged_residual(p, psi, one, 2.0) == doctest::Approx(std::pow(2.0 * 1.5 - 0.25, 2)));

  const AveragedResidual e(p, psi, one);
  CHECK(e(0.25 / 1.5) == doctest::Approx(0.0));
  CHECK(e.size() == 1);

  SampleGrid empty;
  CHECK_THROWS_AS(AveragedResidual(p, psi, empty), std::invalid_argument);
}

TEST_CASE("E(c) is nonnegative and deterministic") {
  const ProblemSpec p = catalog("burgers");
  const AveragedResidual e(p, admp_psi("burgers", 6), p.default_grid);
  for (double c = 0.1; c <= 2.0; c += 0.05) {
    const double first = e(c);
    CHECK(first >= 0.0);
    CHECK(e(c) == first);
    double sum = 0.0;
    for (double r : e.residuals(c)) sum += r * r;
    CHECK(first == sum / static_cast<double>(e.size()));
  }
}

TEST_CASE("least-squares oracle for a residual linear in c") {
  const ProblemSpec p = linear_time_problem(P("x^2"));
  SampleGrid grid = SampleGrid::cartesian("x = 0..1", {{Var::t, 0, 1, 1}, {Var::x, 0, Q("1/10"), 11}});
  double ab = 0, aa = 0;
  for (int i = 0; i <= 10; ++i) {
    const double x = i / 10.0, a = 1 + x, b = x * x;
    ab += a * b;
    aa += a * a;
  }
  const OptimizeResult r = optimal_c(p, P("c*t*(1 + x)"), grid);
  CHECK(r.c_star == doctest::Approx(ab / aa).epsilon(1e-7));
  CHECK(r.c_star >= r.bracket.first);
  CHECK(r.c_star <= r.bracket.second);
  CHECK(std::abs(r.e_prime_at_c_star) < 1e-6);
}

TEST_CASE("optimizer reports an unbracketed minimum") {
  CHECK_THROWS_AS(minimize_objective([](double c) { return c; }, {0.1, 2.0}, 1e-8), BracketError);
  CHECK_THROWS_AS(minimize_objective([](double c) { return -c; }, {0.1, 2.0}, 1e-8), BracketError);
  CHECK_THROWS_AS(minimize_objective([](double c) { return c; }, {2.0, 0.1}, 1e-8), std::invalid_argument);
  const OptimizeResult r = minimize_objective([](double c) { return (c - 1) * (c - 1); }, {0.1, 2.0}, 1e-10);
  CHECK(r.c_star == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("optimizer finds the global minimum among close local minima") {
  // Minima at 0.78 and 0.81, narrower apart than the seed spacing; the deeper one wins.
  auto f = [](double c) { return std::min((c - 0.78) * (c - 0.78) + 1e-6, 3 * (c - 0.81) * (c - 0.81) + 5e-7); };
  CHECK(minimize_objective(f, {0.1, 2.0}, 1e-10).c_star == doctest::Approx(0.81).epsilon(1e-6));
}

TEST_CASE("brent and golden-section primitives") {
  const ScalarMinimum m = brent_minimize([](double x) { return std::cos(x); }, 2.0, 4.0, 1e-10);
  CHECK(m.x == doctest::Approx(M_PI).epsilon(1e-8));
  const ScalarMinimum g = golden_section_maximize([](double x) { return -(x - 0.25) * (x - 0.25); }, 0.0, 1.0, 1e-10);
  CHECK(g.x == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("NEMS optimal c") {
  const ProblemSpec p = catalog("nems_vdw");
  const SeriesSolution admp = admp_solve(p, 10);
  CHECK(std::abs(optimal_c(p, partial_sum(admp, 10), p.default_grid).c_star - 1.21135) < 1e-3);
  CHECK(std::abs(optimal_c(p, partial_sum(admp, 1), p.default_grid).c_star - 1.10733) < 1e-3);
}

TEST_CASE("Burgers E(c) is minimized near 0.8") {
  const ProblemSpec p = catalog("burgers");
  const OptimizeResult r = optimal_c(p, admp_psi("burgers", 10), p.default_grid);
  CHECK(std::abs(r.c_star - 0.8) < 0.02);
}

TEST_CASE("E(1) >= E(c*) and the optimizer agrees with an exhaustive scan") {
  for (const auto& id : catalog_ids()) {
    const ProblemSpec p = catalog(id);
    const SeriesSolution admp = admp_solve(p, 10);
    for (std::size_t n : {1, 5, 10}) {
      CAPTURE(id);
      CAPTURE(n);
      const AveragedResidual e(p, partial_sum(admp, n), p.default_grid);
      const OptimizeResult r = optimal_c(p, partial_sum(admp, n), p.default_grid);
      const double scan = scan_argmin(e, 0.1, 2.0, 1e-4);
      CHECK(std::abs(r.c_star - scan) < 2e-4);
      CHECK(e(1.0) >= r.e_at_c_star);
      CHECK(r.e_at_c_star <= e(0.1));
      CHECK(r.e_at_c_star <= e(2.0));
    }
  }
}

TEST_CASE("reciprocal powers near zero raise DivisionNearZero") {
  const ProblemSpec p = catalog("nems_vdw");
  CHECK_THROWS_AS(error_remainder(p, P("1 - x"), FloatPoint{{Var::x, 1.0}}, 1.0), DivisionNearZero);
  ResidualOptions strict;
  strict.reciprocal_floor = 10.0;
  CHECK_THROWS_AS(error_remainder(p, P("1"), FloatPoint{{Var::x, 0.5}}, 1.0, strict), DivisionNearZero);
  SampleGrid g;
  g.points = {ExactPoint{{Var::x, 1}}};
  CHECK_THROWS_AS(averaged_residual(p, P("1 - x"), g, 1.0), DivisionNearZero);
}

TEST_CASE("unbound variables are reported") {
  CHECK_THROWS_AS(CPolynomial::from(P("c + x")), UnboundVariable);
  CHECK(CPolynomial::from(P("2*c^2 - 1"))(3.0) == 17.0);
  const ProblemSpec p = catalog("burgers");
  CHECK_THROWS_AS(error_remainder(p, P("x*t"), FloatPoint{{Var::x, 1.0}}, 1.0), UnboundVariable);
}

TEST_CASE("heat transfer residual binds eps from the problem parameters") {
  ProblemSpec p = catalog("heat_transfer");
  const Polynomial psi = admp_psi("heat_transfer", 1);  // 1 - c t
  // (1 + eps u) u' + u at t = 1/2, c = 1/2, eps = 1: u = 3/4, u' = -1/2.
  CHECK(error_remainder(p, psi, FloatPoint{{Var::t, 0.5}}, 0.5) == doctest::Approx(-0.5 - 0.375 + 0.75));
  p.parameters["eps"] = 0;
  CHECK(error_remainder(p, psi, FloatPoint{{Var::t, 0.5}}, 0.5) == doctest::Approx(-0.5 + 0.75));
}

TEST_CASE("errors against exact solutions") {
  const ProblemSpec p = catalog("burgers");
  const SeriesSolution sol = admp_solve(p, 10);
  for (std::size_t n : {0, 3, 10})
    for (int i = 1; i <= 20; ++i) {
      const Rational x(i, 2);
      CHECK(error_vs_exact(partial_sum(sol, n), p.exact->u, ExactPoint{{Var::x, x}, {Var::t, 0}}, Q("4/5")) == 0);
    }
  const Polynomial psi = partial_sum(sol, 10);
  const double at_opt = max_abs_error(psi, p.exact->u, p.default_grid, Q("4/5"));
  const double at_one = max_abs_error(psi, p.exact->u, p.default_grid, 1);
  CHECK(at_opt < at_one);
  const FloatPoint pt{{Var::x, 3.0}, {Var::t, 0.5}};
  CHECK(error_vs_exact(psi, p.exact->u, pt, 0.8) ==
        doctest::Approx(to_double(error_vs_exact(psi, p.exact->u, ExactPoint{{Var::x, 3}, {Var::t, Q("1/2")}}, Q("4/5")))));

  const ProblemSpec rlw = catalog("rlw");
  const Polynomial psi_rlw = admp_psi("rlw", 10);
  CHECK(max_abs_error(psi_rlw, rlw.exact->u, rlw.default_grid, Q("81/100")) <
        max_abs_error(psi_rlw, rlw.exact->u, rlw.default_grid, 1));
}
