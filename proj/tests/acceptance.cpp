// Acceptance harness: one PASS/FAIL line per criterion, failing sub-checks below it.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "adomian/calculus.hpp"
#include "adomian/compose.hpp"
#include "adomian/problems.hpp"
#include "adomian/residual.hpp"
#include "adomian/scheme.hpp"
#include "support.hpp"

using namespace adomian;
using testing::P;
using testing::Q;

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Polynomial psi(const SeriesSolution& s, std::size_t n) { return partial_sum(s, n); }

Polynomial slope_at_zero(const Polynomial& p) { return partial_eval(diff(p, Var::t), ExactPoint{{Var::t, 0}}); }

void equal(CheckReport& r, const std::string& name, const Polynomial& got, const Polynomial& want) {
  r.add(name, got == want, got == want ? "" : "got " + to_string(got));
}

void timed(CheckReport& r, double seconds, double budget) {
  r.add("runtime below " + fmt(budget) + " s", seconds < budget, fmt(seconds) + " s");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Printed Table 1 columns, n = 1..10.
const double kTableC[] = {1.10733, 1.21693, 1.21761, 1.21455, 1.21285, 1.21203, 1.21165, 1.21147, 1.21139, 1.21135};
const double kTableMerAdmp[] = {1.01966e-1, 2.22708e-2, 2.99159e-3, 4.61594e-4, 7.58058e-5,
                                1.27843e-5, 2.17946e-6, 3.72997e-7, 6.38943e-8, 1.09425e-8};
const double kTableMerAdm[] = {2.69754e-1, 1.01782e-1, 4.26177e-2, 1.89559e-2, 8.77839e-3,
                               4.18515e-3, 2.03977e-3, 1.01153e-3, 5.08700e-4, 2.58802e-4};

double scan_argmin(const std::function<double(double)>& f, double lo, double hi, double step) {
  double best_c = lo, best = f(lo);
  const int n = static_cast<int>(std::lround((hi - lo) / step));
  for (int i = 1; i <= n; ++i) {
    const double c = lo + step * i;
    if (const double v = f(c); v < best) {
      best = v;
      best_c = c;
    }
  }
  return best_c;
}

CheckReport criterion1() {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  const SeriesSolution heat_adm = adm_solve(catalog("heat_transfer"), 3);
  const SeriesSolution heat = admp_solve(catalog("heat_transfer"), 3);
  const char* u[] = {"1", "-t", "eps*t + 1/2*t^2", "-eps^2*t - 3/2*eps*t^2 - 1/6*t^3"};
  const char* v[] = {"1", "-c*t", "(c - 1 + c^2*eps)*t + 1/2*c^2*t^2",
                     "(2*c*eps - 2*c^2*eps - c^3*eps^2)*t + (c - c^2 - 3/2*c^3*eps)*t^2 - 1/6*c^3*t^3"};
  for (int k = 0; k <= 3; ++k) {
    equal(r, "heat u_" + std::to_string(k), heat_adm.terms[k], P(u[k]));
    equal(r, "heat v_" + std::to_string(k), heat.terms[k], P(v[k]));
  }

  const SeriesSolution nems = admp_solve(catalog("nems_vdw"), 2);
  equal(r, "NEMS v_1", nems.terms[1], P("-c*(19/80*x^2 - 19/120*x^3 + 19/480*x^4)"));
  equal(r, "NEMS v_2", nems.terms[2],
        P("(-9139/288000*c^2 - 19/80 + 19/80*c)*x^2 + (703/48000*c^2 + 19/120 - 19/120*c)*x^3"
          " + (-19/480 + 19/480*c)*x^4 - 703/576000*c^2*x^6 + 703/2016000*c^2*x^7 - 703/16128000*c^2*x^8"));
  equal(r, "NEMS psi_1", psi(nems, 1), P("1 - 19/80*c*x^2 + 19/120*c*x^3 - 19/480*c*x^4"));
  equal(r, "NEMS psi_2", psi(nems, 2),
        P("1 - (9139/288000*c^2 + 19/80)*x^2 + (703/48000*c^2 + 19/120)*x^3 - 19/480*x^4"
          " - 703/576000*c^2*x^6 + 703/2016000*c^2*x^7 - 703/16128000*c^2*x^8"));

  const SeriesSolution burgers = admp_solve(catalog("burgers"), 4);
  const char* b[] = {"(1 - c*t)*x", "(1 - t + c^2*t^2)*x", "(1 - t - c^2*t^2 + 2*c*t^2 - c^3*t^3)*x",
                     "(1 - t + t^2 + 2*c^3*t^3 - 3*c^2*t^3 + c^4*t^4)*x"};
  for (int n = 1; n <= 4; ++n) equal(r, "Burgers psi_" + std::to_string(n), psi(burgers, n), P(b[n - 1]));

  const SeriesSolution rlw = admp_solve(catalog("rlw"), 3);
  const char* w[] = {"x - c*t - c*x*t", "x - t - x*t + c^2*x*t^2 + c^2*t^2",
                     "x - t - x*t - c^2*x*t^2 - c^2*t^2 + 2*c*x*t^2 + 2*c*t^2 - c^3*x*t^3 - c^3*t^3"};
  for (int n = 1; n <= 3; ++n) equal(r, "RLW psi_" + std::to_string(n), psi(rlw, n), P(w[n - 1]));
  timed(r, seconds_since(start), 10);
  return r;
}

CheckReport criterion2() {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  for (const auto& id : catalog_ids()) {
    const ProblemSpec p = catalog(id);
    const SeriesSolution u = adm_solve(p, 10), v = admp_solve(p, 10);
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; k <= 10; ++k)
      if (substitute(v.terms[k], Var::c, 1) != u.terms[k]) {
        ok = false;
        detail += "k=" + std::to_string(k) + " ";
      }
    r.add(id + " v_k(c=1) == u_k, k <= 10", ok, detail);
  }
  timed(r, seconds_since(start), 60);
  return r;
}

CheckReport criterion3() {
  CheckReport r;
  for (const char* id : {"heat_transfer", "nems_vdw", "burgers", "rlw"}) {
    const ProblemSpec p = catalog(id);
    const SeriesSolution u = adm_solve(p, 3), v = admp_solve(p, 3);
    for (const auto& c : relate_terms(u, v).checks) r.add(std::string(id) + " " + c.name, c.passed, c.detail);
    for (const auto& c : relate_decomposition(u, v).checks) r.add(std::string(id) + " " + c.name, c.passed, c.detail);
  }
  return r;
}

CheckReport criterion4() {
  CheckReport r;
  const ProblemSpec heat = catalog("heat_transfer");
  const SeriesSolution v = admp_solve(heat, 10), u = adm_solve(heat, 10);
  equal(r, "psi'_1(0,c)", slope_at_zero(psi(v, 1)), P("-c"));
  equal(r, "psi'_2(0,c)", slope_at_zero(psi(v, 2)), P("-1 + c^2*eps"));
  equal(r, "psi'_3(0,c)", slope_at_zero(psi(v, 3)), P("-1 + (2*c - c^2)*eps - c^3*eps^2"));

  testing::PolyGen gen(2024);
  int good = 0, tried = 0;
  while (tried < 50) {
    const Rational eps = gen.rational(40);
    if (eps == -1) continue;
    ++tried;
    good += heat_transfer_first_order_check(eps).passed();
  }
  r.add("psi'_1(0, 1/(1+eps)) == -1/(1+eps) for 50 random eps", good == 50, std::to_string(good) + "/50");

  const Polynomial eps = Polynomial::variable(Var::eps);
  for (std::size_t n = 1; n <= 10; ++n) {
    Polynomial geometric;
    for (std::size_t k = 0; k < n; ++k) geometric -= pow(-eps, static_cast<unsigned>(k));
    const Polynomial at_one = slope_at_zero(partial_sum(v, n, Rational(1)));
    equal(r, "psi'_" + std::to_string(n) + "(0,1) geometric", at_one, geometric);
    equal(r, "ADM slope n=" + std::to_string(n), slope_at_zero(psi(u, n)), geometric);
  }
  return r;
}

CheckReport criterion5() {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  const ProblemSpec p = catalog("nems_vdw");
  const SeriesSolution u = adm_solve(p, 10), v = admp_solve(p, 10);
  for (std::size_t n = 1; n <= 10; ++n) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    const double mer_adm = max_error_remainder(p, psi(u, n), 1.0, p.domain).value;
    const double rel = std::abs(mer_adm - kTableMerAdm[n - 1]) / kTableMerAdm[n - 1];
    r.add(tag + "MER ADM within 1%", rel <= 0.01, fmt(mer_adm) + " vs " + fmt(kTableMerAdm[n - 1]));

    const Polynomial pv = psi(v, n);
    const OptimizeResult opt = optimal_c(p, pv, p.default_grid);
    r.add(tag + "c* within 1e-3", std::abs(opt.c_star - kTableC[n - 1]) <= 1e-3,
          fmt(opt.c_star) + " vs " + fmt(kTableC[n - 1]));

    const double mer_admp = max_error_remainder(p, pv, opt.c_star, p.domain).value;
    const double ratio = mer_admp / kTableMerAdmp[n - 1];
    r.add(tag + "MER ADMP within factor 2", ratio <= 2 && ratio >= 0.5,
          fmt(mer_admp) + " vs " + fmt(kTableMerAdmp[n - 1]) + " (ratio " + fmt(ratio) + ")");
    r.add(tag + "MER ADMP < MER ADM", mer_admp < mer_adm, fmt(mer_admp) + " vs " + fmt(mer_adm));
  }
  timed(r, seconds_since(start), 300);
  return r;
}

CheckReport criterion6() {
  CheckReport r;
  for (auto [id, target] : {std::pair{"burgers", 0.8}, std::pair{"rlw", 0.81}}) {
    const ProblemSpec p = catalog(id);
    const Polynomial pv = psi(admp_solve(p, 10), 10);
    const OptimizeResult opt = optimal_c(p, pv, p.default_grid);
    r.add(std::string(id) + " c* within 0.02 of " + fmt(target), std::abs(opt.c_star - target) <= 0.02,
          fmt(opt.c_star));
    const double at_opt = max_abs_error(pv, p.exact->u, p.default_grid, Rational(opt.c_star));
    const double at_one = max_abs_error(pv, p.exact->u, p.default_grid, 1);
    r.add(std::string(id) + " sup|E_10| at c* < at c=1", at_opt < at_one, fmt(at_opt) + " vs " + fmt(at_one));
  }
  return r;
}

CheckReport criterion7() {
  CheckReport r;
  testing::PolyGen gen(77);
  const std::vector<InversePlan> plans{catalog("heat_transfer").inverse_plan, catalog("nems_vdw").inverse_plan,
                                       InversePlan({{Var::t, Q("1/2")}, {Var::x, -1}})};
  int round_trips = 0;
  for (int i = 0; i < 200; ++i) {
    const Polynomial q = gen.poly({Var::t, Var::x, Var::c, Var::eps}, 6);
    const InversePlan& plan = plans[i % plans.size()];
    round_trips += apply_linear(plan.linear_operator(), apply_inverse(plan, q)) == q;
  }
  r.add("L(L^-1 p) == p on 200 random polynomials", round_trips == 200, std::to_string(round_trips) + "/200");

  // N(u) = sum_j a_j u^j; closed forms use N^(m)(u_0).
  int closed = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Polynomial> a;
    std::vector<NonlinearExpr> parts;
    for (int j = 0; j <= 4; ++j) {
      a.push_back(gen.poly({Var::x, Var::eps}, 2, 2));
      parts.push_back(j == 0 ? NonlinearExpr::constant(a[j])
                             : NonlinearExpr::constant(a[j]) * NonlinearExpr::power(NonlinearExpr::unknown(), j));
    }
    std::vector<Polynomial> uk;
    for (int k = 0; k <= 3; ++k) uk.push_back(gen.poly({Var::t, Var::x}, 3, 3));
    auto d = [&](unsigned m) {
      Polynomial out;
      for (std::size_t j = m; j < a.size(); ++j) {
        Rational falling = 1;
        for (unsigned i = 0; i < m; ++i) falling *= static_cast<long>(j - i);
        out += a[j] * falling * pow(uk[0], static_cast<unsigned>(j - m));
      }
      return out;
    };
    const std::vector<Polynomial> A = adomian_list(NonlinearExpr::sum(parts), uk);
    closed += A.size() == 4 && A[0] == d(0) && A[1] == d(1) * uk[1] &&
              A[2] == d(1) * uk[2] + Q("1/2") * d(2) * uk[1] * uk[1] &&
              A[3] == d(1) * uk[3] + d(2) * uk[1] * uk[2] + Q("1/6") * d(3) * pow(uk[1], 3);
  }
  r.add("A_0..A_3 equal the closed forms on 50 random nonlinearities", closed == 50, std::to_string(closed) + "/50");

  for (const auto& id : catalog_ids()) {
    const ProblemSpec p = catalog(id);
    if (!p.exact) continue;
    double worst = 0;
    for (const auto& pt : p.default_grid.points)
      worst = std::max(worst, std::abs(exact_solution_residual(p, p.exact->u, to_float(pt))));
    r.add(id + " exact-solution residual below 1e-10", worst < 1e-10, "max " + fmt(worst));
  }

  const ProblemSpec nems = catalog("nems_vdw");
  const SeriesSolution v = admp_solve(nems, 10);
  for (std::size_t n = 1; n <= 10; ++n) {
    const Polynomial pv = psi(v, n);
    const AveragedResidual e(nems, pv, nems.default_grid);
    const double brent = optimal_c(nems, pv, nems.default_grid).c_star;
    const double scan = scan_argmin(e, 0.1, 2.0, 1e-4);
    r.add("n=" + std::to_string(n) + " Brent vs 1e-4 scan within 2e-4", std::abs(brent - scan) <= 2e-4,
          fmt(brent) + " vs " + fmt(scan));
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Acceptance checks for the decomposition solver");
  std::vector<int> xfail;
  bool verbose = false;
  app.add_option("--xfail", xfail, "criteria expected to fail; the run succeeds only if exactly these fail")
      ->check(CLI::Range(1, 7));
  app.add_flag("-v,--verbose", verbose, "print every sub-check");
  CLI11_PARSE(app, argc, argv);
  const std::set<int> expected(xfail.begin(), xfail.end());

  const std::vector<std::function<CheckReport()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                           criterion5, criterion6, criterion7};
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    CheckReport report;
    try {
      report = criteria[i]();
    } catch (const std::exception& e) {
      report.add("exception", false, e.what());
    }
    const bool ok = report.passed();
    if (!ok) failed.insert(id);
    const char* status = ok ? (expected.count(id) ? "PASS (expected FAIL)" : "PASS")
                            : (expected.count(id) ? "FAIL (expected)" : "FAIL");
    std::size_t n_ok = 0;
    for (const auto& c : report.checks) n_ok += c.passed;
    std::cout << "criterion " << id << ": " << status << " (" << n_ok << "/" << report.checks.size()
              << " checks)\n";
    for (const auto& c : report.checks)
      if (verbose || !c.passed)
        std::cout << "    " << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                  << "\n";
  }
  return failed == expected ? 0 : 1;
}
