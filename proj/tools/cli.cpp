#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "adomian/compose.hpp"
#include "adomian/errors.hpp"
#include "adomian/problem_io.hpp"
#include "adomian/problems.hpp"
#include "adomian/residual.hpp"
#include "adomian/scheme.hpp"

namespace adomian::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::vector<std::string> problems;
  int order = 10;
  int order_max = 10;
  std::string method = "admp";
  std::string c = "optimal";
  std::string eps;
  std::string grid;
  std::string bracket = "0.1,2.0";
  double tol = 1e-8;
  int seeds = 64;
  int samples = 1001;
  std::string out;
  std::string format = "csv";
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::pair<double, double> parse_bracket(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--bracket: expected 'lo,hi', got '" + text + "'");
  try {
    const double lo = to_double(parse_rational(text.substr(0, comma)));
    const double hi = to_double(parse_rational(text.substr(comma + 1)));
    if (!(lo < hi)) throw UsageError("--bracket: lo must be below hi");
    return {lo, hi};
  } catch (const ParseError& e) {
    throw UsageError(std::string("--bracket: ") + e.what());
  }
}

/// "x=start:step:count,t=start:step:count"; the last axis varies fastest.
SampleGrid parse_grid(const std::string& text) {
  std::vector<SampleGrid::Axis> axes;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto eq = item.find('=');
    const auto c1 = item.find(':', eq == std::string::npos ? 0 : eq);
    const auto c2 = c1 == std::string::npos ? c1 : item.find(':', c1 + 1);
    if (eq == std::string::npos || c2 == std::string::npos)
      throw UsageError("--grid: expected var=start:step:count, got '" + item + "'");
    const auto v = parse_var(item.substr(0, eq));
    if (!v || (*v != Var::x && *v != Var::t)) throw UsageError("--grid: axis must be x or t in '" + item + "'");
    try {
      const long count = std::stol(item.substr(c2 + 1));
      if (count <= 0) throw UsageError("--grid: count must be positive in '" + item + "'");
      axes.push_back({*v, parse_rational(item.substr(eq + 1, c1 - eq - 1)),
                      parse_rational(item.substr(c1 + 1, c2 - c1 - 1)), static_cast<unsigned>(count)});
    } catch (const ParseError& e) {
      throw UsageError(std::string("--grid: ") + e.what());
    } catch (const std::logic_error&) {
      throw UsageError("--grid: bad count in '" + item + "'");
    }
  }
  if (axes.empty()) throw UsageError("--grid: no axes given");
  return SampleGrid::cartesian("--grid " + text, std::move(axes));
}

class Session {
 public:
  Session(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  ProblemSpec problem(const std::string& ref) const {
    ProblemSpec p = resolve_problem(ref);
    if (!cfg_.eps.empty()) {
      try {
        p.parameters["eps"] = parse_rational(cfg_.eps);
      } catch (const ParseError& e) {
        throw UsageError(std::string("--eps: ") + e.what());
      }
    }
    return p;
  }

  const ProblemSpec& single_problem() {
    if (cfg_.problems.size() != 1) throw UsageError("--problem: exactly one problem is required");
    if (!problem_) problem_ = problem(cfg_.problems.front());
    return *problem_;
  }

  SampleGrid grid() {
    const ProblemSpec& p = single_problem();
    SampleGrid g = cfg_.grid.empty() ? p.default_grid : parse_grid(cfg_.grid);
    for (const auto& pt : g.points)
      for (Var v : p.independent_vars)
        if (!pt.has(v)) throw UsageError("--grid: problem '" + p.id + "' needs axis " + std::string(name(v)));
    return g;
  }

  void header(const std::string& command) {
    line("command", command);
    if (problem_) {
      line("problem", problem_->id);
      for (const auto& [k, v] : problem_->parameters) line("parameter " + k, to_string(v));
    }
  }

  void line(const std::string& key, const std::string& value) { out_ << "# " << key << ": " << value << "\n"; }

  std::ostream& out() { return out_; }

  OptimizeResult optimize(const Polynomial& psi) {
    OptimizeOptions opts;
    opts.seeds = cfg_.seeds;
    return optimal_c(single_problem(), psi, grid(), parse_bracket(cfg_.bracket), cfg_.tol, opts);
  }

  void optimizer_header() {
    line("bracket", cfg_.bracket);
    line("tol", num(cfg_.tol));
    line("seeds", std::to_string(cfg_.seeds));
    line("grid", grid().label);
  }

  /// Resolves --c to a number: a literal, or the optimum of E at `psi`.
  double c_value(const Polynomial& psi) {
    if (cfg_.c == "optimal") {
      optimizer_header();
      const double c = optimize(psi).c_star;
      line("c_star", num(c));
      return c;
    }
    if (cfg_.c == "symbolic") throw UsageError("--c: a numeric value or 'optimal' is required here");
    try {
      return to_double(parse_rational(cfg_.c));
    } catch (const ParseError& e) {
      throw UsageError(std::string("--c: ") + e.what());
    }
  }

 private:
  const Config& cfg_;
  std::ostream& out_;
  std::optional<ProblemSpec> problem_;
};

Method parse_method(const std::string& m) {
  if (m == "adm") return Method::adm;
  if (m == "admp") return Method::admp;
  throw UsageError("--method: expected adm or admp, got '" + m + "'");
}

SeriesSolution solve(const ProblemSpec& p, Method m, int order) {
  return m == Method::adm ? adm_solve(p, order) : admp_solve(p, order);
}

int cmd_solve(const Config& cfg, Session& s) {
  const ProblemSpec& p = s.single_problem();
  const Method m = parse_method(cfg.method);
  SeriesSolution sol = solve(p, m, cfg.order);
  s.header("solve");
  std::optional<Rational> c;
  if (m == Method::admp && cfg.c != "symbolic") {
    if (cfg.c == "optimal") {
      // c is reported to 9 significant digits and substituted as that decimal.
      c = parse_rational(num(s.c_value(partial_sum(sol, sol.order()))));
    } else {
      c = parse_rational(cfg.c);
    }
    s.line("c", to_string(*c));
  }
  for (auto& term : sol.terms) {
    if (c) term = substitute(term, Var::c, *c);
    if (!cfg.eps.empty()) term = substitute(term, Var::eps, parse_rational(cfg.eps));
  }
  if (cfg.format == "csv") {
    s.out() << "k,term\n";
    for (std::size_t k = 0; k < sol.terms.size(); ++k) s.out() << k << ",\"" << to_string(sol.terms[k]) << "\"\n";
  } else {
    s.out() << serialize(sol);
  }
  return kOk;
}

int cmd_optimize(const Config& cfg, Session& s) {
  const ProblemSpec& p = s.single_problem();
  const SeriesSolution sol = admp_solve(p, cfg.order);
  s.header("optimize");
  s.line("order", std::to_string(cfg.order));
  s.optimizer_header();
  if (p.id == "heat_transfer" && p.parameters.count("eps"))
    s.line("analytic c = 1/(1+eps)", num(to_double(1 / (1 + p.parameters.at("eps")))));
  const OptimizeResult r = s.optimize(partial_sum(sol, sol.order()));
  if (cfg.format == "csv") {
    s.out() << "n,c_star,E_at_c_star,E_prime_at_c_star,evaluations\n";
    s.out() << cfg.order << "," << num(r.c_star) << "," << num(r.e_at_c_star) << "," << num(r.e_prime_at_c_star)
            << "," << r.evaluations << "\n";
  } else {
    s.out() << "c_star: " << num(r.c_star) << "\nE_at_c_star: " << num(r.e_at_c_star)
            << "\nE_prime_at_c_star: " << num(r.e_prime_at_c_star) << "\nevaluations: " << r.evaluations << "\n";
  }
  return kOk;
}

int cmd_table1(const Config& cfg, Session& s) {
  const ProblemSpec& p = s.single_problem();
  if (cfg.order_max < 1) throw UsageError("--order-max: must be at least 1");
  const SeriesSolution adm = adm_solve(p, cfg.order_max);
  const SeriesSolution admp = admp_solve(p, cfg.order_max);
  s.header("table1");
  s.line("order_max", std::to_string(cfg.order_max));
  s.optimizer_header();
  s.line("MER samples per axis", std::to_string(cfg.samples));
  s.line("MER domain", [&] {
    std::string d;
    for (const auto& iv : p.domain) d += (d.empty() ? "" : ", ") + to_string(iv.lo) + " <= " + std::string(name(iv.var)) + " <= " + to_string(iv.hi);
    return d;
  }());
  std::vector<std::string> rows;
  s.out() << "n,c_star,E_at_c_star,MER_admp,MER_adm\n";
  for (int n = 1; n <= cfg.order_max; ++n) {
    const Polynomial psi = partial_sum(admp, n);
    const OptimizeResult r = s.optimize(psi);
    const double mer_admp = max_error_remainder(p, psi, r.c_star, p.domain, cfg.samples).value;
    const double mer_adm = max_error_remainder(p, partial_sum(adm, n), 1.0, p.domain, cfg.samples).value;
    s.out() << n << "," << num(r.c_star) << "," << num(r.e_at_c_star) << "," << num(mer_admp) << "," << num(mer_adm)
            << "\n";
  }
  return kOk;
}

void field_row(Session& s, const ExactPoint& pt, double c, double value) {
  auto coord = [&](Var v) { return pt.has(v) ? num(to_double(pt.at(v))) : std::string(); };
  s.out() << coord(Var::x) << "," << coord(Var::t) << "," << num(c) << "," << num(value) << "\n";
}

int cmd_residual_field(const Config& cfg, Session& s) {
  const ProblemSpec& p = s.single_problem();
  const SeriesSolution sol = parse_method(cfg.method) == Method::adm ? adm_solve(p, cfg.order) : admp_solve(p, cfg.order);
  const Polynomial psi = partial_sum(sol, sol.order());
  s.header("residual-field");
  s.line("method", to_string(sol.method));
  s.line("order", std::to_string(cfg.order));
  const double c = sol.method == Method::adm ? 1.0 : s.c_value(psi);
  const SampleGrid g = s.grid();
  s.line("field grid", g.label);
  const ResidualModel model(p, psi);
  s.out() << "x,t,c,residual\n";
  for (const auto& pt : g.points) field_row(s, pt, c, model(to_float(pt), c));
  return kOk;
}

int cmd_error_field(const Config& cfg, Session& s) {
  const ProblemSpec& p = s.single_problem();
  if (!p.exact) throw UsageError("--problem: '" + p.id + "' has no exact solution");
  const SeriesSolution sol = parse_method(cfg.method) == Method::adm ? adm_solve(p, cfg.order) : admp_solve(p, cfg.order);
  const Polynomial psi = partial_sum(sol, sol.order());
  s.header("error-field");
  s.line("method", to_string(sol.method));
  s.line("order", std::to_string(cfg.order));
  s.line("exact", p.exact->description);
  const double c = sol.method == Method::adm ? 1.0 : s.c_value(psi);
  const SampleGrid g = s.grid();
  s.line("field grid", g.label);
  s.line("error", "psi_n(x, t, c) - u_exact(x, t), exact arithmetic at c as printed");
  const Rational c_exact = parse_rational(num(c));
  s.out() << "x,t,c,error\n";
  for (const auto& pt : g.points)
    field_row(s, pt, c, to_double(error_vs_exact(psi, p.exact->u, pt, c_exact)));
  return kOk;
}

CheckReport validate(const ProblemSpec& p) {
  CheckReport r;
  r.append(verify_conditions(p.inverse_plan, p.phi, p.conditions));
  bool grid_ok = !p.default_grid.points.empty();
  for (const auto& pt : p.default_grid.points)
    for (Var v : kAllVars) {
      const bool wanted = std::find(p.independent_vars.begin(), p.independent_vars.end(), v) != p.independent_vars.end();
      if (pt.has(v) != wanted) grid_ok = false;
    }
  r.add("default grid binds exactly the independent variables", grid_ok);
  bool nonlinear_ok = true;
  std::string detail;
  try {
    p.nonlinearity.validate(ComposeOptions{}.max_derivative_order);
  } catch (const std::exception& e) {
    nonlinear_ok = false;
    detail = e.what();
  }
  r.add("nonlinearity within derivative-order bound", nonlinear_ok, detail);
  if (p.exact) {
    double worst = 0.0;
    FloatPoint params = to_float(p.parameter_bindings());
    for (const auto& pt : p.default_grid.points) {
      FloatPoint q = to_float(pt);
      for (Var v : kAllVars)
        if (params.has(v) && !q.has(v)) q.set(v, *params.get(v));
      worst = std::max(worst, std::abs(exact_solution_residual(p, p.exact->u, q)));
    }
    r.add("exact solution residual below 1e-10 on default grid", worst < 1e-10, "max |residual| = " + num(worst));
  }
  return r;
}

int cmd_validate(const Config& cfg, Session& s) {
  if (cfg.problems.empty()) throw UsageError("--problem: at least one problem is required");
  bool ok = true;
  s.line("command", "validate");
  for (const auto& ref : cfg.problems) {
    const ProblemSpec p = s.problem(ref);
    const CheckReport r = validate(p);
    for (const auto& c : r.checks)
      s.out() << (c.passed ? "PASS " : "FAIL ") << p.id << ": " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
              << "\n";
    ok = ok && r.passed();
  }
  return ok ? kOk : kValidationFailed;
}

int cmd_export(const Config&, Session& s) {
  s.out() << problem_to_json(s.single_problem());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Adomian decomposition solver with convergence-control parameter c"};
  app.require_subcommand(1);

  auto add_problem = [&](CLI::App* sub, bool many = false) {
    auto* opt = sub->add_option("--problem", cfg.problems, "catalog id or path to a .json problem file");
    if (!many) opt->expected(1);
    return opt;
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--eps", cfg.eps, "bind eps (rational) when evaluating");
    sub->add_option("--out", cfg.out, "write output to this file");
    sub->add_option("--format", cfg.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
  };
  auto add_optimizer = [&](CLI::App* sub) {
    sub->add_option("--grid", cfg.grid, "sample grid, e.g. x=0:1/20:21 or x=1/2:1/2:20,t=1/20:1/20:20");
    sub->add_option("--bracket", cfg.bracket, "search interval for c as lo,hi")->capture_default_str();
    sub->add_option("--tol", cfg.tol, "minimizer tolerance on c")->capture_default_str();
    sub->add_option("--seeds", cfg.seeds, "coarse pre-scan points")->capture_default_str()->check(CLI::Range(3, 100000));
  };
  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", cfg.order, "truncation order n")->capture_default_str()->check(CLI::Range(0, 60));
  };

  auto* solve_cmd = app.add_subcommand("solve", "compute series terms");
  add_problem(solve_cmd)->required();
  add_order(solve_cmd);
  solve_cmd->add_option("--method", cfg.method, "adm or admp")->capture_default_str();
  solve_cmd->add_option("--c", cfg.c, "number, 'optimal' or 'symbolic'");
  add_optimizer(solve_cmd);
  add_common(solve_cmd);

  auto* opt_cmd = app.add_subcommand("optimize", "minimize the averaged squared residual over c");
  add_problem(opt_cmd)->required();
  add_order(opt_cmd);
  add_optimizer(opt_cmd);
  add_common(opt_cmd);

  auto* table_cmd = app.add_subcommand("table1", "c*, E(c*), MER for ADMP and ADM at n = 1..order-max");
  add_problem(table_cmd);
  table_cmd->add_option("--order-max", cfg.order_max, "largest order")->capture_default_str()->check(CLI::Range(1, 60));
  table_cmd->add_option("--samples", cfg.samples, "MER samples per axis")->capture_default_str()->check(CLI::Range(2, 1000000));
  add_optimizer(table_cmd);
  add_common(table_cmd);

  CLI::App* field_cmds[2] = {app.add_subcommand("residual-field", "residual R_n on a grid"),
                             app.add_subcommand("error-field", "psi_n - u_exact on a grid")};
  for (auto* sub : field_cmds) {
    add_problem(sub)->required();
    add_order(sub);
    sub->add_option("--method", cfg.method, "adm (c = 1) or admp")->capture_default_str();
    sub->add_option("--c", cfg.c, "number or 'optimal'")->capture_default_str();
    add_optimizer(sub);
    add_common(sub);
  }

  auto* validate_cmd = app.add_subcommand("validate", "check conditions, grids and exact solutions");
  add_problem(validate_cmd, true)->required();
  add_common(validate_cmd);

  auto* export_cmd = app.add_subcommand("export", "print a problem as a JSON problem file");
  add_problem(export_cmd)->required();
  add_common(export_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  if (table_cmd->parsed() && cfg.problems.empty()) cfg.problems = {"nems_vdw"};
  if (solve_cmd->parsed() && solve_cmd->get_option("--c")->count() == 0) cfg.c = "symbolic";
  if (solve_cmd->parsed() && solve_cmd->get_option("--format")->count() == 0) cfg.format = "text";

  std::ostringstream buffer;
  Session session(cfg, buffer);
  int code = kOk;
  try {
    if (solve_cmd->parsed()) code = cmd_solve(cfg, session);
    else if (opt_cmd->parsed()) code = cmd_optimize(cfg, session);
    else if (table_cmd->parsed()) code = cmd_table1(cfg, session);
    else if (field_cmds[0]->parsed()) code = cmd_residual_field(cfg, session);
    else if (field_cmds[1]->parsed()) code = cmd_error_field(cfg, session);
    else if (validate_cmd->parsed()) code = cmd_validate(cfg, session);
    else code = cmd_export(cfg, session);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownProblem& e) {
    err << "usage error: --problem: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (cfg.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "usage error: --out: cannot write '" << cfg.out << "'\n";
      return kUsage;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace adomian::cli
