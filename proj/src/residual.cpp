#include "adomian/residual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <variant>

#include "adomian/errors.hpp"
#include "adomian/minimize.hpp"

namespace adomian {

CPolynomial CPolynomial::from(const Polynomial& p) {
  std::vector<double> coeffs(p.degree(Var::c) + 1, 0.0);
  for (const auto& [m, q] : p.terms()) {
    for (Var v : kAllVars)
      if (v != Var::c && m.exponent(v) != 0) throw UnboundVariable(std::string(name(v)));
    coeffs[m.exponent(Var::c)] = q.get_d();
  }
  return CPolynomial(std::move(coeffs));
}

namespace {

void collect_constants(const NonlinearExpr& e, std::vector<const Polynomial*>& out) {
  const auto& node = e.node().value;
  if (const auto* c = std::get_if<ConstantNode>(&node)) {
    out.push_back(&c->value);
  } else if (const auto* s = std::get_if<SumNode>(&node)) {
    for (const auto& t : s->terms) collect_constants(t, out);
  } else if (const auto* p = std::get_if<ProductNode>(&node)) {
    for (const auto& f : p->factors) collect_constants(f, out);
  } else if (const auto* w = std::get_if<PowerNode>(&node)) {
    collect_constants(w->base, out);
  }
}

std::size_t find_index(const std::vector<std::pair<unsigned, unsigned>>& keys, unsigned dx, unsigned dt) {
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (keys[i].first == dx && keys[i].second == dt) return i;
  throw std::logic_error("derivative not precomputed");
}

std::size_t find_index(const std::vector<const Polynomial*>& ptrs, const Polynomial& p) {
  for (std::size_t i = 0; i < ptrs.size(); ++i)
    if (ptrs[i] == &p) return i;
  throw std::logic_error("constant not precomputed");
}

ExactPoint merged(const ExactPoint& params, const ExactPoint& point) {
  ExactPoint out = params;
  for (Var v : kAllVars)
    if (point.has(v)) out.set(v, *point.get(v));
  return out;
}

}  // namespace

struct ResidualModel::Shared {
  NonlinearExpr nonlinearity = NonlinearExpr::constant(0);
  ExactPoint parameters;
  ResidualOptions options;
  Polynomial linear_part;  // L psi + R psi - f
  std::vector<std::pair<unsigned, unsigned>> deriv_keys;
  std::vector<Polynomial> deriv_images;
  std::vector<const Polynomial*> constants;

  double evaluate_n(const std::function<double(std::size_t)>& deriv,
                    const std::function<double(std::size_t)>& constant) const {
    return evaluate(
        nonlinearity, [&](unsigned dx, unsigned dt) { return deriv(find_index(deriv_keys, dx, dt)); },
        [&](const Polynomial& p) { return constant(find_index(constants, p)); }, options.reciprocal_floor);
  }
};

ResidualModel::ResidualModel(const ProblemSpec& problem, const Polynomial& psi, ResidualOptions options) {
  auto s = std::make_shared<Shared>();
  s->nonlinearity = problem.nonlinearity;
  s->parameters = problem.parameter_bindings();
  s->options = options;
  s->linear_part = apply_linear(problem.linear_operator() + problem.remainder, psi) - problem.source_f;
  s->deriv_keys = problem.nonlinearity.derivatives();
  for (const auto& [dx, dt] : s->deriv_keys) s->deriv_images.push_back(diff(diff(psi, Var::x, dx), Var::t, dt));
  collect_constants(s->nonlinearity, s->constants);
  shared_ = std::move(s);
}

double ResidualModel::operator()(const FloatPoint& point, double c) const {
  FloatPoint full = to_float(shared_->parameters);
  for (Var v : kAllVars)
    if (point.has(v)) full.set(v, *point.get(v));
  full.set(Var::c, c);
  const Shared& s = *shared_;
  const double n = s.evaluate_n([&](std::size_t i) { return eval(s.deriv_images[i], full); },
                                [&](std::size_t i) { return eval(*s.constants[i], full); });
  return eval(s.linear_part, full) + n;
}

ResidualModel::AtPoint ResidualModel::at(const ExactPoint& point) const {
  const ExactPoint full = merged(shared_->parameters, point);
  AtPoint a;
  a.shared_ = shared_;
  a.linear_ = CPolynomial::from(partial_eval(shared_->linear_part, full));
  for (const auto& img : shared_->deriv_images) a.derivs_.push_back(CPolynomial::from(partial_eval(img, full)));
  for (const auto* cst : shared_->constants) a.constants_.push_back(CPolynomial::from(partial_eval(*cst, full)));
  return a;
}

double ResidualModel::AtPoint::operator()(double c) const {
  const double n = shared_->evaluate_n([&](std::size_t i) { return derivs_[i](c); },
                                       [&](std::size_t i) { return constants_[i](c); });
  return linear_(c) + n;
}

double error_remainder(const ProblemSpec& problem, const Polynomial& psi, const FloatPoint& point, double c_value,
                       ResidualOptions options) {
  return ResidualModel(problem, psi, options)(point, c_value);
}

double exact_solution_residual(const ProblemSpec& problem, const RationalFunction& u, const FloatPoint& point,
                               ResidualOptions options) {
  FloatPoint full = to_float(problem.parameter_bindings());
  for (Var v : kAllVars)
    if (point.has(v)) full.set(v, *point.get(v));
  auto derivative = [&](unsigned dx, unsigned dt) { return diff(diff(u, Var::x, dx), Var::t, dt).eval(full); };
  double linear = -eval(problem.source_f, full);
  const LinearComb ops = problem.linear_operator() + problem.remainder;
  for (const auto& term : ops.terms()) linear += term.coeff.get_d() * derivative(term.dx, term.dt);
  const double n = evaluate(problem.nonlinearity, derivative, [&](const Polynomial& p) { return eval(p, full); },
                            options.reciprocal_floor);
  return linear + n;
}

AveragedResidual::AveragedResidual(const ProblemSpec& problem, const Polynomial& psi, const SampleGrid& grid,
                                   ResidualOptions options)
    : model_(problem, psi, options) {
  if (grid.points.empty()) throw std::invalid_argument("sample grid '" + grid.label + "' is empty");
  points_.reserve(grid.points.size());
  for (const auto& p : grid.points) points_.push_back(model_.at(p));
}

std::vector<double> AveragedResidual::residuals(double c) const {
  std::vector<double> r(points_.size());
  std::transform(points_.begin(), points_.end(), r.begin(), [c](const auto& p) { return p(c); });
  return r;
}

double AveragedResidual::operator()(double c) const {
  const std::vector<double> r = residuals(c);
  double sum = 0.0;
  for (double v : r) sum += v * v;
  return sum / static_cast<double>(r.size());
}

double averaged_residual(const ProblemSpec& problem, const Polynomial& psi, const SampleGrid& grid, double c_value,
                         ResidualOptions options) {
  return AveragedResidual(problem, psi, grid, options)(c_value);
}

OptimizeResult minimize_objective(const std::function<double(double)>& objective, std::pair<double, double> bracket,
                                  double tol, const OptimizeOptions& options) {
  const auto [lo, hi] = bracket;
  if (!(lo < hi)) throw std::invalid_argument("bracket must satisfy low < high");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (options.seeds < 3) throw std::invalid_argument("pre-scan needs at least 3 seeds");

  const int n = options.seeds;
  std::vector<double> cs(static_cast<std::size_t>(n)), es(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    cs[i] = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
    es[i] = objective(cs[i]);
  }
  int evaluations = n;

  OptimizeResult best;
  bool found = false;
  // Every interior seed is refined over its two neighbouring cells: minima closer
  // together than the seed spacing need not show up as local minima of the scan.
  for (int i = 1; i + 1 < n; ++i) {
    const ScalarMinimum m = brent_minimize(objective, cs[i - 1], cs[i + 1], tol);
    evaluations += m.evaluations;
    // Never return something worse than the seed itself.
    const double x = m.fx <= es[i] ? m.x : cs[i];
    const double fx = std::min(m.fx, es[i]);
    if (!found || fx < best.e_at_c_star) {
      best.c_star = x;
      best.e_at_c_star = fx;
      best.bracket = {cs[i - 1], cs[i + 1]};
      found = true;
    }
  }
  const double end_min = std::min(es.front(), es.back());
  if (!found || end_min < best.e_at_c_star)
    throw BracketError("objective is smallest at a bracket end [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "]; minimum not bracketed");

  const double h = 1e-6 * std::max(1.0, std::abs(best.c_star));
  best.e_prime_at_c_star = (objective(best.c_star + h) - objective(best.c_star - h)) / (2 * h);
  best.evaluations = evaluations + 2;
  return best;
}

OptimizeResult optimal_c(const ProblemSpec& problem, const Polynomial& psi, const SampleGrid& grid,
                         std::pair<double, double> bracket, double tol, const OptimizeOptions& options,
                         ResidualOptions residual_options) {
  const AveragedResidual e(problem, psi, grid, residual_options);
  return minimize_objective([&](double c) { return e(c); }, bracket, tol, options);
}

MaxResidual max_error_remainder(const ProblemSpec& problem, const Polynomial& psi, double c_value,
                                const std::vector<Interval>& domain, int samples, ResidualOptions options) {
  if (samples < 2) throw std::invalid_argument("max_error_remainder needs at least 2 samples per axis");
  if (domain.empty()) throw std::invalid_argument("empty domain");
  const ResidualModel model(problem, psi, options);
  auto value_at = [&](const FloatPoint& p) { return std::abs(model(p, c_value)); };

  const std::size_t dims = domain.size();
  std::vector<double> lo(dims), hi(dims), step(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    lo[d] = domain[d].lo.get_d();
    hi[d] = domain[d].hi.get_d();
    step[d] = (hi[d] - lo[d]) / (samples - 1);
  }
  auto coordinate = [&](std::size_t d, int i) { return i == samples - 1 ? hi[d] : lo[d] + step[d] * i; };

  std::size_t total = 1;
  for (std::size_t d = 0; d < dims; ++d) total *= static_cast<std::size_t>(samples);
  std::vector<int> best_idx(dims, 0), idx(dims, 0);
  double best = -1.0;
  FloatPoint p;
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t d = dims; d-- > 0;) {
      idx[d] = static_cast<int>(rest % static_cast<std::size_t>(samples));
      rest /= static_cast<std::size_t>(samples);
      p.set(domain[d].var, coordinate(d, idx[d]));
    }
    const double v = value_at(p);
    if (v > best) {
      best = v;
      best_idx = idx;
    }
  }

  FloatPoint loc;
  for (std::size_t d = 0; d < dims; ++d) loc.set(domain[d].var, coordinate(d, best_idx[d]));
  for (int sweep = 0; sweep < 2; ++sweep) {
    for (std::size_t d = 0; d < dims; ++d) {
      const double centre = *loc.get(domain[d].var);
      const double a = std::max(lo[d], centre - step[d]);
      const double b = std::min(hi[d], centre + step[d]);
      FloatPoint trial = loc;
      const ScalarMinimum m = golden_section_maximize(
          [&](double s) {
            trial.set(domain[d].var, s);
            return value_at(trial);
          },
          a, b, 1e-12 * std::max(1.0, std::abs(centre)));
      if (m.fx > best) {
        best = m.fx;
        loc.set(domain[d].var, m.x);
      }
    }
  }
  return {best, loc};
}

double error_vs_exact(const Polynomial& psi, const RationalFunction& exact, const FloatPoint& point, double c_value) {
  FloatPoint full = point;
  full.set(Var::c, c_value);
  return eval(psi, full) - exact.eval(point);
}

Rational error_vs_exact(const Polynomial& psi, const RationalFunction& exact, const ExactPoint& point,
                        const Rational& c_value) {
  ExactPoint full = point;
  full.set(Var::c, c_value);
  return eval(psi, full) - exact.eval(point);
}

double max_abs_error(const Polynomial& psi, const RationalFunction& exact, const SampleGrid& grid,
                     const Rational& c_value) {
  const Polynomial bound = substitute(psi, Var::c, Polynomial(c_value));
  Rational best = 0;
  for (const auto& p : grid.points) {
    Rational e = eval(bound, p) - exact.eval(p);
    if (e < 0) e = -e;
    if (e > best) best = e;
  }
  return best.get_d();
}

}  // namespace adomian
