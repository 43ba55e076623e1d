#include "adomian/scheme.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "adomian/compose.hpp"
#include "adomian/errors.hpp"

namespace adomian {

std::string to_string(Method m) { return m == Method::adm ? "ADM" : "ADMP"; }

namespace {

Polynomial initial_term(const ProblemSpec& p) { return apply_inverse(p.inverse_plan, p.source_f) + p.phi; }

ComposeOptions compose_options(const ProblemSpec& p) {
  ComposeOptions o;
  o.max_derivative_order = std::max(o.max_derivative_order, p.nonlinearity.max_derivative_order());
  return o;
}

}  // namespace

SeriesSolution adm_solve(const ProblemSpec& problem, std::size_t n) {
  SeriesSolution sol{Method::adm, problem.id, {}, {}};
  SeriesComposer composer(problem.nonlinearity, compose_options(problem));
  sol.terms.push_back(initial_term(problem));
  sol.decomposition.push_back(composer.push(sol.terms.back()));
  for (std::size_t k = 1; k <= n; ++k) {
    const Polynomial& prev = sol.terms[k - 1];
    sol.terms.push_back(-apply_inverse(problem.inverse_plan, apply_linear(problem.remainder, prev) + sol.decomposition[k - 1]));
    sol.decomposition.push_back(composer.push(sol.terms.back()));
  }
  return sol;
}

SeriesSolution admp_solve(const ProblemSpec& problem, std::size_t n) {
  SeriesSolution sol{Method::admp, problem.id, {}, {}};
  SeriesComposer composer(problem.nonlinearity, compose_options(problem));
  const Polynomial c = Polynomial::variable(Var::c);
  const Polynomial one_minus_c = Polynomial(1) - c;

  // g[k] = L^-1[R v_k + B_k]
  std::vector<Polynomial> g;
  auto extend = [&] {
    sol.decomposition.push_back(composer.push(sol.terms.back()));
    const std::size_t k = sol.terms.size() - 1;
    g.push_back(apply_inverse(problem.inverse_plan, apply_linear(problem.remainder, sol.terms[k]) + sol.decomposition[k]));
  };

  sol.terms.push_back(initial_term(problem));
  extend();
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial v = -(c * g[k - 1]);
    if (k >= 2) v -= one_minus_c * g[k - 2];
    sol.terms.push_back(std::move(v));
    extend();
  }
  return sol;
}

Polynomial partial_sum(const SeriesSolution& sol, std::size_t m, const std::optional<Rational>& c_value) {
  if (m > sol.order())
    throw std::out_of_range("partial sum index " + std::to_string(m) + " exceeds order " + std::to_string(sol.order()));
  Polynomial psi;
  for (std::size_t k = 0; k <= m; ++k) psi += sol.terms[k];
  if (c_value) psi = substitute(psi, Var::c, Polynomial(*c_value));
  return psi;
}

namespace {

void require_pair(const SeriesSolution& adm, const SeriesSolution& admp, std::size_t min_len,
                  const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (adm.method != Method::adm || admp.method != Method::admp)
    throw std::invalid_argument("expected an ADM solution and an ADMP solution");
  if (adm.problem_id != admp.problem_id) throw std::invalid_argument("solutions belong to different problems");
  if (a.size() < min_len || b.size() < min_len)
    throw std::invalid_argument("need at least " + std::to_string(min_len) + " terms on both sides");
}

CheckReport relate(const std::vector<Polynomial>& u, const std::vector<Polynomial>& v, const char* ul, const char* vl) {
  const Polynomial c = Polynomial::variable(Var::c);
  const Polynomial omc = Polynomial(1) - c;
  const std::vector<Polynomial> expected{
      u[0],
      c * u[1],
      c * c * u[2] + omc * u[1],
      c * c * c * u[3] + Polynomial(2) * c * omc * u[2],
  };
  const char* forms[] = {"%v0 = %u0", "%v1 = c*%u1", "%v2 = c^2*%u2 + (1-c)*%u1", "%v3 = c^3*%u3 + 2c(1-c)*%u2"};
  CheckReport report;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    std::string label = forms[k];
    for (std::size_t pos; (pos = label.find("%u")) != std::string::npos;) label.replace(pos, 2, ul);
    for (std::size_t pos; (pos = label.find("%v")) != std::string::npos;) label.replace(pos, 2, vl);
    const Polynomial diff_poly = v[k] - expected[k];
    report.add(label, diff_poly.is_zero(), diff_poly.is_zero() ? "" : "difference " + to_string(diff_poly));
  }
  return report;
}

}  // namespace

CheckReport relate_terms(const SeriesSolution& adm, const SeriesSolution& admp) {
  require_pair(adm, admp, 4, adm.terms, admp.terms);
  return relate(adm.terms, admp.terms, "u", "v");
}

CheckReport relate_decomposition(const SeriesSolution& adm, const SeriesSolution& admp) {
  require_pair(adm, admp, 4, adm.decomposition, admp.decomposition);
  return relate(adm.decomposition, admp.decomposition, "A", "B");
}

std::string serialize(const SeriesSolution& sol) {
  std::ostringstream os;
  os << "method: " << to_string(sol.method) << "\n";
  os << "problem: " << sol.problem_id << "\n";
  os << "order: " << sol.order() << "\n";
  for (std::size_t k = 0; k < sol.terms.size(); ++k) os << "term " << k << ": " << to_string(sol.terms[k]) << "\n";
  return os.str();
}

SeriesSolution parse_solution(std::string_view text) {
  SeriesSolution sol;
  std::istringstream is{std::string(text)};
  std::string line;
  std::optional<std::size_t> order;
  bool have_method = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(": ");
    if (colon == std::string::npos) throw ParseError("malformed solution line '" + line + "'");
    const std::string key = line.substr(0, colon), value = line.substr(colon + 2);
    if (key == "method") {
      if (value == "ADM") sol.method = Method::adm;
      else if (value == "ADMP") sol.method = Method::admp;
      else throw ParseError("unknown method '" + value + "'");
      have_method = true;
    } else if (key == "problem") {
      sol.problem_id = value;
    } else if (key == "order") {
      order = std::stoul(value);
    } else if (key.rfind("term ", 0) == 0) {
      if (std::stoul(key.substr(5)) != sol.terms.size()) throw ParseError("terms out of sequence at '" + line + "'");
      sol.terms.push_back(parse_polynomial(value));
    } else if (key.rfind("# ", 0) != 0) {
      throw ParseError("unknown key '" + key + "'");
    }
  }
  if (!have_method || !order || sol.terms.size() != *order + 1)
    throw ParseError("incomplete solution document");
  return sol;
}

}  // namespace adomian
