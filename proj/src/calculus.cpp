#include "adomian/calculus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace adomian {

LinearComb::LinearComb(std::vector<Term> terms) {
  std::map<std::pair<unsigned, unsigned>, Rational> merged;
  for (const auto& t : terms) merged[{t.dx, t.dt}] += t.coeff;
  for (const auto& [key, coeff] : merged)
    if (coeff != 0) terms_.push_back({coeff, key.first, key.second});
}

LinearComb operator+(const LinearComb& a, const LinearComb& b) {
  std::vector<LinearComb::Term> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return LinearComb(std::move(all));
}

Polynomial apply_linear(const LinearComb& op, const Polynomial& p) {
  Polynomial out;
  for (const auto& t : op.terms()) out += diff(diff(p, Var::x, t.dx), Var::t, t.dt) * t.coeff;
  return out;
}

std::string to_string(const LinearComb& op) {
  if (op.is_zero()) return "0";
  std::string s;
  for (const auto& t : op.terms()) {
    if (!s.empty()) s += " + ";
    if (t.coeff != 1) s += to_string(t.coeff) + "*";
    std::string d;
    if (t.dx) d += t.dx == 1 ? "dx " : "dx^" + std::to_string(t.dx) + " ";
    if (t.dt) d += t.dt == 1 ? "dt " : "dt^" + std::to_string(t.dt) + " ";
    s += d + "u";
  }
  return s;
}

InversePlan::InversePlan(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("inverse plan needs at least one step");
  for (const auto& s : steps_)
    if (s.var != Var::t && s.var != Var::x)
      throw std::invalid_argument("inverse plan integrates only in t or x, got " + std::string(name(s.var)));
}

LinearComb InversePlan::linear_operator() const {
  unsigned dx = 0, dt = 0;
  for (const auto& s : steps_) (s.var == Var::x ? dx : dt) += 1;
  return LinearComb::derivative(dx, dt);
}

Polynomial apply_inverse(const InversePlan& plan, const Polynomial& p) {
  Polynomial acc = p;
  for (const auto& s : plan.steps()) acc = antideriv(acc, s.var, s.lower);
  return acc;
}

std::string describe(const Condition& cond) {
  std::string d = "d";
  if (cond.dx) d += "x^" + std::to_string(cond.dx);
  if (cond.dt) d += "t^" + std::to_string(cond.dt);
  std::string s = (cond.dx || cond.dt ? d + " u" : std::string("u")) + "(";
  bool first = true;
  for (Var v : kAllVars) {
    if (!cond.point.has(v)) continue;
    if (!first) s += ",";
    first = false;
    s += std::string(name(v)) + "=" + to_string(*cond.point.get(v));
  }
  return s + ") = " + to_string(cond.value);
}

namespace {

Polynomial condition_image(const Polynomial& psi, const Condition& cond) {
  return partial_eval(diff(diff(psi, Var::x, cond.dx), Var::t, cond.dt), cond.point);
}

}  // namespace

CheckReport check_conditions(const Polynomial& psi, const std::vector<Condition>& conditions) {
  CheckReport report;
  for (const auto& cond : conditions) {
    const Polynomial got = condition_image(psi, cond);
    report.add(describe(cond), got == cond.value, "got " + to_string(got));
  }
  return report;
}

CheckReport verify_conditions(const InversePlan& plan, const Polynomial& phi, const std::vector<Condition>& conditions) {
  // Probes: all monomials in t and x of total degree <= 3.
  std::vector<Polynomial> probes;
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; a + b <= 3; ++b)
      probes.push_back(Polynomial::monomial(Monomial::of(Var::t, a).with_exponent(Var::x, b), 1));

  CheckReport report;
  for (const auto& cond : conditions) {
    const Polynomial got = condition_image(phi, cond);
    bool ok = got == cond.value;
    std::string detail = ok ? "phi ok" : "phi gives " + to_string(got);
    for (const auto& probe : probes) {
      const Polynomial image = condition_image(apply_inverse(plan, probe), cond);
      if (!image.is_zero()) {
        ok = false;
        detail = "L^-1[" + to_string(probe) + "] gives " + to_string(image) + " (expected 0)";
        break;
      }
    }
    report.add(describe(cond), ok, detail);
  }
  return report;
}

}  // namespace adomian
