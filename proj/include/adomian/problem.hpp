#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adomian/calculus.hpp"
#include "adomian/nonlinear_expr.hpp"
#include "adomian/polynomial.hpp"
#include "adomian/rational_function.hpp"

namespace adomian {

/// Named set of evaluation points, each binding exactly the problem's
/// independent variables.
struct SampleGrid {
  std::string label;
  std::vector<ExactPoint> points;

  struct Axis {
    Var var;
    Rational start;
    Rational step;
    unsigned count;
  };
  /// Set when the grid was built by `cartesian`; kept for serialization.
  std::vector<Axis> axes;

  /// Cartesian product; the last axis varies fastest.
  static SampleGrid cartesian(std::string label, std::vector<Axis> axes);
};

struct Interval {
  Var var;
  Rational lo;
  Rational hi;
};

struct ExactSolution {
  RationalFunction u;
  std::string description;
};

/// One problem L[u] + R[u] + N[u] = f with its data. L is implied by the
/// inverse plan (one derivative per integration step).
struct ProblemSpec {
  std::string id;
  std::vector<Var> independent_vars;
  InversePlan inverse_plan{{{Var::t, 0}}};
  LinearComb remainder;
  NonlinearExpr nonlinearity = NonlinearExpr::constant(0);
  Polynomial source_f;
  Polynomial phi;
  std::vector<Condition> conditions;
  SampleGrid default_grid;
  std::vector<Interval> domain;
  std::optional<ExactSolution> exact;
  /// Values for the registry parameter `eps` (bound at evaluation time) and
  /// informational constants such as alpha3.
  std::map<std::string, Rational> parameters;
  std::string notes;

  LinearComb linear_operator() const { return inverse_plan.linear_operator(); }
  /// Bindings applied to every evaluation: registry-named parameters.
  ExactPoint parameter_bindings() const;
};

}  // namespace adomian
