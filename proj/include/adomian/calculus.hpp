#pragma once

#include <string>
#include <vector>

#include "adomian/polynomial.hpp"
#include "adomian/report.hpp"

namespace adomian {

/// sum coeff * d^dx/dx^dx d^dt/dt^dt, e.g. the remainder operator R.
class LinearComb {
 public:
  struct Term {
    Rational coeff;
    unsigned dx = 0;
    unsigned dt = 0;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LinearComb() = default;
  /// Merges duplicate (dx, dt) pairs and drops zero coefficients.
  explicit LinearComb(std::vector<Term> terms);

  static LinearComb identity() { return LinearComb({{1, 0, 0}}); }
  static LinearComb derivative(unsigned dx, unsigned dt) { return LinearComb({{1, dx, dt}}); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend LinearComb operator+(const LinearComb& a, const LinearComb& b);
  friend bool operator==(const LinearComb&, const LinearComb&) = default;

 private:
  std::vector<Term> terms_;
};

Polynomial apply_linear(const LinearComb& op, const Polynomial& p);

std::string to_string(const LinearComb& op);

/// Nested definite antiderivatives realizing L^-1. Steps apply innermost first:
/// each step replaces p by the integral of p in `var` from `lower` to var.
class InversePlan {
 public:
  struct Step {
    Var var;
    Rational lower;
    friend bool operator==(const Step&, const Step&) = default;
  };

  /// `steps` must be nonempty and use only t or x.
  explicit InversePlan(std::vector<Step> steps);

  const std::vector<Step>& steps() const { return steps_; }

  /// The differential operator L this plan inverts: one derivative per step.
  LinearComb linear_operator() const;

  friend bool operator==(const InversePlan&, const InversePlan&) = default;

 private:
  std::vector<Step> steps_;
};

Polynomial apply_inverse(const InversePlan& plan, const Polynomial& p);

/// d^dx/dx^dx d^dt/dt^dt u restricted to `point` equals `value`. The point may
/// bind only some variables, so `value` can be a polynomial (u(x,0) = x).
struct Condition {
  unsigned dx = 0;
  unsigned dt = 0;
  ExactPoint point;
  Polynomial value;
};

std::string describe(const Condition& cond);

/// Checks every condition on one polynomial, exactly.
CheckReport check_conditions(const Polynomial& psi, const std::vector<Condition>& conditions);

/// Checks that every psi = phi + L^-1[g] built with this plan satisfies the
/// conditions: phi must satisfy them, and L^-1 applied to a set of probe
/// monomials must satisfy their homogeneous versions.
CheckReport verify_conditions(const InversePlan& plan, const Polynomial& phi, const std::vector<Condition>& conditions);

}  // namespace adomian
