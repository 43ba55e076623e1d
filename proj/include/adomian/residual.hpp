#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "adomian/problem.hpp"

namespace adomian {

struct ResidualOptions {
  /// Reciprocal powers of values smaller than this in magnitude raise DivisionNearZero.
  double reciprocal_floor = 1e-12;
};

/// Polynomial in c with floating coefficients, evaluated by Horner's rule.
class CPolynomial {
 public:
  CPolynomial() = default;
  explicit CPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}
  /// `p` must contain no variable other than c.
  static CPolynomial from(const Polynomial& p);

  double operator()(double c) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * c + *it;
    return acc;
  }

 private:
  std::vector<double> coeffs_;
};

/// Error remainder L[psi] + R[psi] + N[psi] - f of one approximation psi(., c).
/// Derivative images are formed exactly; N is evaluated in double precision.
class ResidualModel {
  struct Shared;

 public:
  ResidualModel(const ProblemSpec& problem, const Polynomial& psi, ResidualOptions options = {});

  /// Residual at a point binding the independent variables.
  double operator()(const FloatPoint& point, double c) const;

  /// The residual at one exact point as a function of c alone.
  class AtPoint {
   public:
    double operator()(double c) const;

   private:
    friend class ResidualModel;
    std::shared_ptr<const Shared> shared_;
    CPolynomial linear_;
    std::vector<CPolynomial> derivs_;
    std::vector<CPolynomial> constants_;
  };

  AtPoint at(const ExactPoint& point) const;

 private:
  std::shared_ptr<const Shared> shared_;
};

double error_remainder(const ProblemSpec& problem, const Polynomial& psi, const FloatPoint& point, double c_value,
                       ResidualOptions options = {});

/// Residual of a closed-form solution (no c), used to validate exact solutions.
double exact_solution_residual(const ProblemSpec& problem, const RationalFunction& u, const FloatPoint& point,
                               ResidualOptions options = {});

/// E(c) = mean of squared residuals over a fixed sample grid. Residuals are
/// computed per point, then summed in grid order, so results do not depend on
/// evaluation order.
class AveragedResidual {
 public:
  AveragedResidual(const ProblemSpec& problem, const Polynomial& psi, const SampleGrid& grid,
                   ResidualOptions options = {});

  double operator()(double c) const;
  std::vector<double> residuals(double c) const;
  std::size_t size() const { return points_.size(); }

 private:
  ResidualModel model_;
  std::vector<ResidualModel::AtPoint> points_;
};

double averaged_residual(const ProblemSpec& problem, const Polynomial& psi, const SampleGrid& grid, double c_value,
                         ResidualOptions options = {});

struct OptimizeOptions {
  /// Evenly spaced seeds (including both ends) for the coarse pre-scan.
  int seeds = 64;
};

struct OptimizeResult {
  double c_star = 0.0;
  double e_at_c_star = 0.0;
  /// Central-difference dE/dc at c_star; near zero at a smooth minimum.
  double e_prime_at_c_star = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  int evaluations = 0;
};

/// Minimizes a scalar objective over [lo, hi]: coarse scan, then Brent refinement
/// around every interior seed (over its neighbouring cells); the best result wins.
/// Throws BracketError when no interior point beats the bracket ends.
OptimizeResult minimize_objective(const std::function<double(double)>& objective, std::pair<double, double> bracket,
                                  double tol, const OptimizeOptions& options = {});

/// Optimal convergence-control parameter: argmin of E(c) on the grid.
OptimizeResult optimal_c(const ProblemSpec& problem, const Polynomial& psi, const SampleGrid& grid,
                         std::pair<double, double> bracket = {0.1, 2.0}, double tol = 1e-8,
                         const OptimizeOptions& options = {}, ResidualOptions residual_options = {});

struct MaxResidual {
  double value = 0.0;
  FloatPoint location;
};

/// max |R_n| over the domain box: a uniform grid of `samples` points per axis,
/// then golden-section refinement around the best sample along each axis.
MaxResidual max_error_remainder(const ProblemSpec& problem, const Polynomial& psi, double c_value,
                                const std::vector<Interval>& domain, int samples = 1001,
                                ResidualOptions options = {});

/// psi(point, c) - u_exact(point).
double error_vs_exact(const Polynomial& psi, const RationalFunction& exact, const FloatPoint& point, double c_value);
/// Same, in exact arithmetic.
Rational error_vs_exact(const Polynomial& psi, const RationalFunction& exact, const ExactPoint& point,
                        const Rational& c_value);

/// max |psi - u_exact| over a grid, computed exactly and rounded once.
double max_abs_error(const Polynomial& psi, const RationalFunction& exact, const SampleGrid& grid,
                     const Rational& c_value);

}  // namespace adomian
