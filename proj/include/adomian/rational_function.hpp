#pragma once

#include <string>

#include "adomian/polynomial.hpp"

namespace adomian {

/// Quotient of two polynomials, kept unsimplified. Used for closed-form exact
/// solutions such as x/(1+t).
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(Polynomial num, Polynomial den);  // throws std::invalid_argument on a zero denominator
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// Throws DivisionNearZero when the denominator vanishes at the point.
  Rational eval(const ExactPoint& point) const;
  double eval(const FloatPoint& point) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Quotient rule; the result denominator is den^2.
RationalFunction diff(const RationalFunction& f, Var v, unsigned times = 1);

std::string to_string(const RationalFunction& f);

}  // namespace adomian
