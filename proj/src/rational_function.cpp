#include "adomian/rational_function.hpp"

#include <stdexcept>

#include "adomian/errors.hpp"

namespace adomian {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
}

Rational RationalFunction::eval(const ExactPoint& point) const {
  const Rational d = adomian::eval(den_, point);
  if (d == 0) throw DivisionNearZero("denominator " + to_string(den_) + " vanishes");
  return adomian::eval(num_, point) / d;
}

double RationalFunction::eval(const FloatPoint& point) const {
  const double d = adomian::eval(den_, point);
  if (d == 0.0) throw DivisionNearZero("denominator " + to_string(den_) + " vanishes");
  return adomian::eval(num_, point) / d;
}

RationalFunction diff(const RationalFunction& f, Var v, unsigned times) {
  RationalFunction g = f;
  for (unsigned k = 0; k < times; ++k) {
    const Polynomial& n = g.numerator();
    const Polynomial& d = g.denominator();
    if (d.is_constant()) {
      g = RationalFunction(diff(n, v), d);
    } else {
      g = RationalFunction(diff(n, v) * d - n * diff(d, v), d * d);
    }
  }
  return g;
}

std::string to_string(const RationalFunction& f) {
  if (f.denominator() == Polynomial(1)) return to_string(f.numerator());
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

}  // namespace adomian
