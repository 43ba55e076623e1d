#pragma once

#include <array>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "adomian/errors.hpp"
#include "adomian/monomial.hpp"
#include "adomian/rational.hpp"
#include "adomian/variable.hpp"

namespace adomian {

/// Values for some of the registry variables.
template <class T>
class Bindings {
 public:
  Bindings() = default;
  Bindings(std::initializer_list<std::pair<Var, T>> init) {
    for (const auto& [v, value] : init) set(v, value);
  }

  Bindings& set(Var v, T value) {
    if constexpr (std::is_same_v<T, Rational>) value.canonicalize();
    values_[index(v)] = std::move(value);
    return *this;
  }
  Bindings& erase(Var v) {
    values_[index(v)].reset();
    return *this;
  }
  bool has(Var v) const { return values_[index(v)].has_value(); }
  const std::optional<T>& get(Var v) const { return values_[index(v)]; }
  const T& at(Var v) const;

  friend bool operator==(const Bindings&, const Bindings&) = default;

 private:
  std::array<std::optional<T>, kVarCount> values_{};
};

using ExactPoint = Bindings<Rational>;
using FloatPoint = Bindings<double>;

template <class T>
const T& Bindings<T>::at(Var v) const {
  const auto& value = values_[index(v)];
  if (!value) throw UnboundVariable(std::string(name(v)));
  return *value;
}

FloatPoint to_float(const ExactPoint& p);

/// Exact multivariate polynomial over the rationals in the variables {t, x, c, eps}.
///
/// Terms are kept sorted by descending monomial (graded lex) with no zero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT

  static Polynomial variable(Var v);
  static Polynomial monomial(Monomial m, const Rational& coeff);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  /// Coefficient of the unit monomial.
  Rational constant_term() const;
  Rational coefficient(Monomial m) const;
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool contains(Var v) const { return degree(v) > 0; }
  unsigned degree(Var v) const;
  unsigned total_degree() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& b) { return a *= b; }
  friend Polynomial operator*(const Rational& a, Polynomial b) { return b *= a; }
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

/// Partial derivative, applied `times` times.
Polynomial diff(const Polynomial& p, Var v, unsigned times = 1);

/// q(v) - q(lower) where q is the zero-constant antiderivative of p in v.
Polynomial antideriv(const Polynomial& p, Var v, const Rational& lower);

Rational eval(const Polynomial& p, const ExactPoint& point);
double eval(const Polynomial& p, const FloatPoint& point);

/// Binds some variables and keeps the rest symbolic.
Polynomial partial_eval(const Polynomial& p, const ExactPoint& point);

/// Composition p|_{v := q}.
Polynomial substitute(const Polynomial& p, Var v, const Polynomial& q);

Polynomial pow(const Polynomial& p, unsigned n);

/// Canonical text form, e.g. `-19/80*x^2*c + 1`.
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Parses the polynomial grammar: sums, differences and products of rational
/// constants and registry variables, parentheses and non-negative integer powers.
/// Accepts everything `to_string` produces.
Polynomial parse_polynomial(std::string_view text);

}  // namespace adomian
