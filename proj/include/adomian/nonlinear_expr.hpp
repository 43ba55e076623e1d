#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "adomian/polynomial.hpp"

namespace adomian {

struct ExprNode;

/// Expression tree for the nonlinear operator N[u]: the unknown u and its
/// partial derivatives, polynomial constants, sums, products and integer
/// (possibly negative) powers. Immutable; copies share structure.
class NonlinearExpr {
 public:
  /// d^dx/dx^dx d^dt/dt^dt u; (0, 0) is u itself.
  static NonlinearExpr unknown(unsigned dx = 0, unsigned dt = 0);
  static NonlinearExpr constant(Polynomial value);
  static NonlinearExpr sum(std::vector<NonlinearExpr> terms);
  static NonlinearExpr product(std::vector<NonlinearExpr> factors);
  /// Throws std::invalid_argument for exponent 0.
  static NonlinearExpr power(NonlinearExpr base, int exponent);

  const ExprNode& node() const { return *node_; }

  /// Largest dx + dt over all unknown-derivative leaves.
  unsigned max_derivative_order() const;

  /// Throws std::invalid_argument when a derivative exceeds `max_order`.
  void validate(unsigned max_order) const;

  /// Distinct (dx, dt) pairs referenced, in first-occurrence order.
  std::vector<std::pair<unsigned, unsigned>> derivatives() const;

  friend NonlinearExpr operator+(const NonlinearExpr& a, const NonlinearExpr& b) { return sum({a, b}); }
  friend NonlinearExpr operator*(const NonlinearExpr& a, const NonlinearExpr& b) { return product({a, b}); }

 private:
  explicit NonlinearExpr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;
};

struct UnknownNode {
  unsigned dx = 0;
  unsigned dt = 0;
};
struct ConstantNode {
  Polynomial value;
};
struct SumNode {
  std::vector<NonlinearExpr> terms;
};
struct ProductNode {
  std::vector<NonlinearExpr> factors;
};
struct PowerNode {
  NonlinearExpr base;
  int exponent;
};

struct ExprNode {
  std::variant<UnknownNode, ConstantNode, SumNode, ProductNode, PowerNode> value;
};

/// Numeric value of N at one point. `derivative(dx, dt)` supplies the value of
/// the corresponding derivative of u, `constant(p)` the value of a constant leaf.
/// Negative powers of a base with magnitude below `reciprocal_floor` throw
/// DivisionNearZero.
double evaluate(const NonlinearExpr& expr, const std::function<double(unsigned, unsigned)>& derivative,
                const std::function<double(const Polynomial&)>& constant, double reciprocal_floor);

/// Text form, e.g. `eps*u*dt u` or `1/5*u^-3 + 1/2*u^-2 + 1/4*u^-1`.
std::string to_string(const NonlinearExpr& expr);

/// Grammar:
///   expr    := ['-'] term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := primary ['^' int]            int may be negative: u^-3 or u^(-3)
///   primary := number | t | x | c | eps | u | deriv | '(' expr ')'
///   deriv   := ('dx' ['^' n] | 'dt' ['^' n])+ u
/// A derivative prefix binds to the following u only, so `dx u^2` is (u_x)^2.
NonlinearExpr parse_nonlinear(std::string_view text);

}  // namespace adomian
