#include "adomian/nonlinear_expr.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "adomian/errors.hpp"
#include "lexer.hpp"

namespace adomian {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

NonlinearExpr NonlinearExpr::unknown(unsigned dx, unsigned dt) {
  return NonlinearExpr(std::make_shared<const ExprNode>(ExprNode{UnknownNode{dx, dt}}));
}

NonlinearExpr NonlinearExpr::constant(Polynomial value) {
  return NonlinearExpr(std::make_shared<const ExprNode>(ExprNode{ConstantNode{std::move(value)}}));
}

NonlinearExpr NonlinearExpr::sum(std::vector<NonlinearExpr> terms) {
  if (terms.empty()) return constant(Polynomial(0));
  if (terms.size() == 1) return terms.front();
  return NonlinearExpr(std::make_shared<const ExprNode>(ExprNode{SumNode{std::move(terms)}}));
}

NonlinearExpr NonlinearExpr::product(std::vector<NonlinearExpr> factors) {
  if (factors.empty()) return constant(Polynomial(1));
  if (factors.size() == 1) return factors.front();
  return NonlinearExpr(std::make_shared<const ExprNode>(ExprNode{ProductNode{std::move(factors)}}));
}

NonlinearExpr NonlinearExpr::power(NonlinearExpr base, int exponent) {
  if (exponent == 0) throw std::invalid_argument("power exponent must be nonzero");
  if (exponent == 1) return base;
  return NonlinearExpr(std::make_shared<const ExprNode>(ExprNode{PowerNode{std::move(base), exponent}}));
}

unsigned NonlinearExpr::max_derivative_order() const {
  return std::visit(overloaded{
                        [](const UnknownNode& n) { return n.dx + n.dt; },
                        [](const ConstantNode&) { return 0u; },
                        [](const SumNode& n) {
                          unsigned m = 0;
                          for (const auto& e : n.terms) m = std::max(m, e.max_derivative_order());
                          return m;
                        },
                        [](const ProductNode& n) {
                          unsigned m = 0;
                          for (const auto& e : n.factors) m = std::max(m, e.max_derivative_order());
                          return m;
                        },
                        [](const PowerNode& n) { return n.base.max_derivative_order(); },
                    },
                    node_->value);
}

void NonlinearExpr::validate(unsigned max_order) const {
  const unsigned order = max_derivative_order();
  if (order > max_order)
    throw std::invalid_argument("derivative of order " + std::to_string(order) + " exceeds the maximum " +
                                std::to_string(max_order) + " in '" + to_string(*this) + "'");
}

std::vector<std::pair<unsigned, unsigned>> NonlinearExpr::derivatives() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  std::function<void(const NonlinearExpr&)> walk = [&](const NonlinearExpr& e) {
    std::visit(overloaded{
                   [&](const UnknownNode& n) {
                     std::pair<unsigned, unsigned> d{n.dx, n.dt};
                     if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
                   },
                   [](const ConstantNode&) {},
                   [&](const SumNode& n) {
                     for (const auto& c : n.terms) walk(c);
                   },
                   [&](const ProductNode& n) {
                     for (const auto& c : n.factors) walk(c);
                   },
                   [&](const PowerNode& n) { walk(n.base); },
               },
               e.node().value);
  };
  walk(*this);
  return out;
}

double evaluate(const NonlinearExpr& expr, const std::function<double(unsigned, unsigned)>& derivative,
                const std::function<double(const Polynomial&)>& constant, double reciprocal_floor) {
  return std::visit(overloaded{
                        [&](const UnknownNode& n) { return derivative(n.dx, n.dt); },
                        [&](const ConstantNode& n) { return constant(n.value); },
                        [&](const SumNode& n) {
                          double s = 0.0;
                          for (const auto& e : n.terms) s += evaluate(e, derivative, constant, reciprocal_floor);
                          return s;
                        },
                        [&](const ProductNode& n) {
                          double p = 1.0;
                          for (const auto& e : n.factors) p *= evaluate(e, derivative, constant, reciprocal_floor);
                          return p;
                        },
                        [&](const PowerNode& n) {
                          const double b = evaluate(n.base, derivative, constant, reciprocal_floor);
                          if (n.exponent < 0 && std::abs(b) < reciprocal_floor)
                            throw DivisionNearZero("reciprocal power of " + to_string(n.base) + " at value " +
                                                   std::to_string(b));
                          double r = 1.0;
                          const unsigned e = static_cast<unsigned>(std::abs(n.exponent));
                          for (unsigned k = 0; k < e; ++k) r *= b;
                          return n.exponent < 0 ? 1.0 / r : r;
                        },
                    },
                    expr.node().value);
}

namespace {

std::string unknown_text(const UnknownNode& n) {
  std::string s;
  if (n.dx) s += n.dx == 1 ? "dx " : "dx^" + std::to_string(n.dx) + " ";
  if (n.dt) s += n.dt == 1 ? "dt " : "dt^" + std::to_string(n.dt) + " ";
  return s + "u";
}

// Contexts: 0 = top level, 1 = term of a sum, 2 = factor of a product, 3 = base of a power.
std::string render(const NonlinearExpr& e, int context);

/// Splits a leading negative constant off a sum term: (-3/2)*u -> "3/2*u".
std::optional<std::string> negated_text(const NonlinearExpr& e) {
  const auto* prod = std::get_if<ProductNode>(&e.node().value);
  const auto* lead = prod ? std::get_if<ConstantNode>(&prod->factors.front().node().value)
                          : std::get_if<ConstantNode>(&e.node().value);
  if (!lead || lead->value.size() != 1 || !lead->value.is_constant() || lead->value.constant_term() >= 0)
    return std::nullopt;
  const Rational magnitude = -lead->value.constant_term();
  if (!prod) return to_string(magnitude);
  std::string s = magnitude == 1 ? "" : to_string(magnitude);
  for (std::size_t i = 1; i < prod->factors.size(); ++i) {
    if (!s.empty()) s += "*";
    s += render(prod->factors[i], 2);
  }
  return s.empty() ? "1" : s;
}

std::string render(const NonlinearExpr& e, int context) {
  return std::visit(overloaded{
                        [&](const UnknownNode& n) {
                          std::string s = unknown_text(n);
                          return (n.dx || n.dt) && context >= 3 ? "(" + s + ")" : s;
                        },
                        [&](const ConstantNode& n) {
                          std::string s = to_string(n.value);
                          bool needs = false;
                          if (n.value.size() > 1 || s.front() == '-') needs = context >= 1;
                          else if (s.find('*') != std::string::npos || s.find('^') != std::string::npos)
                            needs = context >= 3;
                          return needs ? "(" + s + ")" : s;
                        },
                        [&](const SumNode& n) {
                          std::string s;
                          for (std::size_t i = 0; i < n.terms.size(); ++i) {
                            if (const auto neg = negated_text(n.terms[i])) s += (i ? " - " : "-") + *neg;
                            else s += (i ? " + " : "") + render(n.terms[i], 1);
                          }
                          return context >= 1 ? "(" + s + ")" : s;
                        },
                        [&](const ProductNode& n) {
                          std::string s;
                          for (std::size_t i = 0; i < n.factors.size(); ++i) {
                            if (i) s += "*";
                            s += render(n.factors[i], 2);
                          }
                          return context >= 2 ? "(" + s + ")" : s;
                        },
                        [&](const PowerNode& n) {
                          return render(n.base, 3) + "^" + std::to_string(n.exponent);
                        },
                    },
                    e.node().value);
}

using detail::Lexer;
using detail::Tok;
using detail::Token;

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : lex_(src) {}

  NonlinearExpr parse() {
    NonlinearExpr e = expr();
    if (lex_.peek().kind != Tok::end) lex_.fail("unexpected '" + lex_.peek().text + "'");
    return e;
  }

 private:
  /// -e, folding the sign into a leading constant factor when there is one.
  static NonlinearExpr negate(const NonlinearExpr& e) {
    if (const auto* c = std::get_if<ConstantNode>(&e.node().value)) return NonlinearExpr::constant(-c->value);
    if (const auto* prod = std::get_if<ProductNode>(&e.node().value))
      if (const auto* c = std::get_if<ConstantNode>(&prod->factors.front().node().value)) {
        std::vector<NonlinearExpr> factors = prod->factors;
        factors.front() = NonlinearExpr::constant(-c->value);
        return NonlinearExpr::product(std::move(factors));
      }
    return NonlinearExpr::product({NonlinearExpr::constant(-1), e});
  }

  NonlinearExpr expr() {
    std::vector<NonlinearExpr> terms;
    bool neg = lex_.accept(Tok::minus);
    if (!neg) lex_.accept(Tok::plus);
    terms.push_back(neg ? negate(term()) : term());
    for (;;) {
      if (lex_.accept(Tok::plus)) terms.push_back(term());
      else if (lex_.accept(Tok::minus)) terms.push_back(negate(term()));
      else break;
    }
    return NonlinearExpr::sum(std::move(terms));
  }

  NonlinearExpr term() {
    std::vector<NonlinearExpr> factors{factor()};
    while (lex_.accept(Tok::star)) factors.push_back(factor());
    return NonlinearExpr::product(std::move(factors));
  }

  NonlinearExpr factor() {
    NonlinearExpr base = primary();
    if (lex_.accept(Tok::caret)) {
      const long e = lex_.signed_integer();
      if (e == 0) lex_.fail("exponent must be nonzero");
      return NonlinearExpr::power(base, static_cast<int>(e));
    }
    return base;
  }

  unsigned derivative_count() {
    if (!lex_.accept(Tok::caret)) return 1;
    const long n = lex_.signed_integer();
    if (n < 1) lex_.fail("derivative order must be positive");
    return static_cast<unsigned>(n);
  }

  NonlinearExpr primary() {
    const Token& tok = lex_.peek();
    switch (tok.kind) {
      case Tok::number: return NonlinearExpr::constant(Polynomial(parse_rational(lex_.take().text)));
      case Tok::lparen: {
        lex_.take();
        NonlinearExpr inner = expr();
        lex_.expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::ident: {
        if (tok.text == "u") {
          lex_.take();
          return NonlinearExpr::unknown();
        }
        if (tok.text == "dx" || tok.text == "dt") {
          unsigned dx = 0, dt = 0;
          while (lex_.peek().kind == Tok::ident && (lex_.peek().text == "dx" || lex_.peek().text == "dt")) {
            const bool is_x = lex_.take().text == "dx";
            (is_x ? dx : dt) += derivative_count();
          }
          if (lex_.peek().kind != Tok::ident || lex_.peek().text != "u") lex_.fail("derivative must apply to u");
          lex_.take();
          return NonlinearExpr::unknown(dx, dt);
        }
        const auto v = parse_var(tok.text);
        if (!v) lex_.fail("unknown symbol '" + tok.text + "' (allowed: u, dx, dt, t, x, c, eps)");
        lex_.take();
        return NonlinearExpr::constant(Polynomial::variable(*v));
      }
      default: lex_.fail("expected a number, symbol or '('");
    }
  }

  Lexer lex_;
};

}  // namespace

std::string to_string(const NonlinearExpr& expr) {
  if (const auto neg = negated_text(expr)) return "-" + *neg;
  return render(expr, 0);
}

NonlinearExpr parse_nonlinear(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace adomian
