#include "adomian/compose.hpp"

#include <stdexcept>
#include <variant>

#include "adomian/errors.hpp"

namespace adomian {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

TruncatedSeries compose_node(const NonlinearExpr& e, std::span<const Polynomial> terms, std::size_t order) {
  return std::visit(
      overloaded{
          [&](const UnknownNode& n) {
            std::vector<Polynomial> c(order + 1);
            for (std::size_t k = 0; k <= order && k < terms.size(); ++k)
              c[k] = diff(diff(terms[k], Var::x, n.dx), Var::t, n.dt);
            return TruncatedSeries(std::move(c));
          },
          [&](const ConstantNode& n) { return TruncatedSeries::constant(n.value, order); },
          [&](const SumNode& n) {
            TruncatedSeries acc = compose_node(n.terms.front(), terms, order);
            for (std::size_t i = 1; i < n.terms.size(); ++i) acc = series_add(acc, compose_node(n.terms[i], terms, order));
            return acc;
          },
          [&](const ProductNode& n) {
            TruncatedSeries acc = compose_node(n.factors.front(), terms, order);
            for (std::size_t i = 1; i < n.factors.size(); ++i)
              acc = series_mul(acc, compose_node(n.factors[i], terms, order));
            return acc;
          },
          [&](const PowerNode& n) { return series_int_pow(compose_node(n.base, terms, order), n.exponent); },
      },
      e.node().value);
}

}  // namespace

TruncatedSeries compose(const NonlinearExpr& n, std::span<const Polynomial> terms, std::size_t order,
                        const ComposeOptions& options) {
  if (terms.empty()) throw std::invalid_argument("compose: at least one term is required");
  n.validate(options.max_derivative_order);
  return compose_node(n, terms, order);
}

std::vector<Polynomial> adomian_list(const NonlinearExpr& n, std::span<const Polynomial> terms,
                                     const ComposeOptions& options) {
  if (terms.empty()) throw std::invalid_argument("adomian_list: at least one term is required");
  const TruncatedSeries s = compose(n, terms, terms.size() - 1, options);
  return {s.coeffs().begin(), s.coeffs().end()};
}

// ---------------------------------------------------------------------------
// Incremental composition
//
// The expression is flattened into a list of slots, children before parents.
// Every slot stores the coefficients produced so far; pushing a term computes
// coefficient k of each slot from coefficients 0..k of its arguments.

struct SeriesComposer::Impl {
  enum class Kind { derivative, constant, sum, product, reciprocal };

  struct Slot {
    Kind kind;
    unsigned dx = 0, dt = 0;
    Polynomial value;               // constant
    std::vector<std::size_t> args;  // sum: any number; product: two; reciprocal: one
    Rational inv_lead;              // reciprocal
    std::vector<Polynomial> coeffs;
  };

  std::vector<Slot> slots;
  std::size_t root = 0;
  std::size_t count = 0;

  std::size_t add(Slot s) {
    slots.push_back(std::move(s));
    return slots.size() - 1;
  }

  std::size_t binary_product(std::size_t a, std::size_t b) { return add(Slot{Kind::product, 0, 0, {}, {a, b}, {}, {}}); }

  std::size_t build(const NonlinearExpr& e) {
    return std::visit(
        overloaded{
            [&](const UnknownNode& n) { return add(Slot{Kind::derivative, n.dx, n.dt, {}, {}, {}, {}}); },
            [&](const ConstantNode& n) { return add(Slot{Kind::constant, 0, 0, n.value, {}, {}, {}}); },
            [&](const SumNode& n) {
              std::vector<std::size_t> args;
              for (const auto& c : n.terms) args.push_back(build(c));
              return add(Slot{Kind::sum, 0, 0, {}, std::move(args), {}, {}});
            },
            [&](const ProductNode& n) {
              std::size_t acc = build(n.factors.front());
              for (std::size_t i = 1; i < n.factors.size(); ++i) acc = binary_product(acc, build(n.factors[i]));
              return acc;
            },
            [&](const PowerNode& n) {
              std::size_t base = build(n.base);
              if (n.exponent < 0) base = add(Slot{Kind::reciprocal, 0, 0, {}, {base}, {}, {}});
              unsigned e = static_cast<unsigned>(n.exponent < 0 ? -n.exponent : n.exponent);
              std::size_t result = 0;
              bool first = true;
              while (e) {
                if (e & 1u) {
                  result = first ? base : binary_product(result, base);
                  first = false;
                }
                e >>= 1;
                if (e) base = binary_product(base, base);
              }
              return result;
            },
        },
        e.node().value);
  }

  void step(const Polynomial& term) {
    const std::size_t k = count;
    for (auto& s : slots) {
      Polynomial c;
      switch (s.kind) {
        case Kind::derivative: c = diff(diff(term, Var::x, s.dx), Var::t, s.dt); break;
        case Kind::constant:
          if (k == 0) c = s.value;
          break;
        case Kind::sum:
          for (std::size_t a : s.args) c += slots[a].coeffs[k];
          break;
        case Kind::product: {
          const auto& a = slots[s.args[0]].coeffs;
          const auto& b = slots[s.args[1]].coeffs;
          for (std::size_t i = 0; i <= k; ++i)
            if (!a[i].is_zero() && !b[k - i].is_zero()) c += a[i] * b[k - i];
          break;
        }
        case Kind::reciprocal: {
          const auto& a = slots[s.args[0]].coeffs;
          if (k == 0) {
            if (a[0].is_zero() || !a[0].is_constant())
              throw NonInvertibleLeadingTerm("cannot invert a series with leading term " + to_string(a[0]) +
                                             " (must be a nonzero constant)");
            s.inv_lead = 1 / a[0].constant_term();
            c = Polynomial(s.inv_lead);
          } else {
            for (std::size_t j = 1; j <= k; ++j)
              if (!a[j].is_zero() && !s.coeffs[k - j].is_zero()) c += a[j] * s.coeffs[k - j];
            c *= Rational(-s.inv_lead);
          }
          break;
        }
      }
      s.coeffs.push_back(std::move(c));
    }
    ++count;
  }
};

SeriesComposer::SeriesComposer(const NonlinearExpr& n, const ComposeOptions& options) : impl_(std::make_unique<Impl>()) {
  n.validate(options.max_derivative_order);
  impl_->root = impl_->build(n);
}

SeriesComposer::~SeriesComposer() = default;
SeriesComposer::SeriesComposer(SeriesComposer&&) noexcept = default;
SeriesComposer& SeriesComposer::operator=(SeriesComposer&&) noexcept = default;

const Polynomial& SeriesComposer::push(const Polynomial& term) {
  impl_->step(term);
  return impl_->slots[impl_->root].coeffs.back();
}

std::size_t SeriesComposer::size() const { return impl_->count; }

const Polynomial& SeriesComposer::coefficient(std::size_t k) const { return impl_->slots[impl_->root].coeffs.at(k); }

std::vector<Polynomial> SeriesComposer::coefficients() const { return impl_->slots[impl_->root].coeffs; }

}  // namespace adomian
