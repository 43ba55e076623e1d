#include "adomian/truncated_series.hpp"

#include <stdexcept>
#include <string>

#include "adomian/errors.hpp"

namespace adomian {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series orders differ: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Polynomial& p, std::size_t order) {
  std::vector<Polynomial> c(order + 1);
  c[0] = p;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return TruncatedSeries(std::vector<Polynomial>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  std::vector<Polynomial> out(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  std::vector<Polynomial> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      if (!a[i].is_zero() && !b[k - i].is_zero()) out[k] += a[i] * b[k - i];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  if (a[0].is_zero() || !a[0].is_constant())
    throw NonInvertibleLeadingTerm("cannot invert a series with leading term " + to_string(a[0]) +
                                   " (must be a nonzero constant)");
  const Rational inv_lead = 1 / a[0].constant_term();
  std::vector<Polynomial> w(a.order() + 1);
  w[0] = Polynomial(inv_lead);
  for (std::size_t k = 1; k <= a.order(); ++k) {
    Polynomial acc;
    for (std::size_t j = 1; j <= k; ++j)
      if (!a[j].is_zero() && !w[k - j].is_zero()) acc += a[j] * w[k - j];
    w[k] = acc * Rational(-inv_lead);
  }
  return TruncatedSeries(std::move(w));
}

TruncatedSeries series_int_pow(const TruncatedSeries& a, int n) {
  if (n == 0) throw std::invalid_argument("series_int_pow: exponent must be nonzero");
  TruncatedSeries base = n < 0 ? series_inverse(a) : a;
  unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
  TruncatedSeries result = TruncatedSeries::constant(Polynomial(1), a.order());
  bool first = true;
  while (e) {
    if (e & 1u) {
      result = first ? base : series_mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e) base = series_mul(base, base);
  }
  return result;
}

}  // namespace adomian
