#pragma once

#include <span>
#include <vector>

#include "adomian/polynomial.hpp"

namespace adomian {

/// sum_k coeffs[k] * s^k truncated after s^order, where s is the embedding
/// parameter. The parameter never appears as a polynomial variable; it is only
/// the index here. Trailing zero coefficients are kept: the order is explicit.
class TruncatedSeries {
 public:
  /// `coeffs` must be nonempty.
  explicit TruncatedSeries(std::vector<Polynomial> coeffs);

  /// p + 0*s + ... + 0*s^order.
  static TruncatedSeries constant(const Polynomial& p, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Polynomial& operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const Polynomial> coeffs() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

/// Coefficientwise sum. Orders must match.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated at the common order. Orders must match.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// 1/a by the long-division recurrence. The leading coefficient must be a
/// nonzero constant, otherwise NonInvertibleLeadingTerm.
TruncatedSeries series_inverse(const TruncatedSeries& a);

/// a^n for any nonzero integer n (repeated squaring; inversion first for n < 0).
TruncatedSeries series_int_pow(const TruncatedSeries& a, int n);

}  // namespace adomian
