#pragma once

#include <memory>
#include <span>
#include <vector>

#include "adomian/nonlinear_expr.hpp"
#include "adomian/truncated_series.hpp"

namespace adomian {

struct ComposeOptions {
  /// Upper bound on dx + dt of any derivative leaf.
  unsigned max_derivative_order = 4;
};

/// Truncated series of N(sum_k terms[k] s^k) through s^order. Coefficient k is
/// the k-th decomposition polynomial (A_k for ADM terms, B_k for ADMP terms).
/// Terms beyond `terms.size()` are taken as zero.
TruncatedSeries compose(const NonlinearExpr& n, std::span<const Polynomial> terms, std::size_t order,
                        const ComposeOptions& options = {});

/// compose(n, terms, terms.size() - 1).coeffs().
std::vector<Polynomial> adomian_list(const NonlinearExpr& n, std::span<const Polynomial> terms,
                                     const ComposeOptions& options = {});

/// Incremental form of compose used by the recursions: each pushed term adds
/// one coefficient without recomposing earlier ones. After pushing terms
/// 0..k, `coefficient(k)` equals compose(n, terms, k)[k].
class SeriesComposer {
 public:
  explicit SeriesComposer(const NonlinearExpr& n, const ComposeOptions& options = {});
  ~SeriesComposer();
  SeriesComposer(SeriesComposer&&) noexcept;
  SeriesComposer& operator=(SeriesComposer&&) noexcept;

  /// Appends the next term and returns the new highest coefficient.
  const Polynomial& push(const Polynomial& term);

  std::size_t size() const;
  const Polynomial& coefficient(std::size_t k) const;
  std::vector<Polynomial> coefficients() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace adomian
