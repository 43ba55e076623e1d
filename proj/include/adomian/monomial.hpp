#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

#include "adomian/variable.hpp"

namespace adomian {

/// Product t^a x^b c^d eps^e packed into one 64-bit key.
///
/// Layout (high to low): total degree (16 bits), then the exponent of t, x, c and
/// eps in 12 bits each. Comparing keys is therefore graded-lexicographic order with
/// t > x > c > eps, which is also the canonical print order (largest first).
class Monomial {
 public:
  static constexpr unsigned kMaxExponent = (1u << 12) - 1;

  constexpr Monomial() = default;

  static constexpr Monomial of(Var v, unsigned e = 1) { return Monomial{}.with_exponent(v, e); }

  constexpr unsigned exponent(Var v) const {
    return static_cast<unsigned>((key_ >> shift(v)) & kMaxExponent);
  }

  constexpr unsigned degree() const { return static_cast<unsigned>(key_ >> 48); }

  constexpr bool is_one() const { return key_ == 0; }

  constexpr Monomial with_exponent(Var v, unsigned e) const {
    if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    const unsigned old = exponent(v);
    Monomial m;
    m.key_ = key_ & ~(std::uint64_t{kMaxExponent} << shift(v));
    m.key_ |= std::uint64_t{e} << shift(v);
    const std::uint64_t deg = degree() - old + e;
    m.key_ = (m.key_ & ((std::uint64_t{1} << 48) - 1)) | (deg << 48);
    return m;
  }

  friend constexpr Monomial operator*(Monomial a, Monomial b) {
    Monomial m = a;
    for (Var v : kAllVars) m = m.with_exponent(v, a.exponent(v) + b.exponent(v));
    return m;
  }

  constexpr std::uint64_t key() const { return key_; }

  static constexpr Monomial from_key(std::uint64_t key) {
    Monomial m;
    m.key_ = key;
    return m;
  }

  friend constexpr auto operator<=>(Monomial, Monomial) = default;

 private:
  static constexpr unsigned shift(Var v) { return 36 - 12 * static_cast<unsigned>(v); }

  std::uint64_t key_ = 0;
};

}  // namespace adomian
