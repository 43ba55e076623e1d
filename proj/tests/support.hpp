#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "adomian/polynomial.hpp"

namespace testing {

inline adomian::Polynomial P(std::string_view s) { return adomian::parse_polynomial(s); }
inline adomian::Rational Q(std::string_view s) { return adomian::parse_rational(s); }

/// Random polynomials with small rational coefficients over the given variables.
class PolyGen {
 public:
  explicit PolyGen(unsigned seed) : rng_(seed) {}

  adomian::Rational rational(int span = 9) {
    std::uniform_int_distribution<int> num(-span, span), den(1, span);
    adomian::Rational q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }

  adomian::Polynomial poly(const std::vector<adomian::Var>& vars, unsigned max_degree, int max_terms = 5) {
    std::uniform_int_distribution<int> terms(0, max_terms), deg(0, static_cast<int>(max_degree));
    std::vector<adomian::Polynomial::Term> out;
    const int n = terms(rng_);
    for (int i = 0; i < n; ++i) {
      adomian::Monomial m;
      unsigned budget = max_degree;
      for (auto v : vars) {
        const unsigned e = std::min<unsigned>(budget, static_cast<unsigned>(deg(rng_)));
        m = m.with_exponent(v, e);
        budget -= e;
      }
      out.emplace_back(m, rational());
    }
    return adomian::Polynomial::from_terms(std::move(out));
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
};

}  // namespace testing
