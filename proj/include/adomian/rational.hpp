#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace adomian {

/// Arbitrary-precision rational in canonical form (positive denominator, reduced).
using Rational = mpq_class;

/// Parses `n`, `-n`, `n/d` or a finite decimal such as `0.25` or `-1.5e-3` into an
/// exact rational. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// `n` when the denominator is one, `n/d` otherwise.
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact rational value of a finite double.
Rational exact_rational(double value);

}  // namespace adomian
