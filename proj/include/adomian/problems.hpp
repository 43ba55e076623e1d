#pragma once

#include <string>
#include <vector>

#include "adomian/problem.hpp"
#include "adomian/report.hpp"

namespace adomian {

/// heat_transfer, nems_vdw, burgers, rlw, and nems_casimir (no reference values).
std::vector<std::string> catalog_ids();

/// Built-in problem by id; throws UnknownProblem. Every returned spec has passed
/// verify_conditions.
ProblemSpec catalog(const std::string& id);

/// -sum_{k=0}^{n} (-eps)^k: the perturbation series of u'(0) for the heat
/// transfer problem, truncated after eps^n.
Rational perturbation_uprime0(unsigned n, const Rational& eps);

/// First-order ADMP slope at t = 0 with c = 1/(1+eps) against the exact value
/// u'(0) = -1/(1+eps). Requires eps != -1.
CheckReport heat_transfer_first_order_check(const Rational& eps);

}  // namespace adomian
