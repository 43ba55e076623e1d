#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "adomian/problem.hpp"
#include "adomian/report.hpp"

namespace adomian {

enum class Method { adm, admp };

std::string to_string(Method m);

/// Terms u_k (ADM) or v_k(., c) with symbolic c (ADMP) of one problem.
struct SeriesSolution {
  Method method = Method::adm;
  std::string problem_id;
  std::vector<Polynomial> terms;
  /// Decomposition polynomials A_k / B_k for k = 0..order.
  std::vector<Polynomial> decomposition;

  std::size_t order() const { return terms.size() - 1; }
};

/// Classical recursion: u_0 = L^-1 f + phi, u_k = -L^-1[R u_{k-1}] - L^-1[A_{k-1}].
SeriesSolution adm_solve(const ProblemSpec& problem, std::size_t n);

/// Recursion with convergence-control parameter c (kept symbolic):
/// v_1 = -c L^-1[R v_0 + B_0],
/// v_k = -c L^-1[R v_{k-1} + B_{k-1}] - (1 - c) L^-1[R v_{k-2} + B_{k-2}].
SeriesSolution admp_solve(const ProblemSpec& problem, std::size_t n);

/// psi_m = sum_{k<=m} terms[k], with c := c_value when given.
/// Throws std::out_of_range if m > order.
Polynomial partial_sum(const SeriesSolution& sol, std::size_t m, const std::optional<Rational>& c_value = {});

/// v_0 = u_0, v_1 = c u_1, v_2 = c^2 u_2 + (1-c) u_1, v_3 = c^3 u_3 + 2c(1-c) u_2.
CheckReport relate_terms(const SeriesSolution& adm, const SeriesSolution& admp);

/// B_0 = A_0, B_1 = c A_1, B_2 = c^2 A_2 + (1-c) A_1, B_3 = c^3 A_3 + 2c(1-c) A_2.
CheckReport relate_decomposition(const SeriesSolution& adm, const SeriesSolution& admp);

/// Structured text: header lines then one `term k: <polynomial>` line per term.
std::string serialize(const SeriesSolution& sol);
SeriesSolution parse_solution(std::string_view text);

}  // namespace adomian
