#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace adomian {

/// The closed variable registry. The order here is the lexicographic tie-break
/// order of the canonical monomial ordering.
enum class Var : unsigned char { t = 0, x = 1, c = 2, eps = 3 };

inline constexpr std::size_t kVarCount = 4;
inline constexpr std::array<Var, kVarCount> kAllVars{Var::t, Var::x, Var::c, Var::eps};

constexpr std::string_view name(Var v) {
  constexpr std::array<std::string_view, kVarCount> names{"t", "x", "c", "eps"};
  return names[static_cast<std::size_t>(v)];
}

constexpr std::optional<Var> parse_var(std::string_view s) {
  for (Var v : kAllVars)
    if (name(v) == s) return v;
  return std::nullopt;
}

constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

}  // namespace adomian
